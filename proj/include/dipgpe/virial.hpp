#pragma once

#include <vector>

#include "dipgpe/functionals.hpp"

namespace dipgpe::virial {

//==============================================================================
// Localized variance machinery.
//
//   z_R(t)    = R^2 int chi(x/R) |u|^2
//   dz_R/dt   = 2 Im { R int grad chi(x/R) . grad u conj(u) }       (as displayed)
//   d2z/dt2   = A - 2 lambda2 R B, assembled from the four interior/shell
//               integrals, with B = int grad chi(x/R) . grad(K*|u|^2) |u|^2.
//
// The derivative formulas are implemented exactly as displayed in the source
// identities; they are mutually consistent (finite differences of dz/dt along
// a trajectory reproduce A - 2 lambda2 R B, and for interior-supported fields
// the total equals 4 G(u)).
//
// The cutoff profile is chi(y) = |y|^2 for |y| <= 1, a quintic transition on
// 1 <= |y| <= 2 matching value and two derivatives at 1 and flat (three zero
// derivatives) at 2, and a constant plateau beyond 2. All derivatives that
// appear in the identities vanish on the plateau.
//==============================================================================

class CutoffSpec {
public:
    explicit CutoffSpec(double R);

    double R() const { return R_; }

    // radial profile and derivatives as functions of rho = |x|/R
    double chi(double rho) const;
    double chi_d1(double rho) const;
    double chi_d2(double rho) const;
    double chi_d3(double rho) const;
    double chi_d4(double rho) const;

    double laplacian(double rho) const;   // chi'' + 2 chi'/rho
    double bilaplacian(double rho) const; // chi'''' + 4 chi'''/rho

    double plateau() const { return plateau_; }

    // max of |chi''| and |chi'/rho| over the transition shell
    double hessian_bound() const;

private:
    double R_;
    std::array<double, 6> a_{}; // quintic coefficients on [1, 2]
    double plateau_ = 0.0;
};

struct VirialDerivatives {
    double z = 0.0;
    double dz_dt = 0.0;
};

VirialDerivatives z_and_derivative(const ComplexField& u, const CutoffSpec& cut);

struct VirialSplit {
    double A = 0.0;
    double B = 0.0;
    double total = 0.0; // A - 2 lambda2 R B
};

VirialSplit second_derivative_decomposition(const ComplexField& u, const PhysParams& p,
                                            const CutoffSpec& cut);

struct ErrorBudget {
    double eps1 = 0.0; // exterior integral beyond R
    double eps2 = 0.0; // exterior integral beyond R/10 (matched-scale radius)
};

ErrorBudget error_budget(const ComplexField& u, const CutoffSpec& cut);

struct ScanRow {
    double R = 0.0;
    double total = 0.0;
    double four_g = 0.0;
    double gap = 0.0;  // |total - 4G|
    double eps1 = 0.0;
    double eps2 = 0.0;
};

std::vector<ScanRow> virial_convergence_scan(const ComplexField& u, const PhysParams& p,
                                             const std::vector<double>& r_list);

} // namespace dipgpe::virial
