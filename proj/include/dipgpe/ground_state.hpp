#pragma once

#include <vector>

#include "dipgpe/functionals.hpp"

namespace dipgpe::ground_state {

//==============================================================================
// Weinstein minimization and the rescaling chain to the stationary state Q.
//
// The quotient J is minimized by projected gradient descent with a
// backtracking line search; after every accepted step the iterate is pulled
// back to |v|_2 = |grad v|_2 = 1 by the exact two-parameter rescale
// a v(b x), which leaves J unchanged. At such a point the gradient is
//     grad J = m (-3 Lap v + v) + 4 m^2 (lambda1 |v|^2 + lambda2 K*|v|^2) v,
// so a vanishing gradient is exactly the stationary equation for v_m; the
// chain Q(x) = 2 sqrt(m) v_m(sqrt(6) x) then solves
//     -1/2 Lap Q + lambda1 |Q|^2 Q + lambda2 (K*|Q|^2) Q + Q = 0.
//==============================================================================

// Exact (a, b) normalization to unit mass and unit kinetic norm.
ComplexField normalize_mass_kinetic(const ComplexField& v);

// grad J at a normalized point with m = J(v).
ComplexField weinstein_gradient(const ComplexField& v, const PhysParams& p, double m);

struct DescentResult {
    ComplexField v_m;
    double m = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> j_trace; // J after every accepted step, non-increasing
};

// Minimizes J from `init`. Requires P(init) < 0 and a regime admitting
// negative potential energy (not Stable). Throws DomainError /
// NonConvergenceError accordingly.
DescentResult minimize_weinstein(const PhysParams& p, const ComplexField& init,
                                 double tol = 1e-10, int max_iters = 20000);

struct QResult {
    ComplexField Q;
    double pde_residual = 0.0;      // |eq(Q)|_2 / |Q|_2
    double pohozaev_residual = 0.0; // |G(Q)| / T(Q)
};

// The rescaling chain applied to a normalized minimizer. Throws
// ResampleError when v_m is not spectrally resolved.
QResult build_Q(const ComplexField& v_m, double m, const PhysParams& p);

struct GroundStateRecord {
    ComplexField v_m;
    ComplexField Q;
    PhysParams params;
    double m = 0.0;
    double mass_Q = 0.0;
    double kinetic_Q = 0.0;
    double energy_Q = 0.0;
    double gamma_unit_mass = 0.0; // gamma(1) = M(Q) T(Q) / 6
    double pde_residual = 0.0;
    double pohozaev_residual = 0.0;
};

GroundStateRecord compute_record(const PhysParams& p, const ComplexField& init,
                                 double tol = 1e-10, int max_iters = 20000);

// Threshold at mass c through the scaling family Q_mu:
// mu = |Q|_2^2 / c, gamma(c) = (mu/6) |grad Q|_2^2. Satisfies
// gamma(c) c = gamma(1).
double gamma_of_c(const GroundStateRecord& record, double c);

// Anisotropic Gaussian initial guess aligned with the dipole axis.
ComplexField default_init(const GridSpec& g, const PhysParams& p);

struct HrReport {
    bool threshold_route = false; // E < gamma(c) and G > 0
    bool hr_route = false;        // HR-style mass/energy and norm products
    bool agree = false;
    double mass_energy = 0.0;
    double mass_energy_Q = 0.0;
    double mass_kinetic = 0.0;
    double mass_kinetic_Q = 0.0;
};

HrReport check_equivalence_hr(const ComplexField& u0, const GroundStateRecord& record);

} // namespace dipgpe::ground_state
