#pragma once

#include <optional>
#include <vector>

#include "dipgpe/functionals.hpp"

namespace dipgpe::scaling {

//==============================================================================
// Scaling families of the mass-preserving fiber u^mu(x) = mu^{3/2} u(mu x),
// the anisotropic instability scaling, the Galilean boost and the
// scattering-condition checks.
//
// All fiber quantities are evaluated analytically from one pair (T, P):
//   E(u^mu) = mu^2/2 T + mu^3/2 P,   G(u^mu) = mu^2 T + 3/2 mu^3 P,
// never by resampling the grid.
//==============================================================================

// a * v(b x) realized exactly: same samples scaled by a on the box shrunk
// by b. Every functional transforms by its exact scaling power.
ComplexField rescale(const ComplexField& v, double a, double b);

// Closed-form root of G(u^mu) = 0: mu* = -2T/(3P). Throws NoRootError when
// P >= 0.
double mu_star(double kinetic, double potential);

struct FiberProfile {
    std::vector<double> mu_grid;
    std::vector<double> e_values;
    std::vector<double> g_values;
    std::optional<double> mu_star;
    double kinetic = 0.0;
    double potential = 0.0;
};

// Fiber values on an explicit grid of mu (positive, sorted ascending).
FiberProfile fiber_profile(const ComplexField& u, const PhysParams& p,
                           const std::vector<double>& mu_grid);

// Default fiber grid: 129 geometric points on [mu*/8, 8 mu*].
std::vector<double> default_mu_grid(double mu_star_value, int count = 129);

struct GrowthCheck {
    bool unique_root = false;       // one sign change of G along the fiber
    bool concave_beyond_root = false;
    bool root_below_one_iff_g_negative = false;
    bool root_at_one_iff_g_zero = false;
    bool sign_table = false;        // G > 0 before mu*, G < 0 after
    bool energy_max_at_root = false;
    bool derivative_identity = false; // dE/dmu = G(u^mu)/mu
    double mu_star = 0.0;
    double mu_star_grid = 0.0;      // from dense-grid sign change
    bool all() const {
        return unique_root && concave_beyond_root && root_below_one_iff_g_negative &&
               root_at_one_iff_g_zero && sign_table && energy_max_at_root &&
               derivative_identity;
    }
};

GrowthCheck verify_growth_lemma(const ComplexField& u, const PhysParams& p);

// Potential energy of the mass-preserving anisotropic scaling
// u^mu = mu u(mu^{1/2} x1, mu^{1/2} x2, mu x3), evaluated in Fourier space
// with the rescaled multiplier (no resampling).
double aniso_rescale_potential(const ComplexField& u, const PhysParams& p, double mu);

// e^{i v.x} u: the t = 0 slice of the Galilean transformation.
ComplexField galilean_boost(const ComplexField& u, std::array<double, 3> v);

// Full frame change at time t for the i d_t + (1/2) Lap normalization:
// e^{i(v.x - |v|^2 t/2)} u(x - v t). Shift applied spectrally.
ComplexField galilean_frame(const ComplexField& u_at_t, std::array<double, 3> v,
                            double t);

struct ConditionReport {
    double mass = 0.0;
    double energy = 0.0;
    double g = 0.0;
    double gamma_c = 0.0;
    bool energy_below_threshold = false;
    bool g_positive = false;
    std::optional<double> alpha; // 4 min{gamma(c)-E, E} when both hold
};

ConditionReport check_scattering_conditions(const ComplexField& u0, const PhysParams& p,
                                            double gamma_c);

} // namespace dipgpe::scaling
