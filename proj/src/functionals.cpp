#include "dipgpe/functionals.hpp"

#include <cmath>
#include <numbers>

#include "dipgpe/fft.hpp"
#include "dipgpe/spectral_ops.hpp"

namespace dipgpe {

namespace {
constexpr double kFourPiThirds = 4.0 * std::numbers::pi / 3.0;
constexpr double kEightPiThirds = 8.0 * std::numbers::pi / 3.0;
} // namespace

Regime classify_regime(double lambda1, double lambda2) {
    if (!std::isfinite(lambda1) || !std::isfinite(lambda2))
        throw DomainError("classify_regime: parameters must be finite");
    if (lambda2 > 0.0) {
        const double edge = lambda1 - kFourPiThirds * lambda2;
        if (edge < 0.0) return Regime::Unstable;
        if (edge > 0.0) return Regime::Stable;
        return Regime::Boundary;
    }
    if (lambda2 < 0.0) {
        const double edge = lambda1 + kEightPiThirds * lambda2;
        if (edge < 0.0) return Regime::Unstable;
        if (edge > 0.0) return Regime::Stable;
        return Regime::Boundary;
    }
    // lambda2 = 0 is not covered by either inequality set; the dichotomy
    // assumes a nonzero dipolar coupling.
    return Regime::Boundary;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Unstable: return "unstable";
        case Regime::Stable: return "stable";
        default: return "boundary";
    }
}

namespace {

// Accumulates the Fourier-side quadratic forms of the density w = |u|^2 over
// the half spectrum: sum of (lambda1 + lambda2 Khat)|what|^2 and its pieces.
// Bins with 0 < i1 < n1/2 stand for a conjugate pair and weigh twice.
struct DensityForms {
    double plain = 0.0;   // sum |what|^2        -> |u|_4^4 via Parseval
    double dipolar = 0.0; // sum Khat |what|^2   -> int (K*w) w
};

DensityForms density_forms(const ComplexField& u) {
    const GridSpec& g = u.grid;
    rvec w(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) w[i] = std::norm(u.values[i]);

    cvec half(fft::half_spectrum_size(g));
    fft::raw_forward_r2c(g, w.data(), half.data());

    DensityForms forms;
    const int h1 = g.points(0) / 2 + 1;
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3) {
        const double k3 = g.wavenumber(2, i3);
        for (int i2 = 0; i2 < g.points(1); ++i2) {
            const double k2 = g.wavenumber(1, i2);
            for (int i1 = 0; i1 < h1; ++i1, ++idx) {
                const double k1 = g.wavenumber(0, i1);
                const double weight = (i1 == 0 || i1 == g.points(0) / 2) ? 1.0 : 2.0;
                const double e = weight * std::norm(half[idx]);
                forms.plain += e;
                forms.dipolar += e * spectral::dipolar_symbol(k1, k2, k3);
            }
        }
    }
    // raw DFT -> continuum normalization: |what|^2 scales by h^6 and the sum
    // carries 1/V, together h^6/V = h^3/N.
    const double scale = g.cell_volume() / static_cast<double>(g.size());
    forms.plain *= scale;
    forms.dipolar *= scale;
    return forms;
}

} // namespace

PotentialSplit potential_energy(const ComplexField& u, const PhysParams& p) {
    const GridSpec& g = u.grid;

    double l4 = 0.0;
    for (const cplx& v : u.values) {
        const double a2 = std::norm(v);
        l4 += a2 * a2;
    }
    l4 *= g.cell_volume();

    // physical-space dipolar term
    ComplexField w(g);
    for (std::size_t i = 0; i < g.size(); ++i) w.values[i] = std::norm(u.values[i]);
    ComplexField kw = spectral::dipolar_convolve(w);
    double dip = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) dip += kw.values[i].real() * w.values[i].real();
    dip *= g.cell_volume();

    const DensityForms forms = density_forms(u);

    PotentialSplit out;
    out.quartic_part = p.lambda1 * l4;
    out.dipolar_part = p.lambda2 * dip;
    out.physical = out.quartic_part + out.dipolar_part;
    out.fourier = p.lambda1 * forms.plain + p.lambda2 * forms.dipolar;
    return out;
}

FunctionalReport report(const ComplexField& u, const PhysParams& p) {
    const GridSpec& g = u.grid;
    FunctionalReport r;

    double mass = 0.0, l4 = 0.0;
    for (const cplx& v : u.values) {
        const double a2 = std::norm(v);
        mass += a2;
        l4 += a2 * a2;
    }
    r.mass = mass * g.cell_volume();
    r.l4norm4 = l4 * g.cell_volume();

    // kinetic energy and momentum from one spectrum pass
    cvec spec(g.size());
    fft::raw_forward(g, u.values.data(), spec.data());
    double kin = 0.0;
    std::array<double, 3> mom = {0.0, 0.0, 0.0};
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3) {
        const double k3 = g.wavenumber(2, i3);
        for (int i2 = 0; i2 < g.points(1); ++i2) {
            const double k2 = g.wavenumber(1, i2);
            for (int i1 = 0; i1 < g.points(0); ++i1, ++idx) {
                const double k1 = g.wavenumber(0, i1);
                const double e = std::norm(spec[idx]);
                kin += e * (k1 * k1 + k2 * k2 + k3 * k3);
                mom[0] += e * k1;
                mom[1] += e * k2;
                mom[2] += e * k3;
            }
        }
    }
    // h^6 |DFT|^2 summed with 1/V
    const double spec_scale =
        g.cell_volume() * g.cell_volume() / g.volume();
    r.kinetic = kin * spec_scale;
    for (int a = 0; a < 3; ++a) r.momentum[a] = mom[a] * spec_scale;

    const DensityForms forms = density_forms(u);
    r.potential = p.lambda1 * forms.plain + p.lambda2 * forms.dipolar;

    r.energy = 0.5 * r.kinetic + 0.5 * r.potential;
    r.g = r.kinetic + 1.5 * r.potential;
    return r;
}

double weinstein_J(const ComplexField& v, const PhysParams& p) {
    const FunctionalReport r = report(v, p);
    if (r.mass <= 0.0) throw DomainError("weinstein_J: field must be nonzero");
    if (r.potential >= 0.0)
        throw DomainError("weinstein_J: potential energy must be negative "
                          "(quotient undefined for this trial function)");
    return std::pow(r.kinetic, 1.5) * std::sqrt(r.mass) / (-r.potential);
}

} // namespace dipgpe
