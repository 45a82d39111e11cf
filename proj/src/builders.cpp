#include "dipgpe/builders.hpp"

#include <cmath>

#include "dipgpe/fft.hpp"

namespace dipgpe::builders {

ComplexField gaussian(const GridSpec& g, double amplitude,
                      std::array<double, 3> widths, std::array<double, 3> center,
                      std::array<double, 3> phase_velocity) {
    ComplexField out(g);
    for (int i3 = 0; i3 < g.points(2); ++i3) {
        const double x3 = g.coordinate(2, i3) - center[2];
        for (int i2 = 0; i2 < g.points(1); ++i2) {
            const double x2 = g.coordinate(1, i2) - center[1];
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const double x1 = g.coordinate(0, i1) - center[0];
                const double q = x1 * x1 / (2 * widths[0] * widths[0]) +
                                 x2 * x2 / (2 * widths[1] * widths[1]) +
                                 x3 * x3 / (2 * widths[2] * widths[2]);
                const double phase = phase_velocity[0] * (x1 + center[0]) +
                                     phase_velocity[1] * (x2 + center[1]) +
                                     phase_velocity[2] * (x3 + center[2]);
                out.values[g.flat_index(i1, i2, i3)] =
                    amplitude * std::exp(-q) * cplx(std::cos(phase), std::sin(phase));
            }
        }
    }
    return out;
}

ComplexField radial_gaussian(const GridSpec& g, double amplitude, double width) {
    return gaussian(g, amplitude, {width, width, width});
}

ComplexField bump(const GridSpec& g, double amplitude, double radius,
                  std::array<double, 3> center) {
    ComplexField out(g);
    for (int i3 = 0; i3 < g.points(2); ++i3) {
        const double x3 = g.coordinate(2, i3) - center[2];
        for (int i2 = 0; i2 < g.points(1); ++i2) {
            const double x2 = g.coordinate(1, i2) - center[1];
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const double x1 = g.coordinate(0, i1) - center[0];
                const double s = (x1 * x1 + x2 * x2 + x3 * x3) / (radius * radius);
                out.values[g.flat_index(i1, i2, i3)] =
                    s < 1.0 ? amplitude * std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0;
            }
        }
    }
    return out;
}

ComplexField gaussian_mixture(const GridSpec& g, std::mt19937_64& rng, int terms,
                              double span, double base_width, double amplitude) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ComplexField out(g);
    for (int t = 0; t < terms; ++t) {
        const std::array<double, 3> c = {span * (2 * unit(rng) - 1),
                                         span * (2 * unit(rng) - 1),
                                         span * (2 * unit(rng) - 1)};
        const std::array<double, 3> w = {base_width * (0.6 + 0.8 * unit(rng)),
                                         base_width * (0.6 + 0.8 * unit(rng)),
                                         base_width * (0.6 + 0.8 * unit(rng))};
        const double a = amplitude * (0.3 + 0.7 * unit(rng));
        const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
        ComplexField part = gaussian(g, a, w, c);
        const cplx rot(std::cos(theta), std::sin(theta));
        for (std::size_t i = 0; i < g.size(); ++i) out.values[i] += rot * part.values[i];
    }
    return out;
}

ComplexField random_band_limited(const GridSpec& g, std::mt19937_64& rng,
                                 double band_fraction) {
    std::normal_distribution<double> normal(0.0, 1.0);
    cvec spec(g.size(), cplx(0.0, 0.0));
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const bool keep =
                    std::abs(g.signed_index(0, i1)) <= band_fraction * g.points(0) / 2 &&
                    std::abs(g.signed_index(1, i2)) <= band_fraction * g.points(1) / 2 &&
                    std::abs(g.signed_index(2, i3)) <= band_fraction * g.points(2) / 2;
                if (keep)
                    spec[g.flat_index(i1, i2, i3)] = cplx(normal(rng), normal(rng));
            }
    ComplexField out(g);
    fft::raw_inverse(g, spec.data(), out.values.data());
    const double scale = 1.0 / static_cast<double>(g.size());
    for (cplx& v : out.values) v *= scale;
    return out;
}

} // namespace dipgpe::builders
