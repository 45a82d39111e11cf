#include "dipgpe/spectral_ops.hpp"

#include <cmath>
#include <numbers>

#include "dipgpe/fft.hpp"

namespace dipgpe::spectral {

namespace {

std::array<std::vector<double>, 3> axis_wavenumbers(const GridSpec& g) {
    std::array<std::vector<double>, 3> k;
    for (int a = 0; a < 3; ++a) {
        k[a].resize(g.points(a));
        for (int i = 0; i < g.points(a); ++i) k[a][i] = g.wavenumber(a, i);
    }
    return k;
}

} // namespace

double dipolar_symbol(double xi1, double xi2, double xi3) {
    const double q = xi1 * xi1 + xi2 * xi2 + xi3 * xi3;
    if (q == 0.0) return 0.0;
    constexpr double four_pi_thirds = 4.0 * std::numbers::pi / 3.0;
    return four_pi_thirds * (2.0 * xi3 * xi3 - xi1 * xi1 - xi2 * xi2) / q;
}

std::vector<double> dipolar_multiplier(const GridSpec& g) {
    const auto k = axis_wavenumbers(g);
    std::vector<double> out(g.size());
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1, ++idx)
                out[idx] = dipolar_symbol(k[0][i1], k[1][i2], k[2][i3]);
    return out;
}

ComplexField dipolar_convolve(const ComplexField& w) {
    const GridSpec& g = w.grid;
    double sup = 0.0, sup_imag = 0.0;
    for (const cplx& v : w.values) {
        sup = std::max(sup, std::abs(v));
        sup_imag = std::max(sup_imag, std::abs(v.imag()));
    }
    if (sup_imag > 1e-12 * sup)
        throw DomainError("dipolar_convolve: input must be a real density |u|^2, "
                          "got a field with non-negligible imaginary part");

    rvec real_in(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) real_in[i] = w.values[i].real();

    cvec half(fft::half_spectrum_size(g));
    fft::raw_forward_r2c(g, real_in.data(), half.data());

    const auto k = axis_wavenumbers(g);
    const int h1 = g.points(0) / 2 + 1;
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < h1; ++i1, ++idx)
                half[idx] *= dipolar_symbol(k[0][i1], k[1][i2], k[2][i3]);

    rvec real_out(g.size());
    fft::raw_inverse_c2r(g, half.data(), real_out.data());

    ComplexField out(g);
    const double scale = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out.values[i] = real_out[i] * scale;
    return out;
}

ComplexField riesz_apply(const ComplexField& f, int axis) {
    if (axis < 0 || axis > 2) throw DomainError("riesz_apply: axis must be 0, 1 or 2");
    const GridSpec& g = f.grid;
    const auto k = axis_wavenumbers(g);
    cvec spec(g.size());
    fft::raw_forward(g, f.values.data(), spec.data());
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1, ++idx) {
                const double x1 = k[0][i1], x2 = k[1][i2], x3 = k[2][i3];
                const double mag = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
                const double comp = axis == 0 ? x1 : axis == 1 ? x2 : x3;
                // symbol -i xi_j / |xi|, zero mode annihilated
                spec[idx] *= (mag == 0.0) ? cplx(0.0, 0.0) : cplx(0.0, -comp / mag);
            }
    ComplexField out(g);
    fft::raw_inverse(g, spec.data(), out.values.data());
    const double scale = 1.0 / static_cast<double>(g.size());
    for (cplx& v : out.values) v *= scale;
    return out;
}

std::array<ComplexField, 3> gradient(const ComplexField& f) {
    const GridSpec& g = f.grid;
    const auto k = axis_wavenumbers(g);
    cvec spec(g.size()), work(g.size());
    fft::raw_forward(g, f.values.data(), spec.data());
    const double scale = 1.0 / static_cast<double>(g.size());

    std::array<ComplexField, 3> out{ComplexField(g), ComplexField(g), ComplexField(g)};
    for (int a = 0; a < 3; ++a) {
        std::size_t idx = 0;
        for (int i3 = 0; i3 < g.points(2); ++i3)
            for (int i2 = 0; i2 < g.points(1); ++i2)
                for (int i1 = 0; i1 < g.points(0); ++i1, ++idx) {
                    const double comp = a == 0 ? k[0][i1] : a == 1 ? k[1][i2] : k[2][i3];
                    work[idx] = spec[idx] * cplx(0.0, comp);
                }
        fft::raw_inverse(g, work.data(), out[a].values.data());
        for (cplx& v : out[a].values) v *= scale;
    }
    return out;
}

ComplexField laplacian(const ComplexField& f) {
    const GridSpec& g = f.grid;
    const auto k = axis_wavenumbers(g);
    cvec spec(g.size());
    fft::raw_forward(g, f.values.data(), spec.data());
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1, ++idx) {
                const double x1 = k[0][i1], x2 = k[1][i2], x3 = k[2][i3];
                spec[idx] *= -(x1 * x1 + x2 * x2 + x3 * x3);
            }
    ComplexField out(g);
    fft::raw_inverse(g, spec.data(), out.values.data());
    const double scale = 1.0 / static_cast<double>(g.size());
    for (cplx& v : out.values) v *= scale;
    return out;
}

cplx integrate(const ComplexField& f) {
    cplx sum(0.0, 0.0);
    for (const cplx& v : f.values) sum += v;
    return sum * f.grid.cell_volume();
}

ComplexField translate(const ComplexField& f, std::array<int, 3> shift) {
    const GridSpec& g = f.grid;
    ComplexField out(g);
    const int n1 = g.points(0), n2 = g.points(1), n3 = g.points(2);
    auto wrap = [](int i, int n) { int r = i % n; return r < 0 ? r + n : r; };
    // out(x) = f(x - shift*h): node j reads from node j - shift
    for (int i3 = 0; i3 < n3; ++i3) {
        const int s3 = wrap(i3 - shift[2], n3);
        for (int i2 = 0; i2 < n2; ++i2) {
            const int s2 = wrap(i2 - shift[1], n2);
            for (int i1 = 0; i1 < n1; ++i1) {
                const int s1 = wrap(i1 - shift[0], n1);
                out.values[g.flat_index(i1, i2, i3)] = f.values[g.flat_index(s1, s2, s3)];
            }
        }
    }
    return out;
}

ComplexField free_propagate(const ComplexField& f, double t) {
    const GridSpec& g = f.grid;
    const auto k = axis_wavenumbers(g);
    cvec spec(g.size());
    fft::raw_forward(g, f.values.data(), spec.data());
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1, ++idx) {
                const double x1 = k[0][i1], x2 = k[1][i2], x3 = k[2][i3];
                const double phase = -0.5 * t * (x1 * x1 + x2 * x2 + x3 * x3);
                spec[idx] *= cplx(std::cos(phase), std::sin(phase));
            }
    ComplexField out(g);
    fft::raw_inverse(g, spec.data(), out.values.data());
    const double scale = 1.0 / static_cast<double>(g.size());
    for (cplx& v : out.values) v *= scale;
    return out;
}

ComplexField translate_spectral(const ComplexField& f, std::array<double, 3> shift) {
    const GridSpec& g = f.grid;
    const auto k = axis_wavenumbers(g);
    cvec spec(g.size());
    fft::raw_forward(g, f.values.data(), spec.data());
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1, ++idx) {
                const double phase =
                    -(k[0][i1] * shift[0] + k[1][i2] * shift[1] + k[2][i3] * shift[2]);
                spec[idx] *= cplx(std::cos(phase), std::sin(phase));
            }
    ComplexField out(g);
    fft::raw_inverse(g, spec.data(), out.values.data());
    const double scale = 1.0 / static_cast<double>(g.size());
    for (cplx& v : out.values) v *= scale;
    return out;
}

double spectral_tail_fraction(const ComplexField& f) {
    const GridSpec& g = f.grid;
    cvec spec(g.size());
    fft::raw_forward(g, f.values.data(), spec.data());
    double total = 0.0, tail = 0.0;
    std::size_t idx = 0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1, ++idx) {
                const double e = std::norm(spec[idx]);
                total += e;
                const bool outer =
                    std::abs(g.signed_index(0, i1)) > g.points(0) / 4 ||
                    std::abs(g.signed_index(1, i2)) > g.points(1) / 4 ||
                    std::abs(g.signed_index(2, i3)) > g.points(2) / 4;
                if (outer) tail += e;
            }
    return total == 0.0 ? 0.0 : tail / total;
}

} // namespace dipgpe::spectral
