#include "dipgpe/fft.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace dipgpe::fft {

namespace {

// One cached plan set per grid extent. Plans are built once on scratch
// buffers and re-executed on caller arrays via the new-array interface;
// all field storage uses FftwAllocator, so alignment always matches.
struct PlanSet {
    std::array<int, 3> n{};
    fftw_plan c2c_fwd = nullptr;
    fftw_plan c2c_bwd = nullptr;
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;

    explicit PlanSet(std::array<int, 3> extents) : n(extents) {
        const std::size_t total = static_cast<std::size_t>(n[0]) * n[1] * n[2];
        const std::size_t half =
            static_cast<std::size_t>(n[2]) * n[1] * (n[0] / 2 + 1);
        cvec a(total), b(total);
        rvec r(total);
        cvec h(half);
        // Storage is x1-fastest; FFTW's last dimension is contiguous, so the
        // extents are passed reversed.
        c2c_fwd = fftw_plan_dft_3d(n[2], n[1], n[0],
                                   reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()),
                                   FFTW_FORWARD, FFTW_ESTIMATE);
        c2c_bwd = fftw_plan_dft_3d(n[2], n[1], n[0],
                                   reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()),
                                   FFTW_BACKWARD, FFTW_ESTIMATE);
        r2c = fftw_plan_dft_r2c_3d(n[2], n[1], n[0], r.data(),
                                   reinterpret_cast<fftw_complex*>(h.data()),
                                   FFTW_ESTIMATE);
        c2r = fftw_plan_dft_c2r_3d(n[2], n[1], n[0],
                                   reinterpret_cast<fftw_complex*>(h.data()),
                                   r.data(), FFTW_ESTIMATE);
        if (!c2c_fwd || !c2c_bwd || !r2c || !c2r)
            throw Error("fft: plan creation failed");
    }

    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;

    ~PlanSet() {
        if (c2c_fwd) fftw_destroy_plan(c2c_fwd);
        if (c2c_bwd) fftw_destroy_plan(c2c_bwd);
        if (r2c) fftw_destroy_plan(r2c);
        if (c2r) fftw_destroy_plan(c2r);
    }
};

const PlanSet& plans_for(const GridSpec& g) {
    static std::map<std::array<int, 3>, PlanSet> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(g.points());
    if (it == cache.end())
        it = cache.try_emplace(g.points(), g.points()).first;
    return it->second;
}

} // namespace

void raw_forward(const GridSpec& g, const cplx* in, cplx* out) {
    fftw_execute_dft(plans_for(g).c2c_fwd,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void raw_inverse(const GridSpec& g, const cplx* in, cplx* out) {
    fftw_execute_dft(plans_for(g).c2c_bwd,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

std::size_t half_spectrum_size(const GridSpec& g) {
    return static_cast<std::size_t>(g.points(2)) * g.points(1) * (g.points(0) / 2 + 1);
}

void raw_forward_r2c(const GridSpec& g, const double* in, cplx* out) {
    fftw_execute_dft_r2c(plans_for(g).r2c, const_cast<double*>(in),
                         reinterpret_cast<fftw_complex*>(out));
}

void raw_inverse_c2r(const GridSpec& g, cplx* in, double* out) {
    fftw_execute_dft_c2r(plans_for(g).c2r, reinterpret_cast<fftw_complex*>(in), out);
}

SpectralField forward(const ComplexField& u) {
    SpectralField out(u.grid);
    raw_forward(u.grid, u.values.data(), out.coeffs.data());
    const double scale = u.grid.cell_volume();
    for (cplx& c : out.coeffs) c *= scale;
    return out;
}

ComplexField inverse(const SpectralField& uhat) {
    ComplexField out(uhat.grid);
    raw_inverse(uhat.grid, uhat.coeffs.data(), out.values.data());
    const double scale = 1.0 / uhat.grid.volume();
    for (cplx& v : out.values) v *= scale;
    return out;
}

} // namespace dipgpe::fft
