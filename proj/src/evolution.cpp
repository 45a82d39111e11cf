#include "dipgpe/evolution.hpp"

#include <cmath>
#include <numbers>

#include "dipgpe/fft.hpp"
#include "dipgpe/spectral_ops.hpp"

namespace dipgpe::evolution {

namespace {

// Work buffers and cached kinetic phases for a fixed (grid, dt).
class Stepper {
public:
    Stepper(const GridSpec& g, const PhysParams& p, double dt)
        : grid_(g), params_(p), dt_(dt), spec_(g.size()), density_(g.size()),
          conv_(g.size()), half_(fft::half_spectrum_size(g)) {
        phase_full_ = kinetic_phases(dt);
        phase_half_ = kinetic_phases(0.5 * dt);
    }

    void kinetic_half(ComplexField& u) { kinetic(u, phase_half_); }
    void kinetic_full(ComplexField& u) { kinetic(u, phase_full_); }

    // u <- u e^{-i dt V(u)}; V real, computed from the current density.
    void nonlinear(ComplexField& u) {
        const std::size_t n = grid_.size();
        for (std::size_t i = 0; i < n; ++i) density_[i] = std::norm(u.values[i]);
        fft::raw_forward_r2c(grid_, density_.data(), half_.data());
        const int h1 = grid_.points(0) / 2 + 1;
        std::size_t idx = 0;
        for (int i3 = 0; i3 < grid_.points(2); ++i3) {
            const double k3 = grid_.wavenumber(2, i3);
            for (int i2 = 0; i2 < grid_.points(1); ++i2) {
                const double k2 = grid_.wavenumber(1, i2);
                for (int i1 = 0; i1 < h1; ++i1, ++idx)
                    half_[idx] *= spectral::dipolar_symbol(grid_.wavenumber(0, i1), k2, k3);
            }
        }
        fft::raw_inverse_c2r(grid_, half_.data(), conv_.data());

        const double conv_scale = 1.0 / static_cast<double>(n);
        double sup_v = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            conv_[i] = params_.lambda1 * density_[i] +
                       params_.lambda2 * conv_[i] * conv_scale;
            sup_v = std::max(sup_v, std::abs(conv_[i]));
        }
        if (sup_v * std::abs(dt_) >= std::numbers::pi)
            throw StabilityError("strang step: sup|V| dt >= pi, reduce dt");
        for (std::size_t i = 0; i < n; ++i) {
            const double phase = -dt_ * conv_[i];
            u.values[i] *= cplx(std::cos(phase), std::sin(phase));
        }
    }

private:
    cvec kinetic_phases(double tau) const {
        cvec mult(grid_.size());
        std::size_t idx = 0;
        for (int i3 = 0; i3 < grid_.points(2); ++i3) {
            const double k3 = grid_.wavenumber(2, i3);
            for (int i2 = 0; i2 < grid_.points(1); ++i2) {
                const double k2 = grid_.wavenumber(1, i2);
                for (int i1 = 0; i1 < grid_.points(0); ++i1, ++idx) {
                    const double k1 = grid_.wavenumber(0, i1);
                    const double phase = -0.5 * tau * (k1 * k1 + k2 * k2 + k3 * k3);
                    mult[idx] = cplx(std::cos(phase), std::sin(phase));
                }
            }
        }
        return mult;
    }

    void kinetic(ComplexField& u, const cvec& phases) {
        fft::raw_forward(grid_, u.values.data(), spec_.data());
        const double scale = 1.0 / static_cast<double>(grid_.size());
        for (std::size_t i = 0; i < grid_.size(); ++i) spec_[i] *= phases[i] * scale;
        fft::raw_inverse(grid_, spec_.data(), u.values.data());
    }

    GridSpec grid_;
    PhysParams params_;
    double dt_;
    cvec spec_;
    rvec density_;
    rvec conv_;
    cvec half_;
    cvec phase_full_;
    cvec phase_half_;
};

} // namespace

ComplexField strang_step(const ComplexField& u, const PhysParams& p, double dt) {
    if (dt == 0.0 || !std::isfinite(dt))
        throw DomainError("strang_step: dt must be nonzero and finite");
    Stepper stepper(u.grid, p, dt);
    ComplexField out = u;
    stepper.kinetic_half(out);
    stepper.nonlinear(out);
    stepper.kinetic_half(out);
    return out;
}

EvolutionTrace propagate(const ComplexField& u0, const PhysParams& p, double dt,
                         double t_end, const MonitorSchedule& monitors) {
    if (!(dt > 0.0)) throw DomainError("propagate: dt must be positive");
    if (t_end == 0.0) throw DomainError("propagate: t_end must be nonzero");
    const double direction = t_end > 0.0 ? 1.0 : -1.0;
    const long long n_steps = std::llround(std::abs(t_end) / dt);
    if (n_steps < 1 || std::abs(n_steps * dt - std::abs(t_end)) > 1e-9 * std::abs(t_end))
        throw DomainError("propagate: |t_end| must be an integer multiple of dt");
    const int every = monitors.every > 0 ? monitors.every : 1;

    Stepper stepper(u0.grid, p, direction * dt);
    ComplexField u = u0;

    EvolutionTrace trace;
    const FunctionalReport r0 = report(u0, p);
    trace.mass0 = r0.mass;
    trace.energy0 = r0.energy;

    double l8l4 = 0.0, prev_l44_sq = r0.l4norm4 * r0.l4norm4, prev_t = 0.0;
    auto push_row = [&](double t, const FunctionalReport& r) {
        trace.times.push_back(t);
        trace.mass_drift.push_back(std::abs(r.mass - r0.mass) / r0.mass);
        trace.energy_drift.push_back(
            std::abs(r.energy - r0.energy) /
            std::max(std::abs(r0.energy), 1e-300));
        trace.sup_norm.push_back(sup_norm(u));
        trace.l4_norm.push_back(std::pow(r.l4norm4, 0.25));
        trace.grad_norm.push_back(std::sqrt(r.kinetic));
        const double l44_sq = r.l4norm4 * r.l4norm4;
        l8l4 += 0.5 * (prev_l44_sq + l44_sq) * std::abs(t - prev_t);
        prev_l44_sq = l44_sq;
        prev_t = t;
        trace.l8l4_accum.push_back(l8l4);
    };
    auto want_snapshot = [&](double t) {
        for (double ts : monitors.snapshot_times)
            if (std::abs(direction * ts - t) < 0.25 * dt) return true;
        return false;
    };

    push_row(0.0, r0);
    if (want_snapshot(0.0)) trace.snapshots.emplace_back(0.0, u);

    const double grad0 = std::sqrt(r0.kinetic);
    long long step = 0;
    while (step < n_steps) {
        const long long block = std::min<long long>(every, n_steps - step);
        // fused block: K/2 (N K)^{block-1} N K/2
        stepper.kinetic_half(u);
        for (long long s = 0; s < block; ++s) {
            stepper.nonlinear(u);
            if (s + 1 < block)
                stepper.kinetic_full(u);
            else
                stepper.kinetic_half(u);
        }
        step += block;
        const double t = direction * static_cast<double>(step) * dt;
        const FunctionalReport r = report(u, p);
        push_row(t, r);
        if (want_snapshot(t)) trace.snapshots.emplace_back(t, u);
        if (std::sqrt(r.kinetic) > 1e3 * grad0) {
            trace.status = "gradient growth";
            return trace;
        }
    }
    if (!all_finite(u)) throw Error("propagate: non-finite samples produced");
    trace.status = "completed";
    // final state retrievable through a snapshot at t_end
    if (trace.snapshots.empty() || trace.snapshots.back().first != direction * n_steps * dt)
        if (want_snapshot(direction * n_steps * dt) || monitors.snapshot_times.empty())
            trace.snapshots.emplace_back(direction * n_steps * dt, u);
    return trace;
}

namespace {
double h1_norm(const ComplexField& f) {
    const FunctionalReport r = report(f, PhysParams(0.0, 0.0));
    return std::sqrt(r.mass + r.kinetic);
}
bool strictly_decreasing_tail(const std::vector<double>& v, std::size_t count) {
    if (v.size() < count) return false;
    for (std::size_t i = v.size() - count; i + 1 < v.size(); ++i)
        if (!(v[i] > v[i + 1])) return false;
    return true;
}
} // namespace

ScatteringReport scattering_diagnostic(const EvolutionTrace& trace, const PhysParams&) {
    if (trace.snapshots.size() < 4)
        throw InsufficientDataError("scattering_diagnostic: need at least 4 snapshots");

    ScatteringReport out;
    std::vector<ComplexField> w;
    w.reserve(trace.snapshots.size());
    for (const auto& [t, u] : trace.snapshots) {
        out.snapshot_times.push_back(t);
        w.push_back(spectral::free_propagate(u, -t));
    }
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        ComplexField diff = w[k + 1];
        for (std::size_t i = 0; i < diff.values.size(); ++i)
            diff.values[i] -= w[k].values[i];
        out.cauchy_h1.push_back(h1_norm(diff));
    }
    // accumulator increments over the same intervals
    auto accum_at = [&](double t) {
        for (std::size_t i = 0; i < trace.times.size(); ++i)
            if (std::abs(trace.times[i] - t) < 1e-9 * std::max(1.0, std::abs(t)))
                return trace.l8l4_accum[i];
        throw InsufficientDataError("scattering_diagnostic: snapshot time missing "
                                    "from monitor rows");
    };
    for (std::size_t k = 0; k + 1 < out.snapshot_times.size(); ++k)
        out.l8l4_increments.push_back(accum_at(out.snapshot_times[k + 1]) -
                                      accum_at(out.snapshot_times[k]));

    out.cauchy_decreasing = strictly_decreasing_tail(out.cauchy_h1, 3);
    out.increments_decreasing = strictly_decreasing_tail(out.l8l4_increments, 3);
    out.verdict = (out.cauchy_decreasing && out.increments_decreasing)
                      ? "consistent with scattering"
                      : "not consistent with scattering";
    return out;
}

DecayFit dispersive_decay_probe(const ComplexField& f,
                                const std::vector<double>& t_grid) {
    if (t_grid.size() < 3)
        throw InsufficientDataError("dispersive_decay_probe: need at least 3 times");
    const GridSpec& g = f.grid;
    const double l_min = std::min({g.length(0), g.length(1), g.length(2)});

    // localization precondition
    double inside = 0.0, total = 0.0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const double x1 = g.coordinate(0, i1), x2 = g.coordinate(1, i2),
                             x3 = g.coordinate(2, i3);
                const double m = std::norm(f.values[g.flat_index(i1, i2, i3)]);
                total += m;
                if (x1 * x1 + x2 * x2 + x3 * x3 < l_min * l_min / 16.0) inside += m;
            }
    if (total <= 0.0 || (total - inside) / total > 1e-8)
        throw DomainError("dispersive_decay_probe: field not localized within the "
                          "L/4 ball");

    const double t_wrap = l_min * l_min / (8.0 * std::numbers::pi);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0)) throw WindowError("dispersive_decay_probe: t must be > 0");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw DomainError("dispersive_decay_probe: t grid must be increasing");
        if (t_grid[i] > t_wrap)
            throw WindowError("dispersive_decay_probe: t beyond the pre-wraparound "
                              "window L^2/(8 pi)");
    }

    DecayFit fit;
    fit.times = t_grid;
    for (double t : t_grid) {
        const ComplexField ut = spectral::free_propagate(f, t);
        fit.sup_norms.push_back(sup_norm(ut));
    }
    for (std::size_t i = 0; i + 1 < fit.sup_norms.size(); ++i)
        if (!(fit.sup_norms[i + 1] < fit.sup_norms[i]))
            throw WindowError("dispersive_decay_probe: sup-norm stopped decreasing "
                              "(wrap-around detected)");

    // least-squares slope in log-log coordinates
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double x = std::log(t_grid[i]), y = std::log(fit.sup_norms[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

} // namespace dipgpe::evolution
