#include "dipgpe/ground_state.hpp"

#include <cmath>

#include "dipgpe/builders.hpp"
#include "dipgpe/scaling.hpp"
#include "dipgpe/spectral_ops.hpp"

namespace dipgpe::ground_state {

ComplexField normalize_mass_kinetic(const ComplexField& v) {
    const FunctionalReport r = report(v, PhysParams(0.0, 0.0));
    if (r.mass <= 0.0 || r.kinetic <= 0.0)
        throw DomainError("normalize_mass_kinetic: field must have nonzero mass "
                          "and kinetic norm");
    const double b = std::sqrt(r.mass / r.kinetic);
    const double a = std::pow(r.mass, 0.25) / std::pow(r.kinetic, 0.75);
    return scaling::rescale(v, a, b);
}

ComplexField weinstein_gradient(const ComplexField& v, const PhysParams& p, double m) {
    const GridSpec& g = v.grid;
    ComplexField lap = spectral::laplacian(v);

    ComplexField density(g);
    for (std::size_t i = 0; i < g.size(); ++i) density.values[i] = std::norm(v.values[i]);
    ComplexField conv = spectral::dipolar_convolve(density);

    ComplexField grad(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double pot = p.lambda1 * density.values[i].real() +
                           p.lambda2 * conv.values[i].real();
        grad.values[i] = m * (-3.0 * lap.values[i] + v.values[i]) +
                         4.0 * m * m * pot * v.values[i];
    }
    return grad;
}

DescentResult minimize_weinstein(const PhysParams& p, const ComplexField& init,
                                 double tol, int max_iters) {
    if (p.regime == Regime::Stable)
        throw DomainError("minimize_weinstein: no minimizer in the stable regime "
                          "(potential energy is nonnegative there)");
    if (!(tol > 0.0)) throw DomainError("minimize_weinstein: tol must be positive");
    {
        const PotentialSplit ps = potential_energy(init, p);
        if (ps.physical >= 0.0)
            throw DomainError("minimize_weinstein: initial guess has P >= 0; "
                              "the quotient is undefined there");
    }

    DescentResult result{normalize_mass_kinetic(init)};
    result.m = weinstein_J(result.v_m, p);
    result.j_trace.push_back(result.m);

    double step = 0.1;
    for (int iter = 0; iter < max_iters; ++iter) {
        result.iterations = iter + 1;
        const ComplexField grad = weinstein_gradient(result.v_m, p, result.m);

        bool accepted = false;
        double j_new = result.m;
        ComplexField candidate(result.v_m.grid);
        for (int halving = 0; halving < 40; ++halving) {
            for (std::size_t i = 0; i < candidate.values.size(); ++i)
                candidate.values[i] = result.v_m.values[i] - step * grad.values[i];
            try {
                const double j = weinstein_J(candidate, p);
                if (j < result.m) {
                    j_new = j;
                    accepted = true;
                    break;
                }
            } catch (const DomainError&) {
                // stepped out of {P < 0}; shorten
            }
            step *= 0.5;
        }
        if (!accepted) {
            // no descent direction at line-search resolution: stationary
            result.converged = true;
            break;
        }

        result.v_m = normalize_mass_kinetic(candidate);
        const double j_prev = result.m;
        result.m = weinstein_J(result.v_m, p);
        result.j_trace.push_back(result.m);
        step *= 1.5;

        if ((j_prev - j_new) / j_new < tol) {
            result.converged = true;
            break;
        }
    }
    if (!result.converged)
        throw NonConvergenceError("minimize_weinstein: iteration cap reached while J "
                                  "was still decreasing; grid or box likely too small");
    return result;
}

QResult build_Q(const ComplexField& v_m, double m, const PhysParams& p) {
    const double tail = std::sqrt(spectral::spectral_tail_fraction(v_m));
    if (tail > 1e-8)
        throw ResampleError("build_Q: minimizer is not spectrally resolved "
                            "(outer-band share " + std::to_string(tail) + ")");

    QResult out{scaling::rescale(v_m, 2.0 * std::sqrt(m), std::sqrt(6.0))};
    const ComplexField& Q = out.Q;
    const GridSpec& g = Q.grid;

    ComplexField lap = spectral::laplacian(Q);
    ComplexField density(g);
    for (std::size_t i = 0; i < g.size(); ++i) density.values[i] = std::norm(Q.values[i]);
    ComplexField conv = spectral::dipolar_convolve(density);

    double res2 = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double pot = p.lambda1 * density.values[i].real() +
                           p.lambda2 * conv.values[i].real();
        const cplx r = -0.5 * lap.values[i] + pot * Q.values[i] + Q.values[i];
        res2 += std::norm(r);
        norm2 += std::norm(Q.values[i]);
    }
    out.pde_residual = std::sqrt(res2 / norm2);

    const FunctionalReport rq = report(Q, p);
    out.pohozaev_residual = std::abs(rq.g) / rq.kinetic;
    return out;
}

GroundStateRecord compute_record(const PhysParams& p, const ComplexField& init,
                                 double tol, int max_iters) {
    DescentResult descent = minimize_weinstein(p, init, tol, max_iters);
    QResult q = build_Q(descent.v_m, descent.m, p);
    const FunctionalReport rq = report(q.Q, p);

    GroundStateRecord rec{std::move(descent.v_m), std::move(q.Q), p};
    rec.m = descent.m;
    rec.mass_Q = rq.mass;
    rec.kinetic_Q = rq.kinetic;
    rec.energy_Q = rq.energy;
    rec.gamma_unit_mass = rq.mass * rq.kinetic / 6.0;
    rec.pde_residual = q.pde_residual;
    rec.pohozaev_residual = q.pohozaev_residual;
    return rec;
}

double gamma_of_c(const GroundStateRecord& record, double c) {
    if (!(c > 0.0)) throw DomainError("gamma_of_c: mass must be positive");
    const double mu = record.mass_Q / c;
    return mu / 6.0 * record.kinetic_Q;
}

ComplexField default_init(const GridSpec& g, const PhysParams& p) {
    std::array<double, 3> widths = {1.3, 1.3, 1.3};
    if (p.lambda2 > 0.0) widths = {1.0, 1.0, 2.8};  // cigar along the dipole axis
    if (p.lambda2 < 0.0) widths = {2.8, 2.8, 1.0};  // pancake across it
    return builders::gaussian(g, 1.0, widths);
}

HrReport check_equivalence_hr(const ComplexField& u0, const GroundStateRecord& record) {
    const FunctionalReport r = report(u0, record.params);
    const double gamma_c = gamma_of_c(record, r.mass);

    HrReport out;
    out.threshold_route = (r.energy < gamma_c) && (r.g > 0.0);
    out.mass_energy = r.mass * r.energy;
    out.mass_energy_Q = record.mass_Q * record.energy_Q;
    out.mass_kinetic = r.mass * r.kinetic;
    out.mass_kinetic_Q = record.mass_Q * record.kinetic_Q;
    out.hr_route = (out.mass_energy < out.mass_energy_Q) &&
                   (out.mass_kinetic < out.mass_kinetic_Q);
    out.agree = out.threshold_route == out.hr_route;
    return out;
}

} // namespace dipgpe::ground_state
