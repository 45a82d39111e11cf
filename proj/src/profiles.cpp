#include "dipgpe/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "dipgpe/spectral_ops.hpp"

namespace dipgpe::profiles {

namespace {

double shift_norm(const std::array<int, 3>& s, const GridSpec& g) {
    const double d1 = s[0] * g.spacing(0), d2 = s[1] * g.spacing(1),
                 d3 = s[2] * g.spacing(2);
    return std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
}

bool all_zero_t(const std::vector<double>& t) {
    return std::all_of(t.begin(), t.end(), [](double v) { return v == 0.0; });
}
bool all_zero_x(const std::vector<std::array<int, 3>>& x) {
    return std::all_of(x.begin(), x.end(), [](const std::array<int, 3>& s) {
        return s[0] == 0 && s[1] == 0 && s[2] == 0;
    });
}

template <class Norm>
bool strictly_diverging(const std::vector<double>& mags) {
    for (std::size_t i = 1; i < mags.size(); ++i)
        if (!(mags[i] > mags[i - 1])) return false;
    return true;
}

// the synthesized per-profile piece U(-t) tau_x psi
ComplexField piece(const ProfileSpec& spec, std::size_t j, std::size_t n) {
    ComplexField shifted = spectral::translate(spec.psis[j], spec.x_seq[j][n]);
    const double t = spec.t_seq[j][n];
    return t == 0.0 ? shifted : spectral::free_propagate(shifted, -t);
}

} // namespace

void validate(const ProfileSpec& spec) {
    const std::size_t j_count = spec.profile_count();
    if (j_count == 0) throw DomainError("ProfileSpec: no profiles");
    if (spec.t_seq.size() != j_count || spec.x_seq.size() != j_count)
        throw DomainError("ProfileSpec: sequence lists must match profile count");
    const std::size_t len = spec.sequence_length();
    for (std::size_t j = 0; j < j_count; ++j) {
        if (spec.t_seq[j].size() != len || spec.x_seq[j].size() != len)
            throw DomainError("ProfileSpec: ragged parameter sequences");
        if (spec.psis[j].grid != spec.psis[0].grid)
            throw DomainError("ProfileSpec: profiles must share one grid");

        // dichotomy: identically zero or strictly diverging magnitude
        if (!all_zero_t(spec.t_seq[j])) {
            std::vector<double> mags;
            for (double t : spec.t_seq[j]) mags.push_back(std::abs(t));
            if (!strictly_diverging<void>(mags))
                throw DomainError("ProfileSpec: t sequence neither zero nor diverging");
        }
        if (!all_zero_x(spec.x_seq[j])) {
            std::vector<double> mags;
            for (const auto& s : spec.x_seq[j])
                mags.push_back(shift_norm(s, spec.psis[j].grid));
            if (!strictly_diverging<void>(mags))
                throw DomainError("ProfileSpec: x sequence neither zero nor diverging");
        }
    }
    // pairwise divergence: |x^j - x^k| + |t^j - t^k| strictly increasing
    for (std::size_t j = 0; j < j_count; ++j)
        for (std::size_t k = j + 1; k < j_count; ++k) {
            double prev = -1.0;
            for (std::size_t n = 0; n < len; ++n) {
                const std::array<int, 3> d = {spec.x_seq[j][n][0] - spec.x_seq[k][n][0],
                                              spec.x_seq[j][n][1] - spec.x_seq[k][n][1],
                                              spec.x_seq[j][n][2] - spec.x_seq[k][n][2]};
                const double sep = shift_norm(d, spec.psis[j].grid) +
                                   std::abs(spec.t_seq[j][n] - spec.t_seq[k][n]);
                if (!(sep > prev))
                    throw DomainError("ProfileSpec: pairwise divergence violated");
                prev = sep;
            }
        }
    if (spec.remainder && spec.remainder->grid != spec.psis[0].grid)
        throw DomainError("ProfileSpec: remainder grid mismatch");
}

double effective_radius(const ComplexField& psi) {
    const GridSpec& g = psi.grid;
    const double r_max = 0.5 * std::min({g.length(0), g.length(1), g.length(2)});
    const int bins = 512;
    std::vector<double> shell(bins + 1, 0.0);
    double total = 0.0;
    for (int i3 = 0; i3 < g.points(2); ++i3)
        for (int i2 = 0; i2 < g.points(1); ++i2)
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const double x1 = g.coordinate(0, i1), x2 = g.coordinate(1, i2),
                             x3 = g.coordinate(2, i3);
                const double r = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
                const double m = std::norm(psi.values[g.flat_index(i1, i2, i3)]);
                total += m;
                const int b = std::min(bins, static_cast<int>(r / r_max * bins));
                shell[b] += m;
            }
    if (total <= 0.0) return 0.0;
    double outside = total;
    for (int b = 0; b <= bins; ++b) {
        outside -= shell[b];
        if (outside <= 1e-8 * total) return (b + 1) * r_max / bins;
    }
    return r_max;
}

ComplexField synthesize(const ProfileSpec& spec, std::size_t n) {
    validate(spec);
    if (n >= spec.sequence_length()) throw DomainError("synthesize: index out of range");
    const GridSpec& g = spec.psis[0].grid;

    for (std::size_t j = 0; j < spec.profile_count(); ++j) {
        const double r_eff = effective_radius(spec.psis[j]);
        const auto& s = spec.x_seq[j][n];
        for (int a = 0; a < 3; ++a) {
            const double off = std::abs(s[a]) * g.spacing(a);
            if (off + 4.0 * r_eff > 0.5 * g.length(a))
                throw BoxOverflowError("synthesize: translated profile violates the "
                                       "wrap-free margin of 4 widths");
        }
    }

    ComplexField v(g);
    for (std::size_t j = 0; j < spec.profile_count(); ++j) {
        const ComplexField part = piece(spec, j, n);
        for (std::size_t i = 0; i < g.size(); ++i) v.values[i] += part.values[i];
    }
    if (spec.remainder)
        for (std::size_t i = 0; i < g.size(); ++i)
            v.values[i] += spec.remainder->values[i];
    return v;
}

namespace {

double l4norm4(const ComplexField& f) {
    double sum = 0.0;
    for (const cplx& v : f.values) {
        const double a = std::norm(v);
        sum += a * a;
    }
    return sum * f.grid.cell_volume();
}

double nonlocal_energy(const ComplexField& f) {
    ComplexField w(f.grid);
    for (std::size_t i = 0; i < f.grid.size(); ++i) w.values[i] = std::norm(f.values[i]);
    const ComplexField kw = spectral::dipolar_convolve(w);
    double sum = 0.0;
    for (std::size_t i = 0; i < f.grid.size(); ++i)
        sum += kw.values[i].real() * w.values[i].real();
    return sum * f.grid.cell_volume();
}

} // namespace

std::vector<ExpansionRow> audit_expansions(const ProfileSpec& spec, const PhysParams& p,
                                           const std::vector<std::size_t>& n_list) {
    validate(spec);
    const PhysParams free_params(0.0, 0.0);

    // mass and H^1 per-profile terms: exact isometry, evaluate on psi itself
    double mass_sum = 0.0, h1_sum = 0.0;
    for (const ComplexField& psi : spec.psis) {
        const FunctionalReport r = report(psi, free_params);
        mass_sum += r.mass;
        h1_sum += r.mass + r.kinetic;
    }
    double mass_rem = 0.0, h1_rem = 0.0, l4_rem = 0.0, nl_rem = 0.0;
    if (spec.remainder) {
        const FunctionalReport r = report(*spec.remainder, free_params);
        mass_rem = r.mass;
        h1_rem = r.mass + r.kinetic;
        l4_rem = r.l4norm4;
        nl_rem = nonlocal_energy(*spec.remainder);
    }

    std::vector<ExpansionRow> rows;
    for (std::size_t n : n_list) {
        const ComplexField v = synthesize(spec, n);
        const FunctionalReport rv = report(v, p);

        double l4_sum = 0.0, nl_sum = 0.0;
        for (std::size_t j = 0; j < spec.profile_count(); ++j) {
            const ComplexField part = piece(spec, j, n);
            l4_sum += l4norm4(part);
            nl_sum += nonlocal_energy(part);
        }

        ExpansionRow row;
        row.n = n;
        row.mass_residual = std::abs(rv.mass - mass_sum - mass_rem);
        row.kinetic_residual = std::abs(rv.mass + rv.kinetic - h1_sum - h1_rem);
        row.l4_residual = std::abs(rv.l4norm4 - l4_sum - l4_rem);
        row.nonlocal_residual = std::abs(nonlocal_energy(v) - nl_sum - nl_rem);

        double min_sep = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < spec.profile_count(); ++j)
            for (std::size_t k = j + 1; k < spec.profile_count(); ++k) {
                const std::array<int, 3> d = {spec.x_seq[j][n][0] - spec.x_seq[k][n][0],
                                              spec.x_seq[j][n][1] - spec.x_seq[k][n][1],
                                              spec.x_seq[j][n][2] - spec.x_seq[k][n][2]};
                min_sep = std::min(min_sep, shift_norm(d, v.grid) +
                                                std::abs(spec.t_seq[j][n] -
                                                         spec.t_seq[k][n]));
            }
        row.min_separation = std::isfinite(min_sep) ? min_sep : 0.0;
        rows.push_back(row);
    }
    return rows;
}

std::vector<CrossRow> cross_term_decay(const ComplexField& psi_a,
                                       const ComplexField& psi_b, int axis,
                                       const std::vector<int>& offsets) {
    if (psi_a.grid != psi_b.grid)
        throw DomainError("cross_term_decay: profiles must share one grid");
    const GridSpec& g = psi_a.grid;

    ComplexField wa(g), wb(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        wa.values[i] = std::norm(psi_a.values[i]);
        wb.values[i] = std::norm(psi_b.values[i]);
    }
    const ComplexField kwa = spectral::dipolar_convolve(wa);

    std::vector<CrossRow> rows;
    for (int off : offsets) {
        std::array<int, 3> shift = {0, 0, 0};
        shift[axis] = off;
        const ComplexField wb_shift = spectral::translate(wb, shift);
        double sum = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            sum += kwa.values[i].real() * wb_shift.values[i].real();
        rows.push_back({std::abs(off) * g.spacing(axis), sum * g.cell_volume()});
    }
    return rows;
}

} // namespace dipgpe::profiles
