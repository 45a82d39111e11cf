#pragma once

#include <optional>
#include <vector>

#include "dipgpe/functionals.hpp"

namespace dipgpe::profiles {

//==============================================================================
// Synthesized bounded sequences v_n = sum_j U(-t_n^j) tau_{x_n^j} psi^j + R
// and the numerical audit of the Pythagorean expansions of mass, kinetic,
// local (L^4) and nonlocal (dipolar) energies along growing separations.
//==============================================================================

struct ProfileSpec {
    std::vector<ComplexField> psis;
    // per profile: one entry per sequence index n
    std::vector<std::vector<double>> t_seq;
    std::vector<std::vector<std::array<int, 3>>> x_seq; // lattice shifts
    std::optional<ComplexField> remainder;

    std::size_t profile_count() const { return psis.size(); }
    std::size_t sequence_length() const { return t_seq.empty() ? 0 : t_seq[0].size(); }
};

// Validates the parameter dichotomy (each sequence identically zero or
// strictly diverging) and the pairwise divergence property. Throws
// DomainError on violation.
void validate(const ProfileSpec& spec);

// Radius containing all but 1e-8 of the profile's mass.
double effective_radius(const ComplexField& psi);

// v_n for one sequence index. Throws BoxOverflowError when a translated
// profile violates the wrap-free margin of 4 effective radii.
ComplexField synthesize(const ProfileSpec& spec, std::size_t n);

struct ExpansionRow {
    std::size_t n = 0;
    double min_separation = 0.0; // smallest pairwise |x^j - x^k| + |t^j - t^k|
    double mass_residual = 0.0;
    double kinetic_residual = 0.0; // H^1 version
    double l4_residual = 0.0;
    double nonlocal_residual = 0.0;
};

std::vector<ExpansionRow> audit_expansions(const ProfileSpec& spec, const PhysParams& p,
                                           const std::vector<std::size_t>& n_list);

struct CrossRow {
    double separation = 0.0;
    double cross = 0.0; // int (K * tau_z |psi_a|^2) tau_z' |psi_b|^2
};

// Dipolar cross term between two fixed densities at growing lattice
// separations along one axis.
std::vector<CrossRow> cross_term_decay(const ComplexField& psi_a,
                                       const ComplexField& psi_b, int axis,
                                       const std::vector<int>& offsets);

} // namespace dipgpe::profiles
