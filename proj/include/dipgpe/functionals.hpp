#pragma once

#include <array>

#include "dipgpe/field.hpp"

namespace dipgpe {

//==============================================================================
// Scalar functionals of a field and the interaction-parameter regimes.
//
//   mass      M = int |u|^2
//   kinetic   T = int |grad u|^2
//   potential P = lambda1 int |u|^4 + lambda2 int (K*|u|^2)|u|^2
//               = (1/(2pi)^3) int (lambda1 + lambda2 Khat)(w_hat)^2 dxi
//   energy    E = (T + P)/2
//   G         G = T + (3/2) P
//   momentum  Im int conj(u) grad u
//==============================================================================

enum class Regime { Unstable, Stable, Boundary };

Regime classify_regime(double lambda1, double lambda2);

const char* regime_name(Regime r);

struct PhysParams {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Regime regime = Regime::Boundary;

    PhysParams(double l1, double l2)
        : lambda1(l1), lambda2(l2), regime(classify_regime(l1, l2)) {}
};

struct FunctionalReport {
    double mass = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;
    double energy = 0.0;
    double g = 0.0;
    std::array<double, 3> momentum = {0.0, 0.0, 0.0};
    double l4norm4 = 0.0; // |u|_4^4, needed by several diagnostics
};

// Potential energy evaluated through both routes of its definition. The two
// agree to round-off (the Fourier form is the discrete Parseval image of the
// physical one); exposing both keeps the consistency testable.
struct PotentialSplit {
    double physical = 0.0;
    double fourier = 0.0;
    double quartic_part = 0.0; // lambda1 |u|_4^4
    double dipolar_part = 0.0; // lambda2 int (K*|u|^2)|u|^2
};

PotentialSplit potential_energy(const ComplexField& u, const PhysParams& p);

FunctionalReport report(const ComplexField& u, const PhysParams& p);

// Weinstein quotient J(v) = |grad v|_2^3 |v|_2 / (-P(v)).
// Throws DomainError when P(v) >= 0 (quotient undefined there).
double weinstein_J(const ComplexField& v, const PhysParams& p);

} // namespace dipgpe
