#pragma once

#include <array>
#include <vector>

#include "dipgpe/field.hpp"

namespace dipgpe::spectral {

//==============================================================================
// Spectral operators on the periodic box: the dipolar interaction multiplier,
// Riesz transforms, derivatives and quadrature.
//==============================================================================

// Dipolar symbol (4*pi/3) (2 xi3^2 - xi1^2 - xi2^2) / |xi|^2, zero at xi = 0.
// The symbol is homogeneous of degree zero and has zero spherical average;
// zero is the unique rotation-consistent value at the origin.
double dipolar_symbol(double xi1, double xi2, double xi3);

// Full-spectrum multiplier array in grid storage order.
std::vector<double> dipolar_multiplier(const GridSpec& g);

// K * w for a real-valued density w (imaginary part below 1e-12 * max|w|).
// Computed through half-spectrum transforms; output is exactly real.
ComplexField dipolar_convolve(const ComplexField& w);

// Riesz transform along one axis: spectrum multiplied by -i xi_j / |xi|.
ComplexField riesz_apply(const ComplexField& f, int axis);

std::array<ComplexField, 3> gradient(const ComplexField& f);
ComplexField laplacian(const ComplexField& f);

// Quadrature-weighted sum over the box.
cplx integrate(const ComplexField& f);

// Exact lattice translation u(. - shift*h) by index roll (no transform).
ComplexField translate(const ComplexField& f, std::array<int, 3> shift);

// Free Schroedinger propagator e^{i t Delta / 2}: spectrum times
// e^{-i t |xi|^2 / 2}.
ComplexField free_propagate(const ComplexField& f, double t);

// Non-lattice translation by a real displacement, applied spectrally.
ComplexField translate_spectral(const ComplexField& f, std::array<double, 3> shift);

// Fraction of spectral mass (coefficient square sum) carried by modes in the
// outer half of the Nyquist range along any axis. Resolution gauge.
double spectral_tail_fraction(const ComplexField& f);

} // namespace dipgpe::spectral
