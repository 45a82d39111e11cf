#pragma once

#include <array>
#include <random>

#include "dipgpe/field.hpp"

namespace dipgpe::builders {

// amplitude * exp(-sum_i (x_i - c_i)^2 / (2 s_i^2)) * exp(i v.x)
ComplexField gaussian(const GridSpec& g, double amplitude,
                      std::array<double, 3> widths,
                      std::array<double, 3> center = {0.0, 0.0, 0.0},
                      std::array<double, 3> phase_velocity = {0.0, 0.0, 0.0});

ComplexField radial_gaussian(const GridSpec& g, double amplitude, double width);

// Smooth compactly supported bump: amplitude * exp(1 - 1/(1 - (r/radius)^2))
// inside |x - c| < radius, zero outside.
ComplexField bump(const GridSpec& g, double amplitude, double radius,
                  std::array<double, 3> center = {0.0, 0.0, 0.0});

// Sum of `terms` Gaussians with random centers, widths, amplitudes and
// phases drawn from rng. Centers stay within |c|_inf <= span.
ComplexField gaussian_mixture(const GridSpec& g, std::mt19937_64& rng, int terms,
                              double span, double base_width, double amplitude);

// Complex field with independent unit-normal coefficients on modes
// |s_i| <= band_fraction * n_i/2 and zero elsewhere.
ComplexField random_band_limited(const GridSpec& g, std::mt19937_64& rng,
                                 double band_fraction = 0.5);

} // namespace dipgpe::builders
