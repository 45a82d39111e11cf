#pragma once

#include "dipgpe/field.hpp"

namespace dipgpe::fft {

//==============================================================================
// Thin wrapper around FFTW with a process-global plan cache keyed by grid
// extents. Plans are created with FFTW_ESTIMATE: planning is heuristic-only,
// so repeated runs pick identical algorithms and results are reproducible
// bit-for-bit. Buffers passed here must come from FftwAllocator storage.
//
// Raw transforms are unnormalized FFTW sums; the continuum-normalized pair
// used by the rest of the toolkit is
//     forward:  uhat_k = h^3 * sum_n u_n e^{-i xi_k . x_n-index}
//     inverse:  u_n    = (1/V) * sum_k uhat_k e^{+i ...}
// so that round-trip is the identity and the discrete Parseval identity
// sum |u|^2 h^3 = (1/V) sum |uhat|^2 holds exactly.
//==============================================================================

// Unnormalized c2c transforms (out-of-place; in != out).
void raw_forward(const GridSpec& g, const cplx* in, cplx* out);
void raw_inverse(const GridSpec& g, const cplx* in, cplx* out);

// Unnormalized half-spectrum transforms for real data. The half-spectrum
// layout has n1/2+1 fastest-axis bins: size n3*n2*(n1/2+1).
std::size_t half_spectrum_size(const GridSpec& g);
void raw_forward_r2c(const GridSpec& g, const double* in, cplx* out);
// c2r consumes its input (FFTW overwrites it); pass a scratch copy.
void raw_inverse_c2r(const GridSpec& g, cplx* in, double* out);

// Continuum-normalized transforms.
SpectralField forward(const ComplexField& u);
ComplexField inverse(const SpectralField& uhat);

} // namespace dipgpe::fft
