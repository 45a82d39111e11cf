#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

#include <fftw3.h>

#include "dipgpe/grid.hpp"

namespace dipgpe {

using cplx = std::complex<double>;

// Allocator backed by fftw_malloc so field buffers satisfy the alignment the
// transform plans were created with (new-array execute requirement).
template <class T>
struct FftwAllocator {
    using value_type = T;
    FftwAllocator() = default;
    template <class U>
    FftwAllocator(const FftwAllocator<U>&) {}
    T* allocate(std::size_t count) {
        void* p = fftw_malloc(count * sizeof(T));
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) noexcept { fftw_free(p); }
    template <class U>
    bool operator==(const FftwAllocator<U>&) const { return true; }
    template <class U>
    bool operator!=(const FftwAllocator<U>&) const { return false; }
};

using cvec = std::vector<cplx, FftwAllocator<cplx>>;
using rvec = std::vector<double, FftwAllocator<double>>;

//==============================================================================
// ComplexField: complex samples of a wavefunction on a GridSpec, x1-fastest.
//==============================================================================
struct ComplexField {
    GridSpec grid;
    cvec values;

    explicit ComplexField(const GridSpec& g) : grid(g), values(g.size(), cplx(0.0, 0.0)) {}
    ComplexField(const GridSpec& g, cvec v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw DomainError("ComplexField: value count does not match grid");
    }

    cplx& operator()(int i1, int i2, int i3) { return values[grid.flat_index(i1, i2, i3)]; }
    const cplx& operator()(int i1, int i2, int i3) const {
        return values[grid.flat_index(i1, i2, i3)];
    }
};

// Spectral coefficients of a field, continuum normalization uhat = h^3 DFT(u).
struct SpectralField {
    GridSpec grid;
    cvec coeffs;

    explicit SpectralField(const GridSpec& g) : grid(g), coeffs(g.size(), cplx(0.0, 0.0)) {}
    SpectralField(const GridSpec& g, cvec c) : grid(g), coeffs(std::move(c)) {
        if (coeffs.size() != grid.size())
            throw DomainError("SpectralField: coefficient count does not match grid");
    }
};

// True when every sample is finite (no NaN/Inf crept in).
bool all_finite(const ComplexField& f);

// Largest |value| over the grid.
double sup_norm(const ComplexField& f);

} // namespace dipgpe
