#pragma once

#include <array>
#include <cstddef>

#include "dipgpe/errors.hpp"

namespace dipgpe {

//==============================================================================
// GridSpec
// Periodic computational box [-L_i/2, L_i/2)^3 sampled on n_i points per axis.
//
// Conventions used throughout the toolkit:
//   * storage is x1-fastest: flat index = i1 + n1*(i2 + n2*i3)
//   * physical node coordinates x_i = -L_i/2 + k*h_i, h_i = L_i/n_i
//   * wavenumbers xi_i = (2*pi/L_i) * s, s in {-n_i/2, ..., n_i/2 - 1}
//   * quadrature: rectangle rule with weight h1*h2*h3 (spectrally accurate
//     for smooth periodic integrands)
//   * continuum-normalized transform: uhat(xi) = h^3 * DFT(u),
//     u(x) = (1/V) * sum_k uhat_k e^{+i xi_k x};  Parseval:
//     sum |u|^2 h^3 = (1/V) sum |uhat|^2
//==============================================================================
class GridSpec {
public:
    GridSpec(std::array<int, 3> points, std::array<double, 3> lengths)
        : n_(points), box_(lengths) {
        for (int a = 0; a < 3; ++a) {
            if (n_[a] < 8 || n_[a] % 2 != 0)
                throw DomainError("GridSpec: points per axis must be even and >= 8");
            if (!(box_[a] > 0.0))
                throw DomainError("GridSpec: box lengths must be positive");
        }
    }

    static GridSpec cube(int n, double length) {
        return GridSpec({n, n, n}, {length, length, length});
    }

    int points(int axis) const { return n_[axis]; }
    double length(int axis) const { return box_[axis]; }
    const std::array<int, 3>& points() const { return n_; }
    const std::array<double, 3>& lengths() const { return box_; }

    double spacing(int axis) const { return box_[axis] / n_[axis]; }
    double volume() const { return box_[0] * box_[1] * box_[2]; }
    double cell_volume() const { return spacing(0) * spacing(1) * spacing(2); }
    std::size_t size() const {
        return static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
    }

    // Signed mode number for DFT bin k: {0,1,...,n/2-1, -n/2,...,-1}.
    int signed_index(int axis, int k) const {
        return (k <= n_[axis] / 2 - 1) ? k : k - n_[axis];
    }

    double coordinate(int axis, int k) const {
        return -0.5 * box_[axis] + k * spacing(axis);
    }

    double wavenumber(int axis, int k) const {
        constexpr double two_pi = 6.283185307179586476925286766559;
        return two_pi / box_[axis] * signed_index(axis, k);
    }

    std::size_t flat_index(int i1, int i2, int i3) const {
        return static_cast<std::size_t>(i1) +
               static_cast<std::size_t>(n_[0]) *
                   (static_cast<std::size_t>(i2) +
                    static_cast<std::size_t>(n_[1]) * static_cast<std::size_t>(i3));
    }

    // Same sample values reinterpreted on a box shrunk by b (all axes).
    // Realizes the exact scaling x -> x/b without resampling.
    GridSpec rescaled(double b) const {
        if (!(b > 0.0)) throw DomainError("GridSpec::rescaled: factor must be positive");
        return GridSpec(n_, {box_[0] / b, box_[1] / b, box_[2] / b});
    }

    bool operator==(const GridSpec& o) const { return n_ == o.n_ && box_ == o.box_; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

private:
    std::array<int, 3> n_;
    std::array<double, 3> box_;
};

} // namespace dipgpe
