#pragma once

#include <cmath>
#include <numbers>

#include "gsw/errors.hpp"

namespace gsw {

// Uniform periodic grid on [0, L) with n collocation points.
//
// Spectral coefficients are Fourier-series coefficients c_k with
//   f(x) = sum_k c_k exp(i xi_k x),   xi_k = 2*pi*k/L,
// stored in the order k = 0, 1, ..., n/2, -n/2+1, ..., -1 (index k
// and index n-k are a conjugate pair; index n/2 is the Nyquist mode).
// With this convention the L2(0,L) norm is sqrt(L * sum_k |c_k|^2),
// which keeps Parseval exact and all norm formulas quadrature-free.
struct GridSpec {
    int n = 0;
    double length = 0.0;

    GridSpec() = default;
    GridSpec(int n_, double length_) : n(n_), length(length_) {
        if (n < 8 || n % 2 != 0)
            throw ShapeError("GridSpec: n must be an even integer >= 8");
        if (!(length > 0.0))
            throw ShapeError("GridSpec: period length must be positive");
    }

    double dx() const { return length / n; }
    double x(int j) const { return j * dx(); }

    // Mode spacing in wavenumber space.
    double dxi() const { return 2.0 * std::numbers::pi / length; }

    // Signed mode number for storage index idx in [0, n).
    int mode(int idx) const { return idx <= n / 2 ? idx : idx - n; }

    // Wavenumber xi_k for storage index idx.
    double xi(int idx) const { return mode(idx) * dxi(); }

    double xi_max() const { return (n / 2) * dxi(); }

    // Largest retained mode for alias-free quadratic products (2/3 rule,
    // chosen so that 2*kd - n < -kd, i.e. no alias lands in the kept band).
    int dealias_mode() const { return (n - 1) / 3; }

    bool operator==(const GridSpec& o) const {
        return n == o.n && length == o.length;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

} // namespace gsw
