#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gsw/grid.hpp"
#include "gsw/multiplier.hpp"

namespace gsw {

// A real periodic function stored as complex Fourier coefficients with
// Hermitian symmetry. Immutable value type: every operation returns a new
// field, so fields are safe to share across threads.
class SpectralField {
public:
    using Complex = std::complex<double>;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& grid); // zero field

    // Wrap raw coefficients (storage order k = 0..n/2, -n/2+1..-1).
    // Symmetry is NOT enforced here; collocate() rejects broken symmetry.
    static SpectralField from_coeffs(const GridSpec& grid,
                                     std::vector<Complex> coeffs);

    // Forward transform from physical samples at x_j = j L / n.
    static SpectralField synthesize(const GridSpec& grid,
                                    std::span<const double> samples);

    // Inverse transform to physical samples. Imaginary residue below
    // 1e-12 of the field magnitude is discarded; larger residue throws
    // ConsistencyError.
    std::vector<double> collocate() const;

    SpectralField apply(const MultiplierSpec& m) const;
    SpectralField derivative(int order = 1) const;

    // Zero all modes with |k| > kmax.
    SpectralField band_limited(int kmax) const;
    SpectralField dealiased() const { return band_limited(grid_.dealias_mode()); }

    // Exactly restore c_{-k} = conj(c_k); real parts on k = 0 and Nyquist.
    SpectralField symmetrized() const;

    const GridSpec& grid() const { return grid_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Coefficient of signed mode k (throws if out of range).
    Complex coeff(int k) const;

    double max_abs() const;        // max_j |f(x_j)|
    double max_abs_coeff() const;
    bool all_finite() const;

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double c);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double c, SpectralField a) { return a *= c; }
    friend SpectralField operator*(SpectralField a, double c) { return a *= c; }
    friend SpectralField operator-(SpectralField a) { return a *= -1.0; }

private:
    GridSpec grid_;
    std::vector<Complex> coeffs_;

    void require_same_grid(const SpectralField& o) const;
};

// Dealiased pointwise product via the 2/3 truncation rule. Exact (equal to
// the full convolution) when both factors are band-limited to n/3.
SpectralField pointwise_product(const SpectralField& f, const SpectralField& g);

// L2(0,L) inner product of two real fields.
double inner_product(const SpectralField& f, const SpectralField& g);

} // namespace gsw
