#pragma once

#include <utility>

#include "gsw/spectral_field.hpp"

namespace gsw {

// (sigma, delta, q): Gevrey index, radius, Sobolev exponent.
struct GevreyParams {
    double sigma = 1.0;
    double delta = 0.0;
    double q = 0.0;

    GevreyParams() = default;
    GevreyParams(double sigma_, double delta_, double q_)
        : sigma(sigma_), delta(delta_), q(q_) {
        if (!(sigma >= 1.0))
            throw DomainError("GevreyParams: sigma must be >= 1");
        if (!(delta >= 0.0))
            throw DomainError("GevreyParams: delta must be >= 0");
    }
};

// Discrete H^q norm: sqrt(L * sum_k (1 + xi_k^2)^q |c_k|^2).
double sobolev_norm(const SpectralField& f, double q);

// Norm with multiplier exp(delta (1 + xi^2)^{1/(2 sigma)}).
double gevrey_norm(const SpectralField& f, const GevreyParams& p);

// Norm with multiplier exp(delta |xi|^{1/sigma}).
double bar_gevrey_norm(const SpectralField& f, const GevreyParams& p);

struct RadiusFit {
    double delta_hat = 0.0; // fitted radius, clipped at 0
    double residual = 0.0;  // RMS of the linear fit in log space
    int k_min = 0;          // wavenumber window actually used
    int k_max = 0;
};

// Least-squares fit log|c_k| ~ c - delta_hat * |xi_k|^{1/sigma} over modes
// k in [k_min, k_max] whose magnitude exceeds 1e-14 of the spectral max.
// Requires at least 8 usable modes.
RadiusFit estimate_radius(const SpectralField& f, double sigma, int k_min, int k_max);

// Top octave of resolved, dealiased modes: [n/6, n/3].
std::pair<int, int> default_fit_window(const GridSpec& grid);

RadiusFit estimate_radius(const SpectralField& f, double sigma);

} // namespace gsw
