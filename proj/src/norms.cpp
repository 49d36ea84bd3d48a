#include "gsw/norms.hpp"

#include <cmath>

namespace gsw {

double sobolev_norm(const SpectralField& f, double q) {
    const GridSpec& grid = f.grid();
    double acc = 0.0;
    for (int k = 0; k < grid.n; ++k) {
        double xi = grid.xi(k);
        acc += std::pow(1.0 + xi * xi, q) * std::norm(f.coeffs()[k]);
    }
    return std::sqrt(grid.length * acc);
}

double gevrey_norm(const SpectralField& f, const GevreyParams& p) {
    // Exactly sobolev_norm(apply_multiplier(f, Gevrey(delta, sigma)), q).
    return sobolev_norm(f.apply(MultiplierSpec::gevrey(p.delta, p.sigma)), p.q);
}

double bar_gevrey_norm(const SpectralField& f, const GevreyParams& p) {
    return sobolev_norm(f.apply(MultiplierSpec::bar_gevrey(p.delta, p.sigma)), p.q);
}

std::pair<int, int> default_fit_window(const GridSpec& grid) {
    return {grid.n / 6, grid.n / 3};
}

RadiusFit estimate_radius(const SpectralField& f, double sigma, int k_min, int k_max) {
    const GridSpec& grid = f.grid();
    if (k_min < 1 || k_max > grid.n / 2 || k_min > k_max)
        throw ShapeError("estimate_radius: window outside grid");

    const double floor = 1e-14 * f.max_abs_coeff();
    std::vector<double> xs, ys;
    for (int k = k_min; k <= k_max; ++k) {
        double mag = std::abs(f.coeffs()[k]);
        if (mag > floor && mag > 0.0) {
            xs.push_back(std::pow(std::abs(grid.xi(k)), 1.0 / sigma));
            ys.push_back(std::log(mag));
        }
    }
    if (xs.size() < 8)
        throw InsufficientSpectrumError(
            "estimate_radius: fewer than 8 usable modes in the window");

    // Least squares for y = c - delta * x.
    const std::size_t m = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = m * sxx - sx * sx;
    double slope = (m * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / m;

    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = ys[i] - (intercept + slope * xs[i]);
        ss += r * r;
    }

    RadiusFit fit;
    fit.delta_hat = std::max(0.0, -slope);
    fit.residual = std::sqrt(ss / m);
    fit.k_min = k_min;
    fit.k_max = k_max;
    return fit;
}

RadiusFit estimate_radius(const SpectralField& f, double sigma) {
    auto [lo, hi] = default_fit_window(f.grid());
    return estimate_radius(f, sigma, lo, hi);
}

} // namespace gsw
