#include "gsw/multiplier.hpp"

#include <cmath>
#include <string>

namespace gsw {

MultiplierSpec MultiplierSpec::derivative(int order) {
    if (order < 0)
        throw DomainError("derivative multiplier: order must be >= 0");
    MultiplierSpec m;
    m.kinds_.push_back(Derivative{order});
    return m;
}

MultiplierSpec MultiplierSpec::bessel(double power) {
    MultiplierSpec m;
    m.kinds_.push_back(BesselPower{power});
    return m;
}

MultiplierSpec MultiplierSpec::gevrey(double delta, double sigma) {
    if (!(delta >= 0.0))
        throw DomainError("gevrey multiplier: delta must be >= 0");
    if (!(sigma > 0.0))
        throw DomainError("gevrey multiplier: sigma must be positive");
    MultiplierSpec m;
    m.kinds_.push_back(Gevrey{delta, sigma});
    return m;
}

MultiplierSpec MultiplierSpec::bar_gevrey(double delta, double sigma) {
    if (!(delta >= 0.0))
        throw DomainError("bar-gevrey multiplier: delta must be >= 0");
    if (!(sigma > 0.0))
        throw DomainError("bar-gevrey multiplier: sigma must be positive");
    MultiplierSpec m;
    m.kinds_.push_back(BarGevrey{delta, sigma});
    return m;
}

MultiplierSpec MultiplierSpec::then(const MultiplierSpec& other) const {
    MultiplierSpec m = *this;
    m.kinds_.insert(m.kinds_.end(), other.kinds_.begin(), other.kinds_.end());
    return m;
}

namespace {

// (i xi)^j without pow(): i^j cycles with period 4.
std::complex<double> ipow_times(double xi, int j) {
    double mag = 1.0;
    for (int p = 0; p < j; ++p) mag *= xi;
    switch (j % 4) {
        case 0: return {mag, 0.0};
        case 1: return {0.0, mag};
        case 2: return {-mag, 0.0};
        default: return {0.0, -mag};
    }
}

} // namespace

std::complex<double> MultiplierSpec::eval(double xi) const {
    std::complex<double> value(1.0, 0.0);
    double exponent = 0.0;
    for (const Kind& k : kinds_) {
        if (const auto* d = std::get_if<Derivative>(&k)) {
            value *= ipow_times(xi, d->order);
        } else if (const auto* b = std::get_if<BesselPower>(&k)) {
            value *= std::pow(1.0 + xi * xi, b->power / 2.0);
        } else if (const auto* g = std::get_if<Gevrey>(&k)) {
            exponent += g->delta * std::pow(1.0 + xi * xi, 1.0 / (2.0 * g->sigma));
        } else if (const auto* bg = std::get_if<BarGevrey>(&k)) {
            exponent += bg->delta * std::pow(std::abs(xi), 1.0 / bg->sigma);
        }
    }
    if (exponent > exponent_cap)
        throw RadiusTooLargeError(
            "Gevrey multiplier overflows at xi = " + std::to_string(xi) +
                " (exponent " + std::to_string(exponent) + " exceeds cap " +
                std::to_string(exponent_cap) + ")",
            xi);
    if (exponent != 0.0) value *= std::exp(exponent);
    return value;
}

void MultiplierSpec::check_overflow(double xi_max) const {
    (void)eval(xi_max);
}

} // namespace gsw
