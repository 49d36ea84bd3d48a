#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "gsw/errors.hpp"

namespace gsw {

// A scalar Fourier multiplier xi -> m(xi), built by composing elementary
// kinds. All kinds except Derivative are even real functions of xi, so they
// preserve realness of the physical field; Derivative multiplies by (i xi)^j
// and preserves realness too (conjugate-symmetric).
class MultiplierSpec {
public:
    struct Derivative {
        int order;
    };
    // (1 + xi^2)^{power/2}; power = 2s gives the inertia operator symbol,
    // power = -2s its inverse.
    struct BesselPower {
        double power;
    };
    // exp(delta * (1 + xi^2)^{1/(2 sigma)})
    struct Gevrey {
        double delta;
        double sigma;
    };
    // exp(delta * |xi|^{1/sigma})
    struct BarGevrey {
        double delta;
        double sigma;
    };
    using Kind = std::variant<Derivative, BesselPower, Gevrey, BarGevrey>;

    static MultiplierSpec derivative(int order);
    static MultiplierSpec bessel(double power);
    static MultiplierSpec gevrey(double delta, double sigma);
    static MultiplierSpec bar_gevrey(double delta, double sigma);

    // Pointwise composition m1(xi) * m2(xi).
    MultiplierSpec then(const MultiplierSpec& other) const;

    // Evaluate at a single wavenumber. Throws RadiusTooLargeError when the
    // accumulated exponential argument exceeds the cap.
    std::complex<double> eval(double xi) const;

    // Check all exponential kinds against the cap at |xi| = xi_max.
    void check_overflow(double xi_max) const;

    const std::vector<Kind>& kinds() const { return kinds_; }

    // Natural-log cap for exponential multiplier arguments.
    double exponent_cap = 700.0;

private:
    std::vector<Kind> kinds_;
};

} // namespace gsw
