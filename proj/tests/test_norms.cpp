#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "gsw/harness.hpp"
#include "gsw/norms.hpp"

using namespace gsw;
using Complex = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

SpectralField decay_field(const GridSpec& g, double delta, double sigma) {
    std::vector<Complex> c(g.n);
    for (int k = 0; k <= g.n / 2; ++k)
        c[k] = Complex(std::exp(-delta * std::pow(std::abs(g.xi(k)), 1.0 / sigma)), 0.0);
    return SpectralField::from_coeffs(g, c).symmetrized();
}

// Direct summation with no shared code path (plain loops, pow and exp).
double direct_norm(const SpectralField& f, double sigma, double delta, double q,
                   bool bar) {
    double acc = 0.0;
    const GridSpec& g = f.grid();
    for (int k = 0; k < g.n; ++k) {
        double xi = g.xi(k);
        double w = bar ? std::exp(delta * std::pow(std::abs(xi), 1.0 / sigma))
                       : std::exp(delta * std::pow(1.0 + xi * xi, 1.0 / (2.0 * sigma)));
        acc += std::pow(1.0 + xi * xi, q) * w * w * std::norm(f.coeffs()[k]);
    }
    return std::sqrt(g.length * acc);
}

} // namespace

TEST_CASE("sobolev norm basics") {
    GridSpec g(64, 40.0 * pi);
    CHECK(sobolev_norm(SpectralField(g), 2.0) == 0.0);

    // single mode c(+-1) = 1/2 is cos(xi_1 x); L2 norm sqrt(L/2)
    std::vector<Complex> c(g.n);
    c[1] = c[g.n - 1] = Complex(0.5, 0.0);
    SpectralField f = SpectralField::from_coeffs(g, c);
    CHECK(sobolev_norm(f, 0.0) ==
          doctest::Approx(std::sqrt(g.length / 2.0)).epsilon(1e-14));
}

TEST_CASE("sobolev norm matches direct summation") {
    GridSpec g(128, 40.0 * pi);
    SpectralField f = random_decay_field(g, 0.4, 1.0, 1.0, 99);
    CHECK(sobolev_norm(f, 2.0) ==
          doctest::Approx(direct_norm(f, 1.0, 0.0, 2.0, false)).epsilon(1e-13));
}

TEST_CASE("gevrey norm with delta=0 equals sobolev norm") {
    GridSpec g(128, 40.0 * pi);
    SpectralField f = random_decay_field(g, 0.4, 1.0, 1.0, 100);
    for (double q : {0.0, 1.5, 3.0})
        CHECK(gevrey_norm(f, GevreyParams(1.0, 0.0, q)) ==
              doctest::Approx(sobolev_norm(f, q)).epsilon(1e-14));
}

TEST_CASE("gevrey norm matches direct summation on exponential-decay data") {
    GridSpec g(128, 40.0 * pi);
    SpectralField f = decay_field(g, 1.0, 1.0);
    GevreyParams p(1.0, 0.5, 0.0);
    CHECK(gevrey_norm(f, p) ==
          doctest::Approx(direct_norm(f, 1.0, 0.5, 0.0, false)).epsilon(1e-13));
    CHECK(bar_gevrey_norm(f, p) ==
          doctest::Approx(direct_norm(f, 1.0, 0.5, 0.0, true)).epsilon(1e-13));
}

TEST_CASE("gevrey norm monotone in sigma, delta and q") {
    GridSpec g(128, 40.0 * pi);
    SpectralField f = random_decay_field(g, 0.8, 1.0, 1.0, 101);
    // larger sigma means weaker weight
    CHECK(gevrey_norm(f, GevreyParams(2.0, 0.4, 1.0)) <=
          gevrey_norm(f, GevreyParams(1.0, 0.4, 1.0)));
    CHECK(gevrey_norm(f, GevreyParams(1.0, 0.2, 1.0)) <=
          gevrey_norm(f, GevreyParams(1.0, 0.4, 1.0)));
    CHECK(gevrey_norm(f, GevreyParams(1.0, 0.4, 0.5)) <=
          gevrey_norm(f, GevreyParams(1.0, 0.4, 1.0)));
}

TEST_CASE("bar/gevrey sandwich") {
    GridSpec g(128, 40.0 * pi);
    SpectralField f = random_decay_field(g, 0.8, 1.0, 1.0, 102);
    GevreyParams p(1.0, 0.3, 1.0);
    double bar = bar_gevrey_norm(f, p);
    double gev = gevrey_norm(f, p);
    CHECK(bar <= gev * (1.0 + 1e-12));
    CHECK(gev <= std::exp(p.delta) * bar * (1.0 + 1e-12));
}

TEST_CASE("sandwich ratio at the zero mode is exactly e^delta") {
    GridSpec g(16, 40.0 * pi);
    std::vector<Complex> c(g.n);
    c[0] = Complex(1.0, 0.0);
    SpectralField f = SpectralField::from_coeffs(g, c);
    GevreyParams p(1.0, 1.0, 0.0);
    CHECK(gevrey_norm(f, p) / bar_gevrey_norm(f, p) ==
          doctest::Approx(std::numbers::e).epsilon(1e-14));
}

TEST_CASE("invalid gevrey params") {
    CHECK_THROWS_AS(GevreyParams(0.5, 0.1, 1.0), DomainError);
    CHECK_THROWS_AS(GevreyParams(1.0, -0.1, 1.0), DomainError);
}

TEST_CASE("radius fit recovers constructed decay rates") {
    GridSpec g(256, 40.0 * pi);
    {
        SpectralField f = decay_field(g, 0.7, 1.0);
        RadiusFit fit = estimate_radius(f, 1.0);
        CHECK(fit.delta_hat == doctest::Approx(0.7).epsilon(1e-6));
        CHECK(fit.residual < 1e-8);
    }
    {
        SpectralField f = decay_field(g, 0.5, 2.0);
        RadiusFit fit = estimate_radius(f, 2.0);
        CHECK(fit.delta_hat == doctest::Approx(0.5).epsilon(1e-6));
    }
}

TEST_CASE("gaussian decay yields window-growing sigma=1 fit") {
    GridSpec g(256, 40.0 * pi);
    std::vector<Complex> c(g.n);
    for (int k = 0; k <= g.n / 2; ++k) {
        double xi = g.xi(k);
        c[k] = Complex(std::exp(-xi * xi), 0.0);
    }
    // keep magnitudes above the fit's noise floor
    double floor_mag = 1e-13;
    for (auto& v : c) v += Complex(0.0, 0.0);
    SpectralField f = SpectralField::from_coeffs(g, c).symmetrized();
    // entire function: fitted sigma=1 radius grows with the window
    double d1 = estimate_radius(f, 1.0, 4, 12).delta_hat;
    double d2 = estimate_radius(f, 1.0, 12, 24).delta_hat;
    double d3 = estimate_radius(f, 1.0, 24, 40).delta_hat;
    CHECK(d1 < d2);
    CHECK(d2 < d3);
    (void)floor_mag;
}

TEST_CASE("radius fit error conditions") {
    GridSpec g(64, 40.0 * pi);
    SpectralField z(g);
    CHECK_THROWS_AS(estimate_radius(z, 1.0), InsufficientSpectrumError);
    SpectralField f = decay_field(g, 0.5, 1.0);
    CHECK_THROWS_AS(estimate_radius(f, 1.0, 0, 10), ShapeError);
    CHECK_THROWS_AS(estimate_radius(f, 1.0, 10, 200), ShapeError);
    // narrow window with fewer than 8 usable modes
    CHECK_THROWS_AS(estimate_radius(f, 1.0, 5, 8), InsufficientSpectrumError);
}

TEST_CASE("default fit window is the top resolved octave") {
    GridSpec g(192, 1.0);
    auto [lo, hi] = default_fit_window(g);
    CHECK(lo == 32);
    CHECK(hi == 64);
}

TEST_CASE("embedding chain corpus passes") {
    SuiteResult r = suite_embedding_chain(128, 2024);
    CHECK(r.pass());
    CHECK(r.summary.total == 300);
}

TEST_CASE("norm machinery corpus passes") {
    SuiteResult r = suite_norm_machinery(128, 2025);
    CHECK(r.pass());
}

TEST_CASE("gradient estimate corpus passes") {
    SuiteResult r = suite_gradient_estimate(128, 200, 2026);
    CHECK(r.pass());
}

TEST_CASE("algebra constant bounded across resolutions") {
    SuiteResult r = suite_algebra_constant({64, 128, 256}, 2027);
    CHECK(r.pass());
    CHECK(r.summary.max_ratio > 0.0);
}
