#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "gsw/dynamics.hpp"
#include "gsw/harness.hpp"
#include "gsw/initial_data.hpp"
#include "gsw/norms.hpp"

using namespace gsw;
using Complex = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

SpectralField cosine(const GridSpec& g, int k, double amp) {
    std::vector<Complex> c(g.n);
    c[k] = c[g.n - k] = Complex(amp / 2.0, 0.0);
    return SpectralField::from_coeffs(g, c);
}

double rel_diff(const SpectralField& a, const SpectralField& b) {
    double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    return scale > 0.0 ? (a - b).max_abs_coeff() / scale : 0.0;
}

// 4th-order central finite difference of periodic samples.
std::vector<double> fd_derivative(const std::vector<double>& u, double h) {
    const int n = static_cast<int>(u.size());
    std::vector<double> d(n);
    auto at = [&](int j) { return u[((j % n) + n) % n]; };
    for (int j = 0; j < n; ++j)
        d[j] = (8.0 * (at(j + 1) - at(j - 1)) - (at(j + 2) - at(j - 2))) / (12.0 * h);
    return d;
}

} // namespace

TEST_CASE("inertia basics") {
    GridSpec g(64, 40.0 * pi);
    std::vector<Complex> c(g.n);
    c[0] = Complex(3.0, 0.0);
    SpectralField constant = SpectralField::from_coeffs(g, c);
    CHECK(rel_diff(inertia(constant, 2), constant) == 0.0);

    SpectralField u = cosine(g, 1, 1.0);
    double xi1 = g.dxi();
    double factor = std::pow(1.0 + xi1 * xi1, 2);
    CHECK(inertia(u, 2).coeff(1).real() ==
          doctest::Approx(0.5 * factor).epsilon(1e-14));

    SpectralField r = random_decay_field(g, 0.5, 1.0, 1.0, 5);
    CHECK(rel_diff(inverse_inertia(inertia(r, 3), 3), r) < 1e-12);
    CHECK_THROWS_AS(inertia(r, 0), DomainError);
}

TEST_CASE("system params validation") {
    CHECK_THROWS_AS(SystemParams(1, 2.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(SystemParams(2, 1.0, 0.0, 0.0), DomainError);
    GridSpec g(16, 1.0);
    GridSpec g2(32, 1.0);
    CHECK_THROWS_AS(TwoComponentState(0.0, SpectralField(g), SpectralField(g2)),
                    ShapeError);
}

TEST_CASE("rhs_mform trivial cases") {
    GridSpec g(64, 40.0 * pi);
    SystemParams p(2, 2.0, 0.0, 0.0);
    {
        TwoComponentState z(0.0, SpectralField(g), SpectralField(g));
        auto [du, dr] = rhs_mform(z, p);
        CHECK(du.max_abs_coeff() == 0.0);
        CHECK(dr.max_abs_coeff() == 0.0);
    }
    {
        std::vector<Complex> c(g.n);
        c[0] = Complex(2.5, 0.0);
        TwoComponentState z(0.0, SpectralField::from_coeffs(g, c), SpectralField(g));
        auto [du, dr] = rhs_mform(z, p);
        CHECK(du.max_abs_coeff() < 1e-15);
        CHECK(dr.max_abs_coeff() < 1e-15);
    }
}

TEST_CASE("rhs_mform matches finite-difference oracle") {
    GridSpec g(64, 40.0 * pi);
    SystemParams p(2, 2.0, 0.0, 0.0);
    SpectralField u = cosine(g, 1, 1.0);
    TwoComponentState z(0.0, u, SpectralField(g));
    auto [du, dr] = rhs_mform(z, p);
    // compare m_t = inertia(du) against physical-space finite differences
    auto mt = inertia(du, p.s).collocate();

    const int refine = 64;
    GridSpec fine(g.n * refine, g.length);
    SpectralField uf = cosine(fine, 1, 1.0);
    auto us = uf.collocate();
    double h = fine.dx();
    auto ux = fd_derivative(us, h);
    auto uxx = fd_derivative(ux, h);
    auto uxxx = fd_derivative(uxx, h);
    auto uxxxx = fd_derivative(uxxx, h);
    std::vector<double> m(fine.n), mx(fine.n);
    for (int j = 0; j < fine.n; ++j) m[j] = us[j] - 2.0 * uxx[j] + uxxxx[j];
    mx = fd_derivative(m, h);
    for (int j = 0; j < g.n; ++j) {
        int jf = j * refine;
        double oracle = -us[jf] * mx[jf] - p.a * ux[jf] * m[jf];
        CHECK(mt[j] == doctest::Approx(oracle).epsilon(1e-6));
    }
    CHECK(dr.max_abs_coeff() == 0.0);
}

TEST_CASE("k decomposition recovers the classical two-component form at s=1") {
    KDecomposition k = derive_k_decomposition(1, 2.0);
    REQUIRE(k.terms.size() == 2);
    // -(1-dxx)^{-1} dx (u^2 + u_x^2/2)
    CHECK(k.terms[0].outer == 1);
    CHECK(k.terms[0].inner == 0);
    CHECK(k.terms[0].coeff == doctest::Approx(-1.0));
    CHECK(k.terms[1].outer == 1);
    CHECK(k.terms[1].inner == 1);
    CHECK(k.terms[1].coeff == doctest::Approx(-0.5));
}

TEST_CASE("k decomposition term constraints") {
    for (int s : {2, 3}) {
        KDecomposition k = derive_k_decomposition(s, 2.0);
        for (const KTerm& t : k.terms) {
            CHECK(t.outer % 2 == 1);
            CHECK(t.outer + 2 * t.inner <= 2 * s + 1);
            CHECK(t.outer >= 1);
            CHECK(t.outer <= 2 * s - 1);
            CHECK(t.inner >= 0);
            CHECK(t.inner <= s);
        }
    }
    CHECK_THROWS_AS(derive_k_decomposition(0, 2.0), DomainError);
}

TEST_CASE("k decomposition annihilates constants") {
    GridSpec g(64, 40.0 * pi);
    std::vector<Complex> c(g.n);
    c[0] = Complex(1.7, 0.0);
    SpectralField constant = SpectralField::from_coeffs(g, c);
    for (int s : {1, 2, 3}) {
        KDecomposition k = derive_k_decomposition(s, 2.0);
        CHECK(apply_k_decomposition(k, constant).max_abs_coeff() < 1e-15);
    }
}

TEST_CASE("rhs_kform equals rhs_mform on band-limited states") {
    GridSpec g(96, 40.0 * pi);
    const int band = g.n / 6;
    for (auto [s, a] : std::vector<std::pair<int, double>>{{2, 2.0}, {3, 2.0}, {2, 2.5}}) {
        SystemParams p(s, a, 0.3, 0.7);
        KDecomposition k = derive_k_decomposition(s, a);
        for (int trial = 0; trial < 50; ++trial) {
            std::uint64_t seed = 1000 * s + trial;
            SpectralField u = random_decay_field(g, 0.6, 1.0, 1.0, seed).band_limited(band);
            SpectralField rho =
                random_decay_field(g, 0.6, 1.0, 1.0, seed + 500).band_limited(band);
            TwoComponentState z(0.0, u, rho);
            auto [du_m, dr_m] = rhs_mform(z, p);
            auto [du_k, dr_k] = rhs_kform(z, p, k);
            CHECK(rel_diff(du_m, du_k) < 1e-10);
            CHECK(rel_diff(dr_m, dr_k) < 1e-10);
        }
    }
}

TEST_CASE("rhs_kform rejects mismatched decomposition") {
    GridSpec g(64, 40.0 * pi);
    SystemParams p(2, 2.0, 0.0, 0.0);
    KDecomposition k = derive_k_decomposition(3, 2.0);
    TwoComponentState z(0.0, SpectralField(g), SpectralField(g));
    CHECK_THROWS_AS(rhs_kform(z, p, k), ShapeError);
}

TEST_CASE("density equation transport identity") {
    // -dx(u rho) + (2-a) u_x rho == -u rho_x - (a-1) u_x rho
    GridSpec g(96, 40.0 * pi);
    const int band = g.n / 6;
    SpectralField u = random_decay_field(g, 0.5, 1.0, 1.0, 77).band_limited(band);
    SpectralField rho = random_decay_field(g, 0.5, 1.0, 1.0, 78).band_limited(band);
    for (double a : {2.0, 2.5, 0.5}) {
        SpectralField lhs = -pointwise_product(u, rho).derivative() +
                            (2.0 - a) * pointwise_product(u.derivative(), rho);
        SpectralField rhs = -pointwise_product(u, rho.derivative()) -
                            (a - 1.0) * pointwise_product(u.derivative(), rho);
        CHECK(rel_diff(lhs, rhs) < 1e-13);
    }
}

TEST_CASE("step basics") {
    GridSpec g(64, 40.0 * pi);
    SystemParams p(2, 2.0, 0.0, 0.0);
    TwoComponentState z(0.0, SpectralField(g), SpectralField(g));
    TwoComponentState out = step(z, p, 0.1);
    CHECK(out.t == doctest::Approx(0.1));
    CHECK(out.u.max_abs_coeff() == 0.0);
    CHECK_THROWS_AS(step(z, p, 0.0), DomainError);
    CHECK_THROWS_AS(scheme_from_string("euler"), DomainError);
    CHECK(scheme_from_string("rk4") == Scheme::rk4);
    CHECK(scheme_from_string("rk45-adaptive") == Scheme::rk45_adaptive);
}

TEST_CASE("rk4 self-convergence order is four") {
    GridSpec g(64, 40.0 * pi);
    SystemParams p(2, 2.0, 0.0, 0.0);
    SpectralField u0 = gevrey_random_field(g, 1.0, 1.0, 0.5, 3);
    const double T = 0.4;
    auto integrate = [&](double dt) {
        TwoComponentState z(0.0, u0, SpectralField(g));
        int steps = static_cast<int>(std::round(T / dt));
        for (int i = 0; i < steps; ++i) z = step(z, p, dt);
        return z.u;
    };
    SpectralField a = integrate(0.05);
    SpectralField b = integrate(0.025);
    SpectralField c = integrate(0.0125);
    double e1 = (a - c).max_abs_coeff();
    double e2 = (b - c).max_abs_coeff();
    // with reference at dt/4 the measured ratio approximates 2^4 * (1-1/16)
    double order = std::log2(e1 / e2) - std::log2(16.0 / 15.0) + 0.0;
    // undo the reference bias: e1 ~ 15 eps, e2 ~ ... simpler: use pairwise
    SpectralField d = integrate(0.00625);
    double f1 = (a - b).max_abs_coeff();
    double f2 = (b - c).max_abs_coeff();
    double f3 = (c - d).max_abs_coeff();
    double order12 = std::log2(f1 / f2);
    double order23 = std::log2(f2 / f3);
    CHECK(order12 > 3.7);
    CHECK(order12 < 4.3);
    CHECK(order23 > 3.7);
    CHECK(order23 < 4.3);
    (void)order;
}

TEST_CASE("adaptive scheme agrees with fine rk4") {
    GridSpec g(64, 40.0 * pi);
    SystemParams p(2, 2.0, 0.5, 0.0);
    SpectralField u0 = gevrey_random_field(g, 1.0, 1.0, 0.5, 9);
    TwoComponentState z0(0.0, u0, SpectralField(g));
    TwoComponentState za = step(z0, p, 0.5, Scheme::rk45_adaptive, 1e-11);
    TwoComponentState zr = z0;
    for (int i = 0; i < 500; ++i) zr = step(zr, p, 1e-3);
    CHECK(rel_diff(za.u, zr.u) < 1e-8);
}

TEST_CASE("conserved quantities at a=2") {
    GridSpec g(128, 40.0 * pi);
    {
        SystemParams p(2, 2.0, 0.0, 0.0);
        TwoComponentState z(0.0, SpectralField(g), SpectralField(g));
        Conserved c = conserved_quantities(z, p);
        CHECK(c.H == 0.0);
        CHECK(c.Mrho == 0.0);
    }
    {
        SystemParams p(2, 2.0, 0.0, 0.0);
        SpectralField u = cosine(g, 1, 1.0);
        TwoComponentState z(0.0, u, SpectralField(g));
        double xi1 = g.dxi();
        double expected = std::pow(1.0 + xi1 * xi1, 2) * (g.length / 2.0);
        CHECK(conserved_quantities(z, p).H == doctest::Approx(expected).epsilon(1e-13));
    }
    // drift over a short horizon for alpha, kappa in {0,1}
    for (double alpha : {0.0, 1.0}) {
        for (double kappa : {0.0, 1.0}) {
            SystemParams p(2, 2.0, alpha, kappa);
            TwoComponentState z(0.0, gevrey_random_field(g, 0.8, 1.0, 0.3, 17),
                                kappa > 0.0 ? cosine(g, 2, 0.3) : SpectralField(g));
            Conserved c0 = conserved_quantities(z, p);
            for (int i = 0; i < 200; ++i) z = step(z, p, 1e-3);
            Conserved c1 = conserved_quantities(z, p);
            CHECK(std::abs(c1.H - c0.H) <= 1e-6 * std::max(c0.H, 1.0));
            CHECK(std::abs(c1.Mrho - c0.Mrho) <= 1e-9);
        }
    }
}

TEST_CASE("spectral resolution independence") {
    GridSpec coarse(64, 2.0 * pi);
    GridSpec finer(128, 2.0 * pi);
    SystemParams p(2, 2.0, 0.0, 0.0);
    // analytic data resolved at the coarse grid: strong spectral decay
    SpectralField u0c = gevrey_random_field(coarse, 2.0, 1.0, 0.5, 23);
    std::vector<Complex> cf(finer.n);
    for (int k = 0; k <= coarse.n / 2; ++k) cf[k] = u0c.coeffs()[k];
    for (int k = 1; k < coarse.n / 2; ++k)
        cf[finer.n - k] = u0c.coeffs()[coarse.n - k];
    SpectralField u0f = SpectralField::from_coeffs(finer, cf).symmetrized();
    auto evolve = [&](const SpectralField& u0) {
        TwoComponentState z(0.0, u0, SpectralField(u0.grid()));
        for (int i = 0; i < 100; ++i) z = step(z, p, 1e-3);
        return sobolev_norm(z.u, 3.0);
    };
    double nc = evolve(u0c);
    double nf = evolve(u0f);
    CHECK(std::abs(nc - nf) < 1e-8 * nc);
}

TEST_CASE("blow-up detection") {
    GridSpec g(64, 40.0 * pi);
    SystemParams p(2, 2.0, 0.0, 0.0);
    std::vector<Complex> c(g.n);
    c[10] = c[g.n - 10] = Complex(1e9, 0.0);
    TwoComponentState z(0.0, SpectralField::from_coeffs(g, c), SpectralField(g));
    CHECK_THROWS_AS(step(z, p, 1e-3), BlowUpError);

    c[10] = Complex(std::nan(""), 0.0);
    c[g.n - 10] = Complex(std::nan(""), 0.0);
    TwoComponentState zn(0.0, SpectralField::from_coeffs(g, c), SpectralField(g));
    CHECK_THROWS_AS(check_blow_up(zn), BlowUpError);
}

TEST_CASE("cfl step bound") {
    GridSpec g(64, 40.0 * pi);
    SpectralField u = cosine(g, 1, 2.0);
    TwoComponentState z(0.0, u, SpectralField(g));
    CHECK(cfl_dt(z, 0.5) == doctest::Approx(0.5 / (2.0 * g.xi_max())).epsilon(1e-12));
}
