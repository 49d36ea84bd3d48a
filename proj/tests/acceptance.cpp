// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Each criterion has a hard wall-clock budget.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <vector>

#include "gsw/harness.hpp"
#include "gsw/initial_data.hpp"
#include "gsw/norms.hpp"
#include "gsw/tracking.hpp"

using namespace gsw;
using Complex = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

void report(int idx, const char* what, bool ok, double seconds, double budget) {
    bool in_budget = seconds <= budget;
    bool pass = ok && in_budget;
    std::printf("%s criterion %2d: %-42s (%.2fs / budget %.0fs)%s\n",
                pass ? "PASS" : "FAIL", idx, what, seconds, budget,
                !in_budget ? " [over budget]" : "");
    if (!pass) ++failures;
}

template <typename F>
void criterion(int idx, const char* what, double budget, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("     criterion %2d threw: %s\n", idx, e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    report(idx, what, ok, dt, budget);
}

} // namespace

int main() {
    criterion(1, "norm machinery (delta=0, sandwich) n=256", 5.0, [] {
        SuiteResult r = suite_norm_machinery(256, 1001);
        return r.pass();
    });

    criterion(2, "gradient estimate, 500 draws, sigma in {1,2}", 10.0, [] {
        SuiteResult r = suite_gradient_estimate(256, 500, 1002);
        return r.pass() && r.summary.total == 500;
    });

    criterion(3, "pointwise difference scan, stable under halving", 60.0, [] {
        SuiteResult coarse = suite_pointwise_difference(0.25);
        SuiteResult fine = suite_pointwise_difference(0.125);
        bool stable = std::abs(fine.summary.max_ratio - coarse.summary.max_ratio) <=
                      0.1 * coarse.summary.max_ratio;
        return coarse.pass() && fine.pass() && stable &&
               coarse.summary.total == 18;
    });

    criterion(4, "interpolation, 100 fields incl. l = 2/3", 10.0, [] {
        SuiteResult r = suite_interpolation(128, 100, 1004);
        return r.pass() && r.summary.total == 100;
    });

    criterion(5, "commutator calibration and fresh corpora", 60.0, [] {
        SuiteResult r = suite_commutator(1005);
        return r.pass();
    });

    criterion(6, "nonlocal form agrees with momentum form", 30.0, [] {
        GridSpec g(96, 40.0 * pi);
        const int band = g.n / 6;
        for (auto [s, a] :
             std::vector<std::pair<int, double>>{{2, 2.0}, {3, 2.0}, {2, 2.5}}) {
            SystemParams p(s, a, 0.3, 0.7);
            KDecomposition k = derive_k_decomposition(s, a);
            for (int trial = 0; trial < 50; ++trial) {
                std::uint64_t seed = 5000 * s + trial;
                SpectralField u =
                    random_decay_field(g, 0.6, 1.0, 1.0, seed).band_limited(band);
                SpectralField rho =
                    random_decay_field(g, 0.6, 1.0, 1.0, seed + 999).band_limited(band);
                TwoComponentState z(0.0, u, rho);
                auto [du_m, dr_m] = rhs_mform(z, p);
                auto [du_k, dr_k] = rhs_kform(z, p, k);
                double su = std::max(du_m.max_abs_coeff(), du_k.max_abs_coeff());
                double sr = std::max(dr_m.max_abs_coeff(), dr_k.max_abs_coeff());
                if ((du_m - du_k).max_abs_coeff() > 1e-10 * su) return false;
                if ((dr_m - dr_k).max_abs_coeff() > 1e-10 * sr) return false;
            }
        }
        return true;
    });

    criterion(7, "a=2 invariants drift below 1e-6 over T=1", 120.0, [] {
        GridSpec g(128, 40.0 * pi);
        for (double alpha : {0.0, 1.0}) {
            for (double kappa : {0.0, 1.0}) {
                SystemParams p(2, 2.0, alpha, kappa);
                TwoComponentState z(0.0, gevrey_random_field(g, 0.8, 1.0, 0.1, 71),
                                    gevrey_random_field(g, 0.8, 1.0, 0.05, 72));
                Conserved c0 = conserved_quantities(z, p);
                for (int i = 0; i < 1000; ++i) z = step(z, p, 1e-3);
                Conserved c1 = conserved_quantities(z, p);
                if (std::abs(c1.H - c0.H) > 1e-6 * std::max(c0.H, 1.0)) return false;
                if (std::abs(c1.Mrho - c0.Mrho) > 1e-6) return false;
            }
        }
        return true;
    });

    criterion(8, "lifespan arithmetic and inverse scaling", 5.0, [] {
        double expected = 1.0 / (128.0 * (std::exp(-1.0) + 2.0));
        if (std::abs(lifespan_T0_one_component(1.0, 1.0, 1.0) - expected) > 1e-12)
            return false;
        for (double sigma : {1.0, 2.0}) {
            double base = lifespan_T0_one_component(sigma, 1.0, 1.0);
            for (int k = 1; k <= 10; ++k)
                if (lifespan_T0_one_component(sigma, 1.0, double(1 << k)) !=
                    base / (1 << k))
                    return false;
        }
        return true;
    });

    criterion(9, "radius tracking passes on analytic random data", 300.0, [] {
        GridSpec g(256, 40.0 * pi);
        SpectralField u0 = gevrey_random_field(g, 0.5, 1.0, 2e-4, 2024);
        MonitorConfig mc;
        mc.system = SystemParams(2, 2.0, 0.0, 0.0);
        mc.sigma = 1.0;
        mc.q = 3.0;
        mc.delta0 = 0.5;
        mc.C = 1.0;
        mc.dt = 2e-3;
        mc.T = 1.0;
        mc.output_every = 0.05;
        MonitorResult r = regularity_monitor(mc, u0, SpectralField(g));
        return r.pass && !r.blow_up && r.trace.samples.size() >= 21;
    });

    criterion(10, "data-to-solution continuity, eps = 2^-1..2^-8", 600.0, [] {
        GridSpec g(128, 40.0 * pi);
        SpectralField u0 = gevrey_random_field(g, 1.0, 1.0, 0.05, 4096);
        ContinuityConfig cfg;
        cfg.system = SystemParams(2, 2.0, 0.0, 0.0);
        for (int i = 1; i <= 8; ++i) cfg.eps.push_back(std::pow(2.0, -i));
        ContinuityReport rep = continuity_experiment(cfg, u0, SpectralField(g));
        for (const ContinuityLeg& leg : rep.legs)
            if (!(leg.ratio <= 2.2)) return false;
        return rep.slope >= 1.0 - 1e-6;
    });

    criterion(11, "auxiliary radius function and integral bound", 30.0, [] {
        SuiteResult r = suite_ovsyannikov(1011);
        return r.pass();
    });

    std::printf("%s: %d of 11 criteria passed\n",
                failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                11 - failures);
    return failures;
}
