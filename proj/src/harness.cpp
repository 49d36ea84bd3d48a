#include "gsw/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace gsw {

namespace {

double weight(double T, double sigma, double delta, double t) {
    double horizon = T * std::pow(1.0 - delta, sigma);
    return std::pow(1.0 - delta, sigma) * std::sqrt(1.0 - t / horizon);
}

std::string fmt_params(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

SuiteSummary make_summary(const std::string& id, const std::vector<CheckRecord>& recs) {
    SuiteSummary s;
    s.check_id = id;
    s.total = static_cast<long>(recs.size());
    for (const CheckRecord& r : recs) {
        if (r.pass) ++s.passed;
        if (r.ratio > s.max_ratio) {
            s.max_ratio = r.ratio;
            s.argmax_params = r.params;
        }
    }
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// E_T norm machinery
// ---------------------------------------------------------------------------

void ETNormParams::validate() const {
    if (delta_grid.empty() || delta_grid.size() != t_grids.size())
        throw DomainError("ETNormParams: empty or mismatched grids");
    for (std::size_t i = 0; i < delta_grid.size(); ++i) {
        double d = delta_grid[i];
        if (!(d > 0.0 && d < 1.0))
            throw DomainError("ETNormParams: delta must lie in (0,1)");
        for (double t : t_grids[i])
            if (!(t >= 0.0 && t < horizon(d)))
                throw DomainError("ETNormParams: inadmissible (delta, t) pair");
    }
}

double ETNormParams::horizon(double delta) const {
    return T * std::pow(1.0 - delta, sigma) / (std::pow(2.0, sigma) - 1.0);
}

ETNormParams make_et_params(double T, double sigma, double q, int n_delta, int n_t) {
    ETNormParams p;
    p.T = T;
    p.sigma = sigma;
    p.q = q;
    const double lo = 0.02, hi = 0.98;
    for (int i = 0; i < n_delta; ++i) {
        double frac = n_delta == 1 ? 0.0 : static_cast<double>(i) / (n_delta - 1);
        double d = lo * std::pow(hi / lo, frac);
        p.delta_grid.push_back(d);
        double tmax = p.horizon(d) * 0.999;
        std::vector<double> ts(n_t);
        for (int j = 0; j < n_t; ++j)
            ts[j] = tmax * (n_t == 1 ? 0.0 : static_cast<double>(j) / (n_t - 1));
        p.t_grids.push_back(std::move(ts));
    }
    p.validate();
    return p;
}

void SampledTrajectory::add(double t, SpectralField f) {
    if (!times_.empty() && t <= times_.back())
        throw DomainError("SampledTrajectory: times must strictly increase");
    times_.push_back(t);
    states_.push_back(std::move(f));
}

const SpectralField& SampledTrajectory::at(double t) const {
    if (times_.empty()) throw DomainError("SampledTrajectory: empty");
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - times_.begin());
    if (i == times_.size()) return states_.back();
    if (i > 0 && t - times_[i - 1] < times_[i] - t) --i;
    return states_[i];
}

double et_norm(const SampledTrajectory& traj, const ETNormParams& p) {
    p.validate();
    double sup = 0.0;
    for (std::size_t i = 0; i < p.delta_grid.size(); ++i) {
        double d = p.delta_grid[i];
        GevreyParams gp(p.sigma, d, p.q);
        for (double t : p.t_grids[i]) {
            double v = gevrey_norm(traj.at(t), gp) * weight(p.T, p.sigma, d, t);
            sup = std::max(sup, v);
        }
    }
    return sup;
}

// ---------------------------------------------------------------------------
// Auxiliary radius function
// ---------------------------------------------------------------------------

void OvsyannikovDelta::validate() const {
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("OvsyannikovDelta: delta must lie in (0,1)");
    if (!(sigma >= 1.0)) throw DomainError("OvsyannikovDelta: sigma must be >= 1");
    if (!(a > 0.0)) throw DomainError("OvsyannikovDelta: scale a must be positive");
}

double OvsyannikovDelta::horizon() const {
    return a * std::pow(1.0 - delta, sigma) / (std::pow(2.0, sigma) - 1.0);
}

double ovs_delta_of_t(const OvsyannikovDelta& d, double t) {
    d.validate();
    if (!(t >= 0.0 && t < d.horizon()))
        throw DomainError("ovs_delta_of_t: t outside the admissible domain");
    double base = std::pow(1.0 - d.delta, d.sigma);
    double bracket = std::pow(base - t / d.a, 1.0 / d.sigma) -
                     std::pow(base + (std::pow(2.0, d.sigma + 1.0) - 1.0) * t / d.a,
                              1.0 / d.sigma);
    double prefactor = std::pow(0.5, 2.0 + 1.0 / d.delta);
    return 0.5 * (1.0 + d.delta) + prefactor * bracket;
}

double ea_norm_of(const std::function<double(double, double)>& gnorm,
                  double a, double sigma, int n_delta, int n_t) {
    ETNormParams p = make_et_params(a, sigma, 0.0, n_delta, n_t);
    double sup = 0.0;
    for (std::size_t i = 0; i < p.delta_grid.size(); ++i) {
        double d = p.delta_grid[i];
        for (double t : p.t_grids[i])
            sup = std::max(sup, gnorm(t, d) * weight(a, sigma, d, t));
    }
    return sup;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    if (depth > 48)
        throw NumericError("adaptive quadrature failed to converge");
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (b <= a) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace

CheckResult check_singular_integral(const SyntheticTrajectory& u, double a,
                               double sigma, double delta, double t) {
    OvsyannikovDelta od{delta, sigma, a};
    od.validate();
    if (!(t >= 0.0 && t < od.horizon()))
        throw DomainError("check_singular_integral: t outside the admissible domain");

    auto integrand = [&](double tau) {
        double dt = ovs_delta_of_t(od, tau);
        return u.gnorm(tau, dt) / std::pow(dt - delta, sigma);
    };
    CheckResult r;
    r.lhs = integrate(integrand, 0.0, t, 1e-10 * (1.0 + std::abs(t)));
    double base = std::pow(1.0 - delta, sigma);
    r.rhs = a * std::pow(2.0, 2.0 * sigma + 3.0) * u.ea_norm / base *
            std::sqrt(a * base / (a * base - t));
    r.pass = r.lhs <= r.rhs + 1e-12 * (1.0 + r.rhs);
    r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
    return r;
}

// ---------------------------------------------------------------------------
// Commutator / pointwise difference / interpolation
// ---------------------------------------------------------------------------

CheckResult check_commutator(const SpectralField& u, const SpectralField& w,
                             double r, double sigma, double delta, double C) {
    if (!(r > 1.5))
        throw DomainError("check_commutator: requires r > 3/2");
    MultiplierSpec weight_op =
        MultiplierSpec::bessel(r).then(MultiplierSpec::gevrey(delta, sigma));
    SpectralField p = pointwise_product(u, w.derivative());
    double lhs = std::abs(inner_product(p.apply(weight_op), w.apply(weight_op)));

    double r_up = r + 1.0 / (2.0 * sigma);
    double structure =
        sobolev_norm(u, r) * std::pow(sobolev_norm(w, r), 2) +
        delta * (gevrey_norm(u, GevreyParams(sigma, delta, r)) *
                     std::pow(gevrey_norm(w, GevreyParams(sigma, delta, r_up)), 2) +
                 gevrey_norm(u, GevreyParams(sigma, delta, r_up)) *
                     gevrey_norm(w, GevreyParams(sigma, delta, r)) *
                     gevrey_norm(w, GevreyParams(sigma, delta, r_up)));

    CheckResult res;
    res.lhs = lhs;
    res.rhs = C * structure;
    res.pass = res.lhs <= res.rhs + 1e-12 * (1.0 + res.rhs);
    res.ratio = structure > 0.0 ? lhs / structure : 0.0;
    return res;
}

ScanReport check_pointwise_difference(double r, double sigma, double delta,
                                      double xi_min, double xi_max, double step) {
    if (!(r >= 1.0) || !(sigma >= 1.0) || !(delta >= 0.0))
        throw DomainError("check_pointwise_difference: requires r >= 1, sigma >= 1, delta >= 0");
    const double cap = 650.0;
    if (delta * std::pow(1.0 + 2.0 * xi_max * xi_max, 1.0 / (2.0 * sigma)) > cap)
        throw DomainError("check_pointwise_difference: grid range overflows the exponentials");

    const double c_r = std::max(r, r + 1.0 / sigma) * std::pow(2.0, std::max(r - 1.0, 0.0));
    auto f = [&](double x) {
        return std::pow(1.0 + x * x, r / 2.0) *
               std::exp(delta * std::pow(1.0 + x * x, 1.0 / (2.0 * sigma)));
    };
    auto ew = [&](double x) {
        return std::exp(delta * std::pow(1.0 + x * x, 1.0 / (2.0 * sigma)));
    };

    ScanReport rep;
    rep.c_r = c_r;
    const long steps = std::lround((xi_max - xi_min) / step);
    for (long i = 0; i <= steps; ++i) {
        double xi = xi_min + i * step;
        double fxi = f(xi);
        for (long j = 0; j <= steps; ++j) {
            double eta = xi_min + j * step;
            if (i == j) continue;
            double d = std::abs(xi - eta);
            double lhs = std::abs(fxi - f(eta));
            double p1 = std::pow(1.0 + d * d, (r - 1.0) / 2.0);
            double p2 = std::pow(1.0 + eta * eta, (r - 1.0) / 2.0);
            double p3 = std::pow(1.0 + d * d, (r - 1.0) / 2.0 + 1.0 / (2.0 * sigma));
            double p4 = std::pow(1.0 + eta * eta, (r - 1.0) / 2.0 + 1.0 / (2.0 * sigma));
            double rhs = c_r * d * (p1 + p2 + delta * (p3 + p4) * ew(d) * ew(eta));
            ++rep.total;
            bool ok = lhs <= rhs * (1.0 + 1e-12);
            if (ok) ++rep.passed;
            double ratio = lhs / rhs;
            if (ratio > rep.max_ratio) {
                rep.max_ratio = ratio;
                rep.argmax_xi = xi;
                rep.argmax_eta = eta;
            }
        }
    }
    rep.pass = rep.passed == rep.total;
    return rep;
}

CheckResult check_interpolation(const SpectralField& f, double r, double sigma,
                                double delta, double l) {
    if (!(l > 0.0))
        throw DomainError("check_interpolation: requires l > 0");
    CheckResult res;
    res.lhs = gevrey_norm(f, GevreyParams(sigma, delta, r));
    res.rhs = std::sqrt(std::numbers::e) * sobolev_norm(f, r) +
              std::pow(2.0 * delta, l / 2.0) *
                  gevrey_norm(f, GevreyParams(sigma, delta, r + l / (2.0 * sigma)));
    res.pass = res.lhs <= res.rhs + 1e-12 * (1.0 + res.rhs);
    res.ratio = res.rhs > 0.0 ? res.lhs / res.rhs : 0.0;
    return res;
}

// ---------------------------------------------------------------------------
// Continuity experiment
// ---------------------------------------------------------------------------

namespace {

// Integrate to each requested time, snapshotting u and rho separately.
void integrate_along(const SpectralField& u0, const SpectralField& rho0,
                     const SystemParams& p, const std::vector<double>& times,
                     double dt, SampledTrajectory& out_u, SampledTrajectory& out_rho) {
    TwoComponentState z(0.0, u0, rho0);
    double prev = -1.0;
    for (double t_target : times) {
        if (t_target <= prev) continue;
        while (z.t < t_target - 1e-15) {
            double h = std::min(dt, t_target - z.t);
            z = step(z, p, h);
        }
        out_u.add(t_target, z.u);
        out_rho.add(t_target, z.rho);
        prev = t_target;
    }
}

} // namespace

ContinuityReport continuity_experiment(const ContinuityConfig& cfg,
                                       const SpectralField& u0,
                                       const SpectralField& rho0) {
    GevreyParams gu(cfg.sigma, 1.0, cfg.q);
    GevreyParams gr(cfg.sigma, 1.0, cfg.q1);
    double z0_norm = gevrey_norm(u0, gu) + gevrey_norm(rho0, gr);

    // Common horizon below every individual lifespan.
    double factor = std::exp(-cfg.sigma) * std::pow(cfg.sigma, cfg.sigma) + 2.0;
    double T = 1.0 / (std::pow(2.0, 2.0 * cfg.sigma + 5.0) * cfg.C_alg * factor *
                      (z0_norm + 2.0));

    ETNormParams pu = make_et_params(T, cfg.sigma, cfg.q, cfg.n_delta, cfg.n_t);
    ETNormParams pr = make_et_params(T, cfg.sigma, cfg.q1, cfg.n_delta, cfg.n_t);

    std::vector<double> times;
    for (const auto& g : pu.t_grids) times.insert(times.end(), g.begin(), g.end());
    for (const auto& g : pr.t_grids) times.insert(times.end(), g.begin(), g.end());
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    if (times.empty() || times.front() > 0.0) times.insert(times.begin(), 0.0);

    const double dt = T / cfg.steps;
    SampledTrajectory ref_u, ref_rho;
    integrate_along(u0, rho0, cfg.system, times, dt, ref_u, ref_rho);

    ContinuityReport report;
    report.T = T;
    const GridSpec& grid = u0.grid();

    for (double eps : cfg.eps) {
        SpectralField pert(grid);
        {
            std::vector<std::complex<double>> c(grid.n);
            c[cfg.perturb_mode] = eps / 2.0;
            c[grid.n - cfg.perturb_mode] = eps / 2.0;
            pert = SpectralField::from_coeffs(grid, std::move(c));
        }
        SampledTrajectory leg_u, leg_rho;
        integrate_along(u0 + pert, rho0, cfg.system, times, dt, leg_u, leg_rho);

        SampledTrajectory diff_u, diff_rho;
        for (std::size_t i = 0; i < ref_u.size(); ++i) {
            diff_u.add(ref_u.times()[i], leg_u.state(i) - ref_u.state(i));
            diff_rho.add(ref_rho.times()[i], leg_rho.state(i) - ref_rho.state(i));
        }

        ContinuityLeg leg;
        leg.eps = eps;
        leg.data_diff = gevrey_norm(pert, gu);
        leg.et_diff = et_norm(diff_u, pu) + et_norm(diff_rho, pr);
        leg.ratio = leg.data_diff > 0.0 ? leg.et_diff / leg.data_diff : 0.0;
        report.legs.push_back(leg);
    }

    // Log-log regression of et_diff against eps.
    {
        std::size_t m = report.legs.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const ContinuityLeg& leg : report.legs) {
            double x = std::log(leg.eps), y = std::log(std::max(leg.et_diff, 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        report.slope = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
    }

    bool ratios_ok = true;
    for (const ContinuityLeg& leg : report.legs)
        ratios_ok = ratios_ok && leg.ratio <= 2.0 * (1.0 + cfg.tol);
    report.pass = ratios_ok && report.slope >= 1.0 - 1e-2;
    return report;
}

// ---------------------------------------------------------------------------
// Corpus suites
// ---------------------------------------------------------------------------

SpectralField random_decay_field(const GridSpec& grid, double decay, double shape,
                                 double amp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<std::complex<double>> c(grid.n);
    for (int k = 0; k <= grid.n / 2; ++k) {
        double mag = amp * std::exp(-decay * std::pow(std::abs(grid.xi(k)), 1.0 / shape));
        double ph = phase(rng);
        c[k] = std::polar(mag, ph);
    }
    return SpectralField::from_coeffs(grid, std::move(c)).symmetrized();
}

SuiteResult suite_norm_machinery(int n, std::uint64_t seed) {
    SuiteResult out;
    GridSpec grid(n, 40.0 * std::numbers::pi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (int i = 0; i < 100; ++i) {
        double decay = 0.2 + 0.8 * unif(rng);
        SpectralField f = random_decay_field(grid, decay, 1.0, 1.0, rng());
        double sigma = (i % 2 == 0) ? 1.0 : 2.0;
        double q = 3.0 * unif(rng);
        double delta = 0.05 + 0.9 * unif(rng);

        // delta = 0 reduction to the Sobolev norm
        {
            CheckRecord r;
            r.check_id = "gevrey_delta0_equals_sobolev";
            r.params = fmt_params({{"n", double(n)}, {"sigma", sigma}, {"q", q}});
            r.lhs = gevrey_norm(f, GevreyParams(sigma, 0.0, q));
            r.rhs = sobolev_norm(f, q);
            r.ratio = std::abs(r.lhs - r.rhs) / r.rhs;
            r.pass = r.ratio <= 1e-14;
            out.records.push_back(r);
        }

        // mode-wise sandwich of the two exponential weights
        {
            CheckRecord r;
            r.check_id = "sandwich_modewise";
            r.params = fmt_params({{"n", double(n)}, {"sigma", sigma}, {"delta", delta}});
            bool ok = true;
            double worst = 0.0;
            double edelta = std::exp(delta);
            for (int k = 0; k < grid.n; ++k) {
                double xi = grid.xi(k);
                double wbar = std::exp(delta * std::pow(std::abs(xi), 1.0 / sigma));
                double wg = std::exp(delta * std::pow(1.0 + xi * xi, 1.0 / (2.0 * sigma)));
                if (!(wbar <= wg && wg <= edelta * wbar)) ok = false;
                worst = std::max(worst, wg / (edelta * wbar));
            }
            double bar = bar_gevrey_norm(f, GevreyParams(sigma, delta, q));
            double gv = gevrey_norm(f, GevreyParams(sigma, delta, q));
            if (!(bar <= gv && gv <= edelta * bar)) ok = false;
            r.lhs = bar;
            r.rhs = gv;
            r.ratio = worst;
            r.pass = ok;
            out.records.push_back(r);
        }
    }
    out.summary = make_summary("norm_machinery", out.records);
    return out;
}

SuiteResult suite_embedding_chain(int n, std::uint64_t seed) {
    SuiteResult out;
    GridSpec grid(n, 40.0 * std::numbers::pi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (int i = 0; i < 100; ++i) {
        SpectralField f = random_decay_field(grid, 0.3 + 0.7 * unif(rng), 1.0, 1.0, rng());
        double delta = 0.1 + 0.8 * unif(rng);
        double delta_p = delta * (0.1 + 0.8 * unif(rng));
        double sigma = 1.0 + unif(rng);
        double sigma_p = 1.0 + (sigma - 1.0) * 0.5 * unif(rng); // sigma_p < sigma
        double q = 0.5 + 2.5 * unif(rng);
        double q_p = q - (0.1 + unif(rng));

        struct Case {
            const char* id;
            double lhs, rhs;
        };
        Case cases[3] = {
            {"embed_delta", gevrey_norm(f, GevreyParams(sigma, delta_p, q)),
             gevrey_norm(f, GevreyParams(sigma, delta, q))},
            {"embed_sigma", gevrey_norm(f, GevreyParams(sigma, delta, q)),
             gevrey_norm(f, GevreyParams(sigma_p, delta, q))},
            {"embed_q", gevrey_norm(f, GevreyParams(sigma, delta, q_p)),
             gevrey_norm(f, GevreyParams(sigma, delta, q))},
        };
        for (const Case& c : cases) {
            CheckRecord r;
            r.check_id = c.id;
            r.params = fmt_params({{"n", double(n)},
                                   {"sigma", sigma},
                                   {"delta", delta},
                                   {"delta_prime", delta_p},
                                   {"q", q}});
            r.lhs = c.lhs;
            r.rhs = c.rhs;
            r.ratio = c.rhs > 0 ? c.lhs / c.rhs : 0.0;
            r.pass = c.lhs <= c.rhs; // zero tolerance, mode-wise inequality
            out.records.push_back(r);
        }
    }
    out.summary = make_summary("embedding_chain", out.records);
    return out;
}

SuiteResult suite_gradient_estimate(int n, int draws, std::uint64_t seed) {
    SuiteResult out;
    GridSpec grid(n, 40.0 * std::numbers::pi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (int i = 0; i < draws; ++i) {
        SpectralField f = random_decay_field(grid, 0.3 + 0.7 * unif(rng), 1.0, 1.0, rng());
        double sigma = (i % 2 == 0) ? 1.0 : 2.0;
        double delta = 0.1 + 0.85 * unif(rng);
        double delta_p = delta * 0.9 * unif(rng);
        double q = 2.0 * unif(rng);

        CheckRecord r;
        r.check_id = "gradient_estimate";
        r.params = fmt_params({{"n", double(n)},
                               {"sigma", sigma},
                               {"delta", delta},
                               {"delta_prime", delta_p},
                               {"q", q}});
        r.lhs = gevrey_norm(f.derivative(), GevreyParams(sigma, delta_p, q));
        double c = std::exp(-sigma) * std::pow(sigma, sigma) /
                   std::pow(delta - delta_p, sigma);
        r.rhs = c * gevrey_norm(f, GevreyParams(sigma, delta, q));
        r.ratio = r.rhs > 0 ? r.lhs / r.rhs : 0.0;
        r.pass = r.lhs <= r.rhs;
        out.records.push_back(r);
    }
    out.summary = make_summary("gradient_estimate", out.records);
    return out;
}

SuiteResult suite_algebra_constant(const std::vector<int>& ns, std::uint64_t seed) {
    SuiteResult out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double sigma = 1.0, delta = 0.3, q = 2.0;

    double base_max = 0.0;
    for (std::size_t in = 0; in < ns.size(); ++in) {
        int n = ns[in];
        GridSpec grid(n, 40.0 * std::numbers::pi);
        double local_max = 0.0;
        for (int i = 0; i < 30; ++i) {
            SpectralField f =
                random_decay_field(grid, 0.8 + 0.7 * unif(rng), 1.0, 1.0, rng())
                    .dealiased();
            SpectralField g =
                random_decay_field(grid, 0.8 + 0.7 * unif(rng), 1.0, 1.0, rng())
                    .dealiased();
            GevreyParams p(sigma, delta, q);
            CheckRecord r;
            r.check_id = "algebra_constant";
            r.params = fmt_params({{"n", double(n)}, {"sigma", sigma}, {"delta", delta}, {"q", q}});
            r.lhs = gevrey_norm(pointwise_product(f, g), p);
            r.rhs = gevrey_norm(f, p) * gevrey_norm(g, p);
            r.ratio = r.rhs > 0 ? r.lhs / r.rhs : 0.0;
            local_max = std::max(local_max, r.ratio);
            r.pass = true; // the constant is reported; boundedness judged below
            out.records.push_back(r);
        }
        if (in == 0) base_max = local_max;
        // boundedness across resolutions: no growth beyond 2x the coarse level
        CheckRecord b;
        b.check_id = "algebra_bounded";
        b.params = fmt_params({{"n", double(n)}});
        b.lhs = local_max;
        b.rhs = 2.0 * base_max;
        b.ratio = base_max > 0 ? local_max / base_max : 0.0;
        b.pass = local_max <= 2.0 * base_max;
        out.records.push_back(b);
    }
    out.summary = make_summary("algebra_constant", out.records);
    return out;
}

SuiteResult suite_pointwise_difference(double step) {
    SuiteResult out;
    for (double r : {1.0, 2.0, 3.5}) {
        for (double sigma : {1.0, 2.0}) {
            for (double delta : {0.0, 0.1, 1.0}) {
                ScanReport rep = check_pointwise_difference(r, sigma, delta, -50.0, 50.0, step);
                CheckRecord rec;
                rec.check_id = "pointwise_difference";
                rec.params = fmt_params({{"r", r},
                                         {"sigma", sigma},
                                         {"delta", delta},
                                         {"step", step},
                                         {"argmax_xi", rep.argmax_xi},
                                         {"argmax_eta", rep.argmax_eta}});
                rec.lhs = rep.max_ratio;
                rec.rhs = 1.0;
                rec.ratio = rep.max_ratio;
                rec.pass = rep.pass;
                out.records.push_back(rec);
            }
        }
    }
    out.summary = make_summary("pointwise_difference", out.records);
    return out;
}

SuiteResult suite_interpolation(int n, int fields, std::uint64_t seed) {
    SuiteResult out;
    GridSpec grid(n, 40.0 * std::numbers::pi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (int i = 0; i < fields; ++i) {
        SpectralField f = random_decay_field(grid, 0.3 + 0.7 * unif(rng), 1.0, 1.0, rng());
        double r, sigma, delta, l;
        if (i % 2 == 0) {
            // the l = 2/3 instance used by the radius-schedule argument
            r = 2.0;
            sigma = 1.0;
            delta = 0.3;
            l = 2.0 / 3.0;
        } else {
            r = 0.5 + 2.5 * unif(rng);
            sigma = 1.0 + unif(rng);
            delta = 0.9 * unif(rng);
            l = 0.2 + 1.8 * unif(rng);
        }
        CheckResult c = check_interpolation(f, r, sigma, delta, l);
        CheckRecord rec;
        rec.check_id = "interpolation";
        rec.params = fmt_params({{"n", double(n)}, {"r", r}, {"sigma", sigma}, {"delta", delta}, {"l", l}});
        rec.lhs = c.lhs;
        rec.rhs = c.rhs;
        rec.ratio = c.ratio;
        rec.pass = c.pass;
        out.records.push_back(rec);
    }
    out.summary = make_summary("interpolation", out.records);
    return out;
}

SuiteResult suite_commutator(std::uint64_t seed) {
    SuiteResult out;
    const double r = 2.0, sigma = 1.0, delta = 0.2;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // Decay fast enough that the spectra are resolved already at n = 64;
    // otherwise the calibration constant is biased low and higher
    // resolutions see spurious growth.
    // Fields decay fast enough (e^{-1.5 xi}) that any seed realized at n = 64
    // and at n = 256 describes the same function; growth with n is then a
    // property of the estimate, not of the corpus.
    auto make_pair = [&](const GridSpec& grid, std::uint64_t s1, std::uint64_t s2) {
        return std::make_pair(random_decay_field(grid, 1.5, 1.0, 1.0, s1),
                              random_decay_field(grid, 1.5, 1.0, 1.0, s2));
    };

    // Calibration corpus: the frozen constant carries a 3x safety factor
    // because the per-pair ratio has a heavy upper tail under random phases.
    double c_cal = 0.0;
    {
        GridSpec grid(64, 2.0 * std::numbers::pi);
        for (int i = 0; i < 50; ++i) {
            auto [u, w] = make_pair(grid, rng(), rng());
            CheckResult c = check_commutator(u, w, r, sigma, delta, 1.0);
            c_cal = std::max(c_cal, c.ratio);
        }
    }
    const double c_frozen = 3.0 * c_cal;
    {
        CheckRecord rec;
        rec.check_id = "commutator_calibration";
        rec.params = fmt_params({{"n", 64.0}, {"r", r}, {"sigma", sigma}, {"delta", delta}});
        rec.lhs = c_cal;
        rec.rhs = c_frozen;
        rec.ratio = 1.0;
        rec.pass = c_cal > 0.0 && std::isfinite(c_cal);
        out.records.push_back(rec);
    }

    // Fresh 100-pair corpus, each pair realized at n = 64, 128, 256.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> seeds(100);
    for (auto& s : seeds) s = {rng(), rng()};
    double max_ratio_64 = 0.0;
    for (int n : {64, 128, 256}) {
        GridSpec grid(n, 2.0 * std::numbers::pi);
        double max_ratio_n = 0.0;
        for (const auto& [s1, s2] : seeds) {
            auto [u, w] = make_pair(grid, s1, s2);
            CheckResult c = check_commutator(u, w, r, sigma, delta, c_frozen);
            max_ratio_n = std::max(max_ratio_n, c.ratio);
            if (n == 64) continue; // reference resolution, not a fresh check
            CheckRecord rec;
            rec.check_id = "commutator_fresh";
            rec.params = fmt_params({{"n", double(n)}, {"r", r}, {"sigma", sigma}, {"delta", delta}});
            rec.lhs = c.lhs;
            rec.rhs = c.rhs;
            rec.ratio = c.ratio / c_cal;
            rec.pass = c.pass;
            out.records.push_back(rec);
        }
        if (n == 64) {
            max_ratio_64 = max_ratio_n;
            continue;
        }
        // no growth with resolution beyond +20%
        CheckRecord rec;
        rec.check_id = "commutator_growth";
        rec.params = fmt_params({{"n", double(n)}});
        rec.lhs = max_ratio_n;
        rec.rhs = 1.2 * max_ratio_64;
        rec.ratio = max_ratio_n / max_ratio_64;
        rec.pass = max_ratio_n <= 1.2 * max_ratio_64;
        out.records.push_back(rec);
    }
    out.summary = make_summary("commutator", out.records);
    return out;
}

SuiteResult suite_ovsyannikov(std::uint64_t seed) {
    SuiteResult out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // delta(t) stays in (delta, 1) on dense sweeps
    for (double sigma : {1.0, 2.0}) {
        for (double delta : {0.1, 0.5, 0.9}) {
            OvsyannikovDelta od{delta, sigma, 1.0};
            double tmax = od.horizon() * 0.9999;
            bool ok = true;
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i) {
                double t = tmax * i / 999.0;
                double d = ovs_delta_of_t(od, t);
                if (!(d > delta && d < 1.0)) ok = false;
                worst = std::max(worst, d);
            }
            CheckRecord rec;
            rec.check_id = "ovs_delta_range";
            rec.params = fmt_params({{"sigma", sigma}, {"delta", delta}});
            rec.lhs = worst;
            rec.rhs = 1.0;
            rec.ratio = worst;
            rec.pass = ok;
            out.records.push_back(rec);
        }
    }

    // integral bound on synthetic trajectories
    for (int i = 0; i < 50; ++i) {
        double sigma = (i % 2 == 0) ? 1.0 : 2.0;
        double a = 0.5 + 1.5 * unif(rng);
        double delta = 0.1 + 0.6 * unif(rng);
        double B = 1.0 + 5.0 * unif(rng);  // (1+xi^2)^{1/(2 sigma)} of a mode
        double A0 = 0.1 + 2.0 * unif(rng);
        double lam = 2.0 * unif(rng);
        SyntheticTrajectory traj;
        traj.gnorm = [A0, lam, B](double t, double d) {
            return A0 * std::exp(-lam * t) * std::exp(d * B);
        };
        traj.ea_norm = ea_norm_of(traj.gnorm, a, sigma);
        OvsyannikovDelta od{delta, sigma, a};
        double t = od.horizon() * (0.1 + 0.8 * unif(rng));
        CheckResult c = check_singular_integral(traj, a, sigma, delta, t);
        CheckRecord rec;
        rec.check_id = "singular_integral";
        rec.params = fmt_params({{"sigma", sigma}, {"a", a}, {"delta", delta}, {"t", t}});
        rec.lhs = c.lhs;
        rec.rhs = c.rhs;
        rec.ratio = c.ratio;
        rec.pass = c.pass;
        out.records.push_back(rec);
    }
    out.summary = make_summary("ovsyannikov", out.records);
    return out;
}

} // namespace gsw
