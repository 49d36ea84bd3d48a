#include "gsw/tracking.hpp"

#include <cmath>
#include <limits>

namespace gsw {

double lifespan_T0(const LifespanParams& p) {
    p.validate();
    double pow2s = std::pow(2.0, p.sigma);
    double first = 1.0 / (std::pow(2.0, 2.0 * p.sigma + 4.0) * p.L_const);
    double second = (pow2s - 1.0) * p.R_const /
                    ((pow2s - 1.0) * std::pow(2.0, 2.0 * p.sigma + 3.0) * p.L_const *
                         p.R_const +
                     p.M_const);
    return std::min(first, second);
}

double lifespan_T0_one_component(double sigma, double C, double u0_norm) {
    if (!(sigma >= 1.0) || !(C > 0.0) || !(u0_norm > 0.0))
        throw DomainError("lifespan_T0_one_component: invalid inputs");
    double factor = std::exp(-sigma) * std::pow(sigma, sigma) + 2.0;
    return 1.0 / (std::pow(2.0, 2.0 * sigma + 5.0) * C * factor * u0_norm);
}

double lifespan_T0_two_component(double sigma, double C, double z0_norm) {
    if (!(sigma >= 1.0) || !(C > 0.0) || !(z0_norm >= 0.0))
        throw DomainError("lifespan_T0_two_component: invalid inputs");
    double factor = std::exp(-sigma) * std::pow(sigma, sigma) + 2.0;
    return 1.0 / (std::pow(2.0, 2.0 * sigma + 5.0) * C * factor * (z0_norm + 1.0));
}

double holomorphy_time(double T0, double delta, double sigma) {
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("holomorphy_time: delta must lie in (0,1)");
    if (!(T0 > 0.0) || !(sigma >= 1.0))
        throw DomainError("holomorphy_time: invalid T0 or sigma");
    return T0 * std::pow(1.0 - delta, sigma) / (std::pow(2.0, sigma) - 1.0);
}

std::vector<double> h_series(const std::vector<double>& t,
                             const std::vector<double>& theta,
                             double u0_norm_G_delta0, double C) {
    if (t.empty() || t.size() != theta.size())
        throw DomainError("h_series: empty or mismatched trace");
    std::vector<double> h(t.size());
    double integral = 0.0;
    h[0] = std::sqrt(2.0) * u0_norm_G_delta0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        double cube_a = theta[i - 1] * theta[i - 1] * theta[i - 1];
        double cube_b = theta[i] * theta[i] * theta[i];
        integral += 0.5 * (t[i] - t[i - 1]) * (cube_a + cube_b);
        h[i] = std::sqrt(2.0 * u0_norm_G_delta0 * u0_norm_G_delta0 + 2.0 * C * integral);
    }
    return h;
}

double h_of_t(const std::vector<double>& t, const std::vector<double>& theta,
              double u0_norm_G_delta0, double C) {
    return h_series(t, theta, u0_norm_G_delta0, C).back();
}

std::vector<double> delta_schedule(const std::vector<double>& t,
                                   const std::vector<double>& h,
                                   double delta0, double C) {
    if (t.empty() || t.size() != h.size())
        throw DomainError("delta_schedule: empty or mismatched trace");
    std::vector<double> delta(t.size());
    double integral = 0.0;
    delta[0] = delta0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        integral += 0.5 * (t[i] - t[i - 1]) * (h[i - 1] + h[i]);
        delta[i] = delta0 * std::exp(-C * integral);
    }
    return delta;
}

MonitorResult regularity_monitor(const MonitorConfig& cfg,
                                 const SpectralField& u0,
                                 const SpectralField& rho0) {
    MonitorResult result;
    GevreyParams g0(cfg.sigma, cfg.delta0, cfg.q);
    const double u0_gd0 = gevrey_norm(u0, g0);

    TwoComponentState z(0.0, u0, rho0);
    std::vector<double> ts, thetas;

    auto record = [&](const TwoComponentState& state) {
        ts.push_back(state.t);
        thetas.push_back(sobolev_norm(state.u, cfg.q));
    };
    record(z);

    const int n_out = static_cast<int>(std::ceil(cfg.T / cfg.output_every));
    try {
        for (int i = 1; i <= n_out; ++i) {
            double t_target = std::min(i * cfg.output_every, cfg.T);
            while (z.t < t_target - 1e-12) {
                double h = std::min(cfg.dt, t_target - z.t);
                z = step(z, cfg.system, h, cfg.scheme);
            }
            record(z);
            // keep a state snapshot per output time for the norm checks
            result.trace.samples.push_back({});
            result.trace.samples.back().t = z.t;
            result.trace.samples.back().theta = thetas.back();
            // spectrum-derived entries filled below; store fit now
            try {
                RadiusFit fit = estimate_radius(z.u, cfg.sigma);
                result.trace.samples.back().delta_measured = fit.delta_hat;
                result.trace.samples.back().fit_residual = fit.residual;
            } catch (const InsufficientSpectrumError&) {
                // no spectrum above the noise floor: nothing contradicts the
                // schedule, so report an unbounded measured radius
                result.trace.samples.back().delta_measured =
                    std::numeric_limits<double>::infinity();
                result.trace.samples.back().fit_residual = 0.0;
            }
            // Gevrey norm is evaluated once delta(t) is known, so stash the
            // state norm lazily through a second pass; store u here.
            result.trace.samples.back().gevrey_sq = -1.0; // placeholder
            // evaluate immediately with the schedule so far
            std::vector<double> h_ser = h_series(ts, thetas, u0_gd0, cfg.C);
            std::vector<double> d_ser = delta_schedule(ts, h_ser, cfg.delta0, cfg.C);
            RadiusSample& s = result.trace.samples.back();
            s.h = h_ser.back();
            s.delta_theory = d_ser.back();
            double gn = gevrey_norm(z.u, GevreyParams(cfg.sigma, s.delta_theory, cfg.q));
            s.gevrey_sq = gn * gn;
        }
    } catch (const BlowUpError& e) {
        if (cfg.system.a == 2.0) throw; // unexpected for the conserved regime
        result.blow_up = true;
        result.blow_up_time = e.t;
    }

    // Insert the t = 0 sample at the front of the trace.
    {
        RadiusSample s0;
        s0.t = 0.0;
        s0.theta = thetas.front();
        s0.h = std::sqrt(2.0) * u0_gd0;
        s0.delta_theory = cfg.delta0;
        try {
            RadiusFit fit = estimate_radius(u0, cfg.sigma);
            s0.delta_measured = fit.delta_hat;
            s0.fit_residual = fit.residual;
        } catch (const InsufficientSpectrumError&) {
            s0.delta_measured = std::numeric_limits<double>::infinity();
        }
        s0.gevrey_sq = u0_gd0 * u0_gd0;
        result.trace.samples.insert(result.trace.samples.begin(), s0);
    }

    bool all_pass = true;
    for (RadiusSample& s : result.trace.samples) {
        double fit_tol = std::max(0.05 * s.delta_theory, 3.0 * s.fit_residual);
        bool bound_ok = s.gevrey_sq <= s.h * s.h * (1.0 + cfg.bound_tol);
        bool radius_ok = s.delta_measured >= s.delta_theory - fit_tol;
        s.pass = bound_ok && radius_ok;
        all_pass = all_pass && s.pass;
    }
    result.pass = all_pass && !result.blow_up;
    return result;
}

} // namespace gsw
