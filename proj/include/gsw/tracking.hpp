#pragma once

#include <vector>

#include "gsw/dynamics.hpp"
#include "gsw/norms.hpp"

namespace gsw {

// Constants entering the lifespan lower bound.
struct LifespanParams {
    double L_const = 1.0;
    double M_const = 1.0;
    double R_const = 1.0;
    double sigma = 1.0;
    double C_alg = 1.0; // composite constant, empirical or configured

    void validate() const {
        if (!(L_const > 0 && M_const > 0 && R_const > 0 && C_alg > 0))
            throw DomainError("LifespanParams: all constants must be positive");
        if (!(sigma >= 1.0))
            throw DomainError("LifespanParams: sigma must be >= 1");
    }
};

// T0 = min{ 1/(2^{2s+4} L), (2^s - 1) R / ((2^s - 1) 2^{2s+3} L R + M) }
// with s = sigma.
double lifespan_T0(const LifespanParams& p);

// Closed form for the one-component reduction:
// T0 = 1 / (2^{2s+5} C (e^{-s} s^s + 2) ||u0||).
double lifespan_T0_one_component(double sigma, double C, double u0_norm);

// Two-component closed form:
// T0 = 1 / (2^{2s+5} C (e^{-s} s^s + 2) (||z0||_1 + 1)).
double lifespan_T0_two_component(double sigma, double C, double z0_norm);

// Holomorphy window T0 (1 - delta)^sigma / (2^sigma - 1), delta in (0,1).
double holomorphy_time(double T0, double delta, double sigma);

// h^2(t) = 2 ||u0||_{G^{delta0}}^2 + 2 C \int_0^t theta^3, by trapezoid.
// Returns the whole series h(t_i) for the sampled theta(t_i).
std::vector<double> h_series(const std::vector<double>& t,
                             const std::vector<double>& theta,
                             double u0_norm_G_delta0, double C);

// h at the final sample (convenience form).
double h_of_t(const std::vector<double>& t, const std::vector<double>& theta,
              double u0_norm_G_delta0, double C);

// delta(t) = delta0 exp(-C \int_0^t h), by trapezoid; whole series.
std::vector<double> delta_schedule(const std::vector<double>& t,
                                   const std::vector<double>& h,
                                   double delta0, double C);

struct RadiusSample {
    double t = 0.0;
    double theta = 0.0;          // ||u(t)||_{H^q}
    double h = 0.0;              // bootstrap majorant
    double delta_theory = 0.0;   // scheduled radius
    double delta_measured = 0.0; // fitted radius
    double fit_residual = 0.0;
    double gevrey_sq = 0.0;      // ||u(t)||_{G^{delta(t)}}^2
    bool pass = false;
};

struct RadiusTrace {
    std::vector<RadiusSample> samples;
};

struct MonitorConfig {
    SystemParams system;
    double sigma = 1.0;
    double q = 3.0;
    double delta0 = 0.5;
    double C = 1.0;       // schedule constant
    double dt = 1e-3;
    double T = 1.0;
    double output_every = 0.05;
    double bound_tol = 0.05;
    Scheme scheme = Scheme::rk4;
};

struct MonitorResult {
    RadiusTrace trace;
    bool pass = false;
    bool blow_up = false;
    double blow_up_time = 0.0;
};

// Evolve (u0, rho0), recording theta, h, the scheduled radius and the
// measured radius at each output time. PASS iff at every sample
//   (i)  ||u(t)||_{G^{delta(t)}}^2 <= h^2(t) (1 + bound_tol), and
//   (ii) delta_measured >= delta(t) - max(0.05 delta(t), 3 * fit residual).
// A blow-up with a != 2 is reported as a finding, not thrown.
MonitorResult regularity_monitor(const MonitorConfig& cfg,
                                 const SpectralField& u0,
                                 const SpectralField& rho0);

} // namespace gsw
