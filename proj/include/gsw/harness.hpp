#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gsw/dynamics.hpp"
#include "gsw/norms.hpp"

namespace gsw {

// ---------------------------------------------------------------------------
// Weighted sup norm over (t, delta) used for data-to-solution continuity.
// ---------------------------------------------------------------------------

struct ETNormParams {
    double T = 1.0;
    double sigma = 1.0;
    double q = 0.0;
    std::vector<double> delta_grid;
    std::vector<std::vector<double>> t_grids; // one grid per delta

    void validate() const;
    double horizon(double delta) const; // T (1-delta)^sigma / (2^sigma - 1)
};

// Default grid: 16 deltas log-spaced in (0.02, 0.98), 64 times per delta.
ETNormParams make_et_params(double T, double sigma, double q,
                            int n_delta = 16, int n_t = 64);

// Snapshots of a trajectory at strictly increasing times.
class SampledTrajectory {
public:
    void add(double t, SpectralField f);
    const SpectralField& at(double t) const; // nearest sample; throws if empty
    std::size_t size() const { return times_.size(); }
    const std::vector<double>& times() const { return times_; }
    const SpectralField& state(std::size_t i) const { return states_[i]; }

private:
    std::vector<double> times_;
    std::vector<SpectralField> states_;
};

// sup over the finite (delta, t) grid of
//   ||f(t)||_{G^delta_{sigma,q}} (1-delta)^sigma sqrt(1 - t / (T (1-delta)^sigma)).
// A lower bound of the true sup; refined by grid refinement.
double et_norm(const SampledTrajectory& traj, const ETNormParams& p);

// ---------------------------------------------------------------------------
// Auxiliary radius function and its integral bound.
// ---------------------------------------------------------------------------

struct OvsyannikovDelta {
    double delta = 0.5; // base delta in (0,1)
    double sigma = 1.0;
    double a = 1.0;     // time scale

    void validate() const;
    double horizon() const; // a (1-delta)^sigma / (2^sigma - 1)
};

// delta(t) = (1+d)/2 + (1/2)^{2+1/d} { [(1-d)^s - t/a]^{1/s}
//                                    - [(1-d)^s + (2^{s+1}-1) t/a]^{1/s} }.
double ovs_delta_of_t(const OvsyannikovDelta& d, double t);

// A trajectory given by a closed-form norm evaluator, plus its weighted
// sup norm on [0, a).
struct SyntheticTrajectory {
    std::function<double(double t, double delta)> gnorm; // ||u(t)||_{G^delta}
    double ea_norm = 0.0;
};

// Dense-grid evaluation of the weighted sup norm of a synthetic trajectory.
double ea_norm_of(const std::function<double(double, double)>& gnorm,
                  double a, double sigma, int n_delta = 64, int n_t = 128);

struct CheckResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool pass = false;
};

// \int_0^t ||u(tau)||_{delta(tau)} / (delta(tau) - delta)^sigma dtau
//   <= a 2^{2s+3} ||u||_{E_a} / (1-delta)^sigma
//      * sqrt( a (1-delta)^sigma / (a (1-delta)^sigma - t) ).
CheckResult check_singular_integral(const SyntheticTrajectory& u, double a,
                               double sigma, double delta, double t);

// ---------------------------------------------------------------------------
// Commutator, pointwise-difference and interpolation estimates.
// ---------------------------------------------------------------------------

// |<A^r E (u w_x), A^r E w>| against
// C ( ||A^r u|| ||A^r w||^2
//     + delta ( ||A^r E u|| ||A^{r+1/(2s)} E w||^2
//               + ||A^{r+1/(2s)} E u|| ||A^r E w|| ||A^{r+1/(2s)} E w|| ) )
// with E = exp(delta A^{1/sigma}). Requires r > 3/2.
CheckResult check_commutator(const SpectralField& u, const SpectralField& w,
                             double r, double sigma, double delta, double C);

struct ScanReport {
    bool pass = false;
    double max_ratio = 0.0;
    double argmax_xi = 0.0;
    double argmax_eta = 0.0;
    long total = 0;
    long passed = 0;
    double c_r = 0.0;
};

// Brute-force scan of the pointwise weight-difference bound over a (xi, eta)
// grid, with the explicit constant C_r = max(r, r + 1/sigma) * 2^{max(r-1,0)}.
ScanReport check_pointwise_difference(double r, double sigma, double delta,
                                      double xi_min, double xi_max, double step);

// ||u||_{G^delta_{s,r}} <= sqrt(e) ||u||_{H^r} + (2 delta)^{l/2} ||u||_{G^delta_{s,r+l/(2s)}}.
CheckResult check_interpolation(const SpectralField& f, double r, double sigma,
                                double delta, double l);

// ---------------------------------------------------------------------------
// Data-to-solution continuity experiment.
// ---------------------------------------------------------------------------

struct ContinuityConfig {
    SystemParams system;
    double sigma = 1.0;
    double q = 3.0;
    double q1 = 2.0;
    double C_alg = 1.0;        // composite constant of the horizon formula
    int perturb_mode = 1;      // mode receiving the amplitude perturbation
    std::vector<double> eps;   // perturbation amplitudes
    double tol = 0.1;          // ratio slack over the factor-2 bound
    int n_delta = 16;
    int n_t = 64;
    int steps = 200;           // time steps across the common horizon
};

struct ContinuityLeg {
    double eps = 0.0;
    double data_diff = 0.0; // ||z0^n - z0^inf||_1
    double et_diff = 0.0;   // ||z^n - z^inf||_{E_T}
    double ratio = 0.0;
};

struct ContinuityReport {
    double T = 0.0;
    std::vector<ContinuityLeg> legs;
    double slope = 0.0; // log-log regression of et_diff against eps
    bool pass = false;
};

// Simulates the reference solution and each perturbed one over a common
// horizon and reports ||z^n - z^inf||_{E_T} / ||z0^n - z0^inf||_1.
ContinuityReport continuity_experiment(const ContinuityConfig& cfg,
                                       const SpectralField& u0,
                                       const SpectralField& rho0);

// ---------------------------------------------------------------------------
// Report plumbing shared by the CLI verify mode and the acceptance suite.
// ---------------------------------------------------------------------------

struct CheckRecord {
    std::string check_id;
    std::string params;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool pass = false;
};

struct SuiteSummary {
    std::string check_id;
    long total = 0;
    long passed = 0;
    double max_ratio = 0.0;
    std::string argmax_params;
};

struct SuiteResult {
    std::vector<CheckRecord> records;
    SuiteSummary summary;
    bool pass() const { return summary.total == summary.passed; }
};

// Random field with spectrum amp * exp(-decay |xi|^{1/shape}) and random
// phases; the workhorse of the inequality corpora.
SpectralField random_decay_field(const GridSpec& grid, double decay,
                                 double shape, double amp, std::uint64_t seed);

SuiteResult suite_norm_machinery(int n, std::uint64_t seed);     // delta=0 + sandwich
SuiteResult suite_embedding_chain(int n, std::uint64_t seed);    // three embeddings
SuiteResult suite_gradient_estimate(int n, int draws, std::uint64_t seed);
SuiteResult suite_algebra_constant(const std::vector<int>& ns, std::uint64_t seed);
SuiteResult suite_pointwise_difference(double step);
SuiteResult suite_interpolation(int n, int fields, std::uint64_t seed);
SuiteResult suite_commutator(std::uint64_t seed); // calibrate n=64, check 128/256
SuiteResult suite_ovsyannikov(std::uint64_t seed); // delta(t) range + integral bound

} // namespace gsw
