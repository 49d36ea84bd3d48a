#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gsw/dynamics.hpp"
#include "gsw/initial_data.hpp"

namespace gsw {

// Flat key-value run configuration (JSON on disk). Documented keys:
//   mode, n, L, s, a, alpha, kappa, sigma, q, q1, dt, T, scheme,
//   output_every, delta0, C, seed, output_dir, bound_tol,
//   initial_u {...}, initial_rho {...},
//   continuity: perturb_mode, eps_count, tol
struct RunConfig {
    std::string mode = "simulate";
    int n = 128;
    double L = 40.0 * 3.14159265358979323846;
    int s = 2;
    double a = 2.0;
    double alpha = 0.0;
    double kappa = 0.0;
    double sigma = 1.0;
    double q = 3.0;
    double q1 = 2.0;
    double dt = 1e-3;
    double T = 1.0;
    std::string scheme = "rk4";
    double output_every = 0.05;
    double delta0 = 0.5;
    double C = 1.0;
    double bound_tol = 0.05;
    std::uint64_t seed = 1;
    std::string output_dir = "out";
    InitialSpec initial_u;
    InitialSpec initial_rho;

    // continuity mode
    int perturb_mode = 1;
    int eps_count = 8;
    double tol = 0.1;

    // lifespan mode
    double lifespan_norm = 1.0;

    GridSpec grid() const { return GridSpec(n, L); }
    SystemParams system() const { return SystemParams(s, a, alpha, kappa); }

    // Hypothesis registry: throws HypothesisError with a message quoting the
    // violated inequality.
    void validate() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);
std::string dump_config(const RunConfig& cfg); // resolved config, for manifests

} // namespace gsw
