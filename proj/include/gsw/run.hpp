#pragma once

#include <string>

#include "gsw/config.hpp"

namespace gsw {

// Exit codes: 0 ok, 2 config/hypothesis, 3 numeric, 4 blow-up finding
// (artifacts still written).
inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_numeric = 3;
inline constexpr int exit_blow_up = 4;

int run_simulate(const RunConfig& cfg, bool quiet);
int run_radius_track(const RunConfig& cfg, bool quiet);
int run_continuity(const RunConfig& cfg, bool quiet);
int run_verify(const RunConfig& cfg, bool quiet);
int run_lifespan(const RunConfig& cfg, bool quiet);

// Dispatch on cfg.mode; validates first and maps exceptions to exit codes.
int run(const RunConfig& cfg, bool quiet = false);

std::string version_string();

} // namespace gsw
