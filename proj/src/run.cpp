#include "gsw/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "gsw/checkpoint.hpp"
#include "gsw/harness.hpp"
#include "gsw/tracking.hpp"

namespace gsw {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

void write_manifest(const RunConfig& cfg) {
    json m;
    m["version"] = version_string();
    m["mode"] = cfg.mode;
    m["config"] = json::parse(dump_config(cfg));
    std::ofstream out(fs::path(cfg.output_dir) / "manifest.json");
    if (!out) throw FormatError("cannot write manifest.json in " + cfg.output_dir);
    out << m.dump(2) << "\n";
}

std::ofstream open_out(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.output_dir);
    std::ofstream out(fs::path(cfg.output_dir) / name);
    if (!out) throw FormatError("cannot write " + name + " in " + cfg.output_dir);
    return out;
}

std::string trace_line(const TwoComponentState& z, const RunConfig& cfg) {
    json j;
    j["t"] = z.t;
    j["Hq_u"] = sobolev_norm(z.u, cfg.q);
    j["Hq1_rho"] = sobolev_norm(z.rho, cfg.q1);
    Conserved c = conserved_quantities(z, cfg.system());
    j["H"] = c.H;
    j["Mrho"] = c.Mrho;
    j["max_u"] = z.u.max_abs();
    j["max_ux"] = z.u.derivative().max_abs();
    return j.dump();
}

void write_suite(std::ostream& csv, const SuiteResult& r) {
    for (const CheckRecord& rec : r.records)
        csv << rec.check_id << ",\"" << rec.params << "\"," << rec.lhs << ","
            << rec.rhs << "," << rec.ratio << "," << (rec.pass ? "pass" : "fail")
            << "\n";
}

void print_suite(const SuiteResult& r, bool quiet) {
    if (quiet) return;
    const SuiteSummary& s = r.summary;
    std::cout << (r.pass() ? "PASS" : "FAIL") << " " << s.check_id << " ("
              << s.passed << "/" << s.total << ", max ratio " << s.max_ratio
              << ")\n";
}

} // namespace

std::string version_string() { return "gsw 1.0.0"; }

int run_simulate(const RunConfig& cfg, bool quiet) {
    GridSpec grid = cfg.grid();
    SystemParams sys = cfg.system();
    TwoComponentState z(0.0, make_initial(grid, cfg.initial_u),
                        make_initial(grid, cfg.initial_rho));
    Scheme scheme = scheme_from_string(cfg.scheme);

    std::ofstream trace = open_out(cfg, "trace.ndjson");
    write_manifest(cfg);
    trace << trace_line(z, cfg) << "\n";

    int code = exit_ok;
    const int n_out = static_cast<int>(std::ceil(cfg.T / cfg.output_every));
    try {
        for (int i = 1; i <= n_out; ++i) {
            double t_target = std::min(i * cfg.output_every, cfg.T);
            while (z.t < t_target - 1e-12) {
                double h = std::min(cfg.dt, t_target - z.t);
                z = step(z, sys, h, scheme);
            }
            trace << trace_line(z, cfg) << "\n";
        }
    } catch (const BlowUpError& e) {
        if (!quiet)
            std::cout << "FINDING blow-up at t = " << e.t << " (max|u_x| = "
                      << e.max_ux << ")\n";
        code = exit_blow_up;
    }
    save_checkpoint((fs::path(cfg.output_dir) / "final.ndjson").string(), z);
    if (!quiet && code == exit_ok)
        std::cout << "simulate: reached t = " << z.t << "\n";
    return code;
}

int run_radius_track(const RunConfig& cfg, bool quiet) {
    GridSpec grid = cfg.grid();
    SpectralField u0 = make_initial(grid, cfg.initial_u);
    SpectralField rho0 = make_initial(grid, cfg.initial_rho);

    MonitorConfig mc;
    mc.system = cfg.system();
    mc.sigma = cfg.sigma;
    mc.q = cfg.q;
    mc.delta0 = cfg.delta0;
    mc.C = cfg.C;
    mc.dt = cfg.dt;
    mc.T = cfg.T;
    mc.output_every = cfg.output_every;
    mc.bound_tol = cfg.bound_tol;
    mc.scheme = scheme_from_string(cfg.scheme);

    MonitorResult res = regularity_monitor(mc, u0, rho0);

    std::ofstream csv = open_out(cfg, "radius.csv");
    write_manifest(cfg);
    csv << "t,theta,h,delta_theory,delta_measured,fit_residual,gevrey_sq,pass\n";
    csv.precision(17);
    for (const RadiusSample& s : res.trace.samples)
        csv << s.t << "," << s.theta << "," << s.h << "," << s.delta_theory << ","
            << s.delta_measured << "," << s.fit_residual << "," << s.gevrey_sq
            << "," << (s.pass ? "pass" : "fail") << "\n";

    if (res.blow_up) {
        if (!quiet)
            std::cout << "FINDING blow-up at t = " << res.blow_up_time << "\n";
        return exit_blow_up;
    }
    if (!quiet)
        std::cout << "radius-track: " << (res.pass ? "PASS" : "FAIL") << " over "
                  << res.trace.samples.size() << " samples\n";
    return res.pass ? exit_ok : exit_numeric;
}

int run_continuity(const RunConfig& cfg, bool quiet) {
    GridSpec grid = cfg.grid();
    SpectralField u0 = make_initial(grid, cfg.initial_u);
    SpectralField rho0 = make_initial(grid, cfg.initial_rho);

    ContinuityConfig cc;
    cc.system = cfg.system();
    cc.sigma = cfg.sigma;
    cc.q = cfg.q;
    cc.q1 = cfg.q1;
    cc.C_alg = cfg.C;
    cc.perturb_mode = cfg.perturb_mode;
    cc.tol = cfg.tol;
    for (int i = 1; i <= cfg.eps_count; ++i)
        cc.eps.push_back(std::pow(2.0, -i));

    ContinuityReport rep = continuity_experiment(cc, u0, rho0);

    std::ofstream csv = open_out(cfg, "continuity.csv");
    write_manifest(cfg);
    csv << "eps,data_diff,et_diff,ratio\n";
    csv.precision(17);
    for (const ContinuityLeg& leg : rep.legs)
        csv << leg.eps << "," << leg.data_diff << "," << leg.et_diff << ","
            << leg.ratio << "\n";

    if (!quiet)
        std::cout << "continuity: " << (rep.pass ? "PASS" : "FAIL") << " (T = "
                  << rep.T << ", slope = " << rep.slope << ")\n";
    return rep.pass ? exit_ok : exit_numeric;
}

int run_verify(const RunConfig& cfg, bool quiet) {
    std::ofstream csv = open_out(cfg, "verify.csv");
    write_manifest(cfg);
    csv << "check_id,params,lhs,rhs,ratio,verdict\n";
    csv.precision(17);

    bool all = true;
    auto take = [&](const SuiteResult& r) {
        write_suite(csv, r);
        print_suite(r, quiet);
        all = all && r.pass();
    };
    take(suite_norm_machinery(cfg.n, cfg.seed));
    take(suite_embedding_chain(cfg.n, cfg.seed + 1));
    take(suite_gradient_estimate(cfg.n, 500, cfg.seed + 2));
    take(suite_algebra_constant({64, 128, 256}, cfg.seed + 3));
    take(suite_pointwise_difference(0.25));
    take(suite_interpolation(cfg.n, 100, cfg.seed + 4));
    take(suite_commutator(cfg.seed + 5));
    take(suite_ovsyannikov(cfg.seed + 6));

    if (!quiet) std::cout << "verify: " << (all ? "PASS" : "FAIL") << "\n";
    return all ? exit_ok : exit_numeric;
}

int run_lifespan(const RunConfig& cfg, bool quiet) {
    std::ofstream csv = open_out(cfg, "lifespan.csv");
    write_manifest(cfg);
    csv << "quantity,value\n";
    csv.precision(17);

    double t1 = lifespan_T0_one_component(cfg.sigma, cfg.C, cfg.lifespan_norm);
    double t2 = lifespan_T0_two_component(cfg.sigma, cfg.C, cfg.lifespan_norm);
    csv << "T0_one_component," << t1 << "\n";
    csv << "T0_two_component," << t2 << "\n";
    for (double d : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        std::ostringstream label;
        label << "holomorphy_time_delta_" << d;
        csv << label.str() << "," << holomorphy_time(t2, d, cfg.sigma) << "\n";
    }

    if (!quiet)
        std::cout << "lifespan: T0 (one component) = " << t1
                  << ", T0 (two component) = " << t2 << "\n";
    return exit_ok;
}

int run(const RunConfig& cfg, bool quiet) {
    try {
        cfg.validate();
        if (cfg.mode == "simulate") return run_simulate(cfg, quiet);
        if (cfg.mode == "radius-track") return run_radius_track(cfg, quiet);
        if (cfg.mode == "continuity") return run_continuity(cfg, quiet);
        if (cfg.mode == "verify") return run_verify(cfg, quiet);
        if (cfg.mode == "lifespan") return run_lifespan(cfg, quiet);
        throw HypothesisError("unknown mode \"" + cfg.mode + "\"");
    } catch (const HypothesisError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const FormatError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const BlowUpError& e) {
        std::cerr << "blow-up finding: " << e.what() << "\n";
        return exit_blow_up;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    }
}

} // namespace gsw
