#include "gsw/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gsw/errors.hpp"

namespace gsw {

namespace {

using json = nlohmann::ordered_json;

InitialSpec parse_initial(const json& j) {
    InitialSpec spec;
    std::string kind = j.value("kind", "zero");
    if (kind == "zero") {
        spec.kind = InitialSpec::Kind::Zero;
    } else if (kind == "gevrey_random") {
        spec.kind = InitialSpec::Kind::GevreyRandom;
        spec.delta0 = j.value("delta0", 0.5);
        spec.sigma = j.value("sigma", 1.0);
        spec.amplitude = j.value("amplitude", 0.0);
        spec.seed = j.value("seed", std::uint64_t(0));
    } else if (kind == "modes") {
        spec.kind = InitialSpec::Kind::Modes;
        for (const json& m : j.value("modes", json::array())) {
            ModeSpec ms;
            ms.k = m.value("k", 1);
            ms.amplitude = m.value("amplitude", 0.0);
            ms.phase = m.value("phase", 0.0);
            spec.modes.push_back(ms);
        }
    } else if (kind == "samples") {
        spec.kind = InitialSpec::Kind::Samples;
        spec.samples_path = j.value("path", "");
    } else {
        throw FormatError("config: unknown initial-data kind \"" + kind + "\"");
    }
    return spec;
}

json dump_initial(const InitialSpec& spec) {
    json j;
    switch (spec.kind) {
    case InitialSpec::Kind::Zero:
        j["kind"] = "zero";
        break;
    case InitialSpec::Kind::GevreyRandom:
        j["kind"] = "gevrey_random";
        j["delta0"] = spec.delta0;
        j["sigma"] = spec.sigma;
        j["amplitude"] = spec.amplitude;
        j["seed"] = spec.seed;
        break;
    case InitialSpec::Kind::Modes:
        j["kind"] = "modes";
        j["modes"] = json::array();
        for (const ModeSpec& m : spec.modes)
            j["modes"].push_back({{"k", m.k}, {"amplitude", m.amplitude}, {"phase", m.phase}});
        break;
    case InitialSpec::Kind::Samples:
        j["kind"] = "samples";
        j["path"] = spec.samples_path;
        break;
    }
    return j;
}

bool rho_active(const RunConfig& cfg) {
    return cfg.kappa != 0.0 || cfg.initial_rho.kind != InitialSpec::Kind::Zero;
}

} // namespace

void RunConfig::validate() const {
    grid();   // n even and >= 8, L > 0
    system(); // s >= 2, a != 1

    if (!(dt > 0.0)) throw HypothesisError("time step must satisfy dt > 0");
    if (!(T > 0.0)) throw HypothesisError("horizon must satisfy T > 0");
    if (!(output_every > 0.0))
        throw HypothesisError("output interval must satisfy output_every > 0");
    if (!(sigma >= 1.0))
        throw HypothesisError("Gevrey regularity requires sigma >= 1; got sigma = " +
                              std::to_string(sigma));
    if (!(delta0 >= 0.0))
        throw HypothesisError("analyticity radius requires delta0 >= 0; got delta0 = " +
                              std::to_string(delta0));
    if (!(C > 0.0)) throw HypothesisError("schedule constant must satisfy C > 0");

    // Local existence theory requires q > s + 1/2.
    if (!(q > s + 0.5))
        throw HypothesisError("local existence theory requires q > s + 1/2; got q = " +
                              std::to_string(q) + " with s = " + std::to_string(s));
    if (rho_active(*this)) {
        // The coupled density needs 1/2 < q1 and q1 <= q - 1 <= q1 + 2s - 2.
        if (!(q1 > 0.5))
            throw HypothesisError("coupled density requires q1 > 1/2; got q1 = " +
                                  std::to_string(q1));
        if (!(q1 <= q - 1.0))
            throw HypothesisError("coupled density requires q1 <= q - 1; got q1 = " +
                                  std::to_string(q1) + ", q = " + std::to_string(q));
        if (!(q - 1.0 <= q1 + 2.0 * s - 2.0))
            throw HypothesisError("coupled density requires q - 1 <= q1 + 2s - 2; got q = " +
                                  std::to_string(q) + ", q1 = " + std::to_string(q1) +
                                  ", s = " + std::to_string(s));
    }
    if (mode == "continuity") {
        if (perturb_mode < 1 || perturb_mode > n / 2 - 1)
            throw HypothesisError("perturb_mode must lie in [1, n/2 - 1]");
        if (eps_count < 2) throw HypothesisError("eps_count must be >= 2");
    }
    if (mode == "lifespan" && !(lifespan_norm > 0.0))
        throw HypothesisError("lifespan_norm must be positive");
    if (mode != "simulate" && mode != "radius-track" && mode != "continuity" &&
        mode != "verify" && mode != "lifespan")
        throw HypothesisError("unknown mode \"" + mode + "\"");
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("config: invalid JSON: ") + e.what());
    }
    RunConfig cfg;
    try {
        cfg.mode = j.value("mode", cfg.mode);
        cfg.n = j.value("n", cfg.n);
        cfg.L = j.value("L", cfg.L);
        cfg.s = j.value("s", cfg.s);
        cfg.a = j.value("a", cfg.a);
        cfg.alpha = j.value("alpha", cfg.alpha);
        cfg.kappa = j.value("kappa", cfg.kappa);
        cfg.sigma = j.value("sigma", cfg.sigma);
        cfg.q = j.value("q", cfg.q);
        cfg.q1 = j.value("q1", cfg.q1);
        cfg.dt = j.value("dt", cfg.dt);
        cfg.T = j.value("T", cfg.T);
        cfg.scheme = j.value("scheme", cfg.scheme);
        cfg.output_every = j.value("output_every", cfg.output_every);
        cfg.delta0 = j.value("delta0", cfg.delta0);
        cfg.C = j.value("C", cfg.C);
        cfg.bound_tol = j.value("bound_tol", cfg.bound_tol);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.output_dir = j.value("output_dir", cfg.output_dir);
        cfg.perturb_mode = j.value("perturb_mode", cfg.perturb_mode);
        cfg.eps_count = j.value("eps_count", cfg.eps_count);
        cfg.tol = j.value("tol", cfg.tol);
        cfg.lifespan_norm = j.value("lifespan_norm", cfg.lifespan_norm);
        if (j.contains("initial_u")) cfg.initial_u = parse_initial(j["initial_u"]);
        if (j.contains("initial_rho")) cfg.initial_rho = parse_initial(j["initial_rho"]);
    } catch (const json::exception& e) {
        throw FormatError(std::string("config: malformed value: ") + e.what());
    }
    scheme_from_string(cfg.scheme); // reject unknown schemes early
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("config: cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

std::string dump_config(const RunConfig& cfg) {
    json j;
    j["mode"] = cfg.mode;
    j["n"] = cfg.n;
    j["L"] = cfg.L;
    j["s"] = cfg.s;
    j["a"] = cfg.a;
    j["alpha"] = cfg.alpha;
    j["kappa"] = cfg.kappa;
    j["sigma"] = cfg.sigma;
    j["q"] = cfg.q;
    j["q1"] = cfg.q1;
    j["dt"] = cfg.dt;
    j["T"] = cfg.T;
    j["scheme"] = cfg.scheme;
    j["output_every"] = cfg.output_every;
    j["delta0"] = cfg.delta0;
    j["C"] = cfg.C;
    j["bound_tol"] = cfg.bound_tol;
    j["seed"] = cfg.seed;
    j["output_dir"] = cfg.output_dir;
    j["perturb_mode"] = cfg.perturb_mode;
    j["eps_count"] = cfg.eps_count;
    j["tol"] = cfg.tol;
    j["lifespan_norm"] = cfg.lifespan_norm;
    j["initial_u"] = dump_initial(cfg.initial_u);
    j["initial_rho"] = dump_initial(cfg.initial_rho);
    return j.dump(2);
}

} // namespace gsw
