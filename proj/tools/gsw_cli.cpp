#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gsw/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral evolution and estimate verification toolkit"};
    app.set_version_flag("--version", gsw::version_string());
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool have_seed = false;
    bool quiet = false;

    for (const char* name :
         {"simulate", "radius-track", "continuity", "verify", "lifespan"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run configuration")
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "override the configured RNG seed")
            ->each([&](const std::string&) { have_seed = true; });
        sub->add_option("--out", out_dir, "override the output directory");
        sub->add_flag("--quiet", quiet, "suppress progress output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        gsw::RunConfig cfg;
        if (!config_path.empty()) cfg = gsw::load_config(config_path);
        cfg.mode = app.get_subcommands().front()->get_name();
        if (have_seed) cfg.seed = seed;
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        return gsw::run(cfg, quiet);
    } catch (const gsw::FormatError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return gsw::exit_config;
    } catch (const gsw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gsw::exit_numeric;
    }
}
