#include "gsw/checkpoint.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "gsw/errors.hpp"

namespace gsw {

namespace {

// ordered_json keeps the documented key order; double serialization in
// nlohmann/json is shortest round-trip, so coefficients survive reload bit
// for bit.
using json = nlohmann::ordered_json;

json coeffs_json(const SpectralField& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs())
        arr.push_back(json::array({c.real(), c.imag()}));
    return arr;
}

SpectralField coeffs_from(const GridSpec& grid, const json& arr) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != grid.n)
        throw FormatError("checkpoint: coefficient array size mismatch");
    std::vector<std::complex<double>> c(grid.n);
    for (int k = 0; k < grid.n; ++k) {
        const json& e = arr[k];
        if (!e.is_array() || e.size() != 2)
            throw FormatError("checkpoint: coefficient must be a [re, im] pair");
        c[k] = {e[0].get<double>(), e[1].get<double>()};
    }
    return SpectralField::from_coeffs(grid, std::move(c));
}

} // namespace

std::string checkpoint_line(const TwoComponentState& z) {
    json j;
    j["format"] = "gsw-checkpoint-v1";
    j["t"] = z.t;
    j["grid"] = {{"n", z.u.grid().n}, {"L", z.u.grid().length}};
    j["u"] = coeffs_json(z.u);
    j["rho"] = coeffs_json(z.rho);
    return j.dump();
}

TwoComponentState parse_checkpoint_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw FormatError(std::string("checkpoint: invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "gsw-checkpoint-v1")
            throw FormatError("checkpoint: unknown format tag");
        GridSpec grid(j.at("grid").at("n").get<int>(),
                      j.at("grid").at("L").get<double>());
        return TwoComponentState(j.at("t").get<double>(),
                                 coeffs_from(grid, j.at("u")),
                                 coeffs_from(grid, j.at("rho")));
    } catch (const json::exception& e) {
        throw FormatError(std::string("checkpoint: missing or malformed field: ") +
                          e.what());
    }
}

void save_checkpoint(const std::string& path, const TwoComponentState& z) {
    std::ofstream out(path);
    if (!out) throw FormatError("checkpoint: cannot open " + path + " for writing");
    out << checkpoint_line(z) << "\n";
    if (!out) throw FormatError("checkpoint: write to " + path + " failed");
}

TwoComponentState load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("checkpoint: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw FormatError("checkpoint: " + path + " is empty");
    return parse_checkpoint_line(line);
}

} // namespace gsw
