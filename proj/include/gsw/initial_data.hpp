#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsw/spectral_field.hpp"

namespace gsw {

struct ModeSpec {
    int k = 1;
    double amplitude = 0.0;
    double phase = 0.0;
};

// Initial-data library: exponentially decaying random spectra, explicit mode
// lists, or physical samples from a file.
struct InitialSpec {
    enum class Kind { GevreyRandom, Modes, Samples, Zero };
    Kind kind = Kind::Zero;

    // gevrey_random: c_k = amplitude exp(-delta0 |xi_k|^{1/sigma}) e^{i phi_k},
    // Hermitian-symmetrized; bar-Gevrey radius delta0 by construction.
    double delta0 = 0.5;
    double sigma = 1.0;
    double amplitude = 0.0;
    std::uint64_t seed = 0;

    std::vector<ModeSpec> modes;
    std::string samples_path;
};

SpectralField gevrey_random_field(const GridSpec& grid, double delta0,
                                  double sigma, double amplitude,
                                  std::uint64_t seed);

SpectralField make_initial(const GridSpec& grid, const InitialSpec& spec);

} // namespace gsw
