#include "gsw/initial_data.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <random>

#include "gsw/errors.hpp"

namespace gsw {

SpectralField gevrey_random_field(const GridSpec& grid, double delta0,
                                  double sigma, double amplitude,
                                  std::uint64_t seed) {
    if (!(delta0 > 0.0)) throw DomainError("gevrey_random_field: delta0 must be positive");
    if (!(sigma >= 1.0)) throw DomainError("gevrey_random_field: sigma must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<std::complex<double>> c(grid.n);
    for (int k = 0; k <= grid.n / 2; ++k) {
        double mag = amplitude *
                     std::exp(-delta0 * std::pow(std::abs(grid.xi(k)), 1.0 / sigma));
        c[k] = std::polar(mag, phase(rng));
    }
    return SpectralField::from_coeffs(grid, std::move(c)).symmetrized();
}

SpectralField make_initial(const GridSpec& grid, const InitialSpec& spec) {
    switch (spec.kind) {
    case InitialSpec::Kind::Zero:
        return SpectralField(grid);
    case InitialSpec::Kind::GevreyRandom:
        return gevrey_random_field(grid, spec.delta0, spec.sigma, spec.amplitude,
                                   spec.seed);
    case InitialSpec::Kind::Modes: {
        std::vector<std::complex<double>> c(grid.n);
        for (const ModeSpec& m : spec.modes) {
            if (m.k < 0 || m.k > grid.n / 2)
                throw DomainError("make_initial: mode index outside [0, n/2]");
            // amplitude * cos(xi_k x + phase)
            std::complex<double> half =
                0.5 * m.amplitude * std::polar(1.0, m.phase);
            if (m.k == 0) {
                c[0] += std::complex<double>(m.amplitude * std::cos(m.phase), 0.0);
            } else {
                c[m.k] += half;
                c[grid.n - m.k] += std::conj(half);
            }
        }
        return SpectralField::from_coeffs(grid, std::move(c)).symmetrized();
    }
    case InitialSpec::Kind::Samples: {
        std::ifstream in(spec.samples_path);
        if (!in) throw FormatError("make_initial: cannot open " + spec.samples_path);
        std::vector<double> samples;
        double v;
        while (in >> v) samples.push_back(v);
        if (static_cast<int>(samples.size()) != grid.n)
            throw ShapeError("make_initial: sample count does not match grid size");
        return SpectralField::synthesize(grid, samples);
    }
    }
    throw DomainError("make_initial: unknown kind");
}

} // namespace gsw
