#include "gsw/spectral_field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace gsw {

namespace {

// FFTW plan cache keyed by transform size. Plan creation is not thread-safe,
// so it is guarded; execution uses the new-array interface on private
// buffers and is safe to run concurrently.
class FftPlans {
public:
    static FftPlans& instance() {
        static FftPlans p;
        return p;
    }

    void forward(std::vector<std::complex<double>>& inout) {
        run(inout, FFTW_FORWARD);
    }
    void backward(std::vector<std::complex<double>>& inout) {
        run(inout, FFTW_BACKWARD);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;

    void run(std::vector<std::complex<double>>& inout, int sign) {
        const int n = static_cast<int>(inout.size());
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_pair(n, sign);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<std::complex<double>> scratch(n);
                auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
                plan = fftw_plan_dft_1d(n, buf, buf, sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        auto* buf = reinterpret_cast<fftw_complex*>(inout.data());
        fftw_execute_dft(plan, buf, buf);
    }
};

} // namespace

SpectralField::SpectralField(const GridSpec& grid)
    : grid_(grid), coeffs_(grid.n, Complex(0.0, 0.0)) {}

SpectralField SpectralField::from_coeffs(const GridSpec& grid,
                                         std::vector<Complex> coeffs) {
    if (static_cast<int>(coeffs.size()) != grid.n)
        throw ShapeError("from_coeffs: coefficient count does not match grid");
    SpectralField f(grid);
    f.coeffs_ = std::move(coeffs);
    return f;
}

SpectralField SpectralField::synthesize(const GridSpec& grid,
                                        std::span<const double> samples) {
    if (static_cast<int>(samples.size()) != grid.n)
        throw ShapeError("synthesize: sample count does not match grid");
    SpectralField f(grid);
    for (int j = 0; j < grid.n; ++j) f.coeffs_[j] = Complex(samples[j], 0.0);
    FftPlans::instance().forward(f.coeffs_);
    const double inv_n = 1.0 / grid.n;
    for (auto& c : f.coeffs_) c *= inv_n;
    return f.symmetrized();
}

std::vector<double> SpectralField::collocate() const {
    std::vector<Complex> buf = coeffs_;
    FftPlans::instance().backward(buf);
    double max_mag = 0.0, max_imag = 0.0;
    for (const auto& v : buf) {
        max_mag = std::max(max_mag, std::abs(v));
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    if (max_imag > 1e-12 * std::max(max_mag, 1e-300) && max_mag > 0.0)
        throw ConsistencyError(
            "collocate: Hermitian symmetry broken (imaginary residue " +
            std::to_string(max_imag / max_mag) + " relative)");
    std::vector<double> out(coeffs_.size());
    for (std::size_t j = 0; j < buf.size(); ++j) out[j] = buf[j].real();
    return out;
}

SpectralField SpectralField::symmetrized() const {
    SpectralField f = *this;
    const int n = grid_.n;
    f.coeffs_[0] = Complex(f.coeffs_[0].real(), 0.0);
    f.coeffs_[n / 2] = Complex(f.coeffs_[n / 2].real(), 0.0);
    for (int k = 1; k < n / 2; ++k) {
        Complex avg = 0.5 * (f.coeffs_[k] + std::conj(f.coeffs_[n - k]));
        f.coeffs_[k] = avg;
        f.coeffs_[n - k] = std::conj(avg);
    }
    return f;
}

SpectralField SpectralField::apply(const MultiplierSpec& m) const {
    m.check_overflow(grid_.xi_max());
    SpectralField f = *this;
    for (int k = 0; k < grid_.n; ++k) f.coeffs_[k] *= m.eval(grid_.xi(k));
    return f.symmetrized();
}

SpectralField SpectralField::derivative(int order) const {
    return apply(MultiplierSpec::derivative(order));
}

SpectralField SpectralField::band_limited(int kmax) const {
    SpectralField f = *this;
    for (int k = 0; k < grid_.n; ++k)
        if (std::abs(grid_.mode(k)) > kmax) f.coeffs_[k] = Complex(0.0, 0.0);
    return f;
}

SpectralField::Complex SpectralField::coeff(int k) const {
    const int n = grid_.n;
    if (k > n / 2 || k < -n / 2 + 1)
        throw ShapeError("coeff: mode outside represented range");
    return coeffs_[k >= 0 ? k : k + n];
}

double SpectralField::max_abs() const {
    auto samples = collocate();
    double m = 0.0;
    for (double v : samples) m = std::max(m, std::abs(v));
    return m;
}

double SpectralField::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool SpectralField::all_finite() const {
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

void SpectralField::require_same_grid(const SpectralField& o) const {
    if (grid_ != o.grid_)
        throw ShapeError("field operation: grids do not match");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(o);
    for (int k = 0; k < grid_.n; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(o);
    for (int k = 0; k < grid_.n; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

SpectralField& SpectralField::operator*=(double c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

SpectralField pointwise_product(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid())
        throw ShapeError("pointwise_product: grids do not match");
    const GridSpec& grid = f.grid();
    const int kd = grid.dealias_mode();

    std::vector<std::complex<double>> fb = f.band_limited(kd).coeffs();
    std::vector<std::complex<double>> gb = g.band_limited(kd).coeffs();
    FftPlans::instance().backward(fb);
    FftPlans::instance().backward(gb);
    for (int j = 0; j < grid.n; ++j) fb[j] *= gb[j];
    FftPlans::instance().forward(fb);
    const double inv_n = 1.0 / grid.n;
    for (auto& c : fb) c *= inv_n;
    return SpectralField::from_coeffs(grid, std::move(fb))
        .band_limited(kd)
        .symmetrized();
}

double inner_product(const SpectralField& f, const SpectralField& g) {
    if (f.grid() != g.grid())
        throw ShapeError("inner_product: grids do not match");
    double acc = 0.0;
    for (int k = 0; k < f.grid().n; ++k)
        acc += (f.coeffs()[k] * std::conj(g.coeffs()[k])).real();
    return f.grid().length * acc;
}

} // namespace gsw
