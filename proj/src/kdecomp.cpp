#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "gsw/dynamics.hpp"
#include "gsw/norms.hpp"

namespace gsw {

namespace {

// Bilinear differential monomial u^{(a)} u^{(b)}, normalized a <= b.
// Coefficients stay dyadic rationals times the convection parameter, so the
// double arithmetic below is exact for s within the supported range.
using Monomials = std::map<std::pair<int, int>, double>;

void add_monomial(Monomials& m, int a, int b, double c) {
    if (a > b) std::swap(a, b);
    m[{a, b}] += c;
}

// d/dx by the product rule.
Monomials differentiate(const Monomials& m) {
    Monomials out;
    for (const auto& [key, c] : m) {
        add_monomial(out, key.first + 1, key.second, c);
        add_monomial(out, key.first, key.second + 1, c);
    }
    return out;
}

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return std::round(v);
}

// Leibniz expansion of d_x^K [(u^{(j)})^2].
Monomials derivative_of_square(int K, int j) {
    Monomials out;
    for (int r = 0; r <= K; ++r)
        add_monomial(out, j + r, j + K - r, binom(K, r));
    return out;
}

void verify_numerically(const KDecomposition& k);

} // namespace

KDecomposition derive_k_decomposition(int s, double a) {
    // s = 1 is kept as a sanity case (classical two-component form); the
    // evolution itself requires s >= 2.
    if (s < 1) throw DomainError("derive_k_decomposition: s must be >= 1");
    if (s > 16) throw DomainError("derive_k_decomposition: s > 16 unsupported");

    // P = (1 - dxx)^s (u u_x) - u m_x - a u_x m, with
    // m = sum_j binom(s,j) (-1)^j u^{(2j)}.
    Monomials target;
    {
        Monomials uux;
        add_monomial(uux, 0, 1, 1.0);
        Monomials d = uux; // d_x^{2l} (u u_x), built incrementally
        for (int l = 0; l <= s; ++l) {
            double c = ((l % 2 == 0) ? 1.0 : -1.0) * binom(s, l);
            for (const auto& [key, v] : d) target[key] += c * v;
            if (l < s) d = differentiate(differentiate(d));
        }
    }
    for (int j = 0; j <= s; ++j) {
        double c = ((j % 2 == 0) ? 1.0 : -1.0) * binom(s, j);
        add_monomial(target, 0, 2 * j + 1, -c);             // u m_x
        add_monomial(target, std::min(1, 2 * j),
                     std::max(1, 2 * j), -a * c);           // a u_x m
    }

    double scale = 1.0;
    for (const auto& [key, v] : target) scale = std::max(scale, std::abs(v));

    // The top monomial u u^{(2s+1)} must cancel; it is the whole point of
    // the rewrite.
    if (std::abs(target[{0, 2 * s + 1}]) > 1e-12 * scale)
        throw DerivationError("derive_k_decomposition: top-order monomial did not cancel");
    target.erase({0, 2 * s + 1});

    // Back substitution, ascending in the inner order j: the monomial
    // (j, N-j) receives a factor-2 contribution from the term with inner
    // order j and nothing from terms with larger inner order.
    KDecomposition k;
    k.s = s;
    k.a = a;
    for (int N = 1; N <= 2 * s + 1; N += 2) {
        for (int j = 0; 2 * j < N; ++j) {
            if (j == 0 && N == 2 * s + 1) continue; // excluded term, handled above
            int K = N - 2 * j; // outer order 2i - 1
            auto it = target.find({j, N - j});
            double c = (it == target.end() ? 0.0 : it->second) / 2.0;
            if (c == 0.0) continue;
            for (const auto& [key, v] : derivative_of_square(K, j))
                target[key] -= c * v;
            k.terms.push_back({K, j, c});
        }
    }

    for (const auto& [key, v] : target)
        if (std::abs(v) > 1e-12 * scale)
            throw DerivationError(
                "derive_k_decomposition: residual monomial u^(" +
                std::to_string(key.first) + ") u^(" + std::to_string(key.second) +
                ") with coefficient " + std::to_string(v));

    verify_numerically(k);
    return k;
}

namespace {

void verify_numerically(const KDecomposition& k) {
    const GridSpec grid(64, 2.0 * std::numbers::pi);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull + k.s);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    for (int trial = 0; trial < 20; ++trial) {
        SpectralField u(grid);
        {
            std::vector<std::complex<double>> c(grid.n);
            for (int m = 1; m <= 6; ++m)
                c[m] = std::complex<double>(unif(rng), unif(rng)) * std::exp(-0.3 * m);
            u = SpectralField::from_coeffs(grid, std::move(c)).symmetrized();
        }
        SpectralField m = inertia(u, k.s);
        SpectralField ux = u.derivative();

        SpectralField lhs = inertia(pointwise_product(u, ux), k.s) -
                            pointwise_product(u, m.derivative()) -
                            k.a * pointwise_product(ux, m);
        SpectralField rhs(grid);
        for (const KTerm& term : k.terms) {
            SpectralField d = term.inner == 0 ? u : u.derivative(term.inner);
            rhs += term.coeff * pointwise_product(d, d).derivative(term.outer);
        }
        double scale = std::max(sobolev_norm(lhs, 0.0),
                                sobolev_norm(inertia(pointwise_product(u, ux), k.s), 0.0));
        double diff = sobolev_norm(lhs - rhs, 0.0);
        if (diff > 1e-10 * std::max(scale, 1e-30))
            throw DerivationError(
                "derive_k_decomposition: random-field verification failed (relative "
                "error " +
                std::to_string(diff / scale) + ")");
    }
}

} // namespace

} // namespace gsw
