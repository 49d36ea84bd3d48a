#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gsw/spectral_field.hpp"

namespace gsw {

// Parameters of the evolution: inertia order s, convection parameter a,
// vorticity constant alpha, coupling constant kappa.
struct SystemParams {
    int s = 2;
    double a = 2.0;
    double alpha = 0.0;
    double kappa = 0.0;

    SystemParams() = default;
    SystemParams(int s_, double a_, double alpha_, double kappa_)
        : s(s_), a(a_), alpha(alpha_), kappa(kappa_) {
        if (s < 2)
            throw DomainError("SystemParams: inertia order s must be an integer >= 2");
        if (a == 1.0)
            throw DomainError("SystemParams: convection parameter a must differ from 1");
    }
};

// Evolved pair z = (u, rho) at time t. rho may be identically zero for the
// one-component reduction.
struct TwoComponentState {
    double t = 0.0;
    SpectralField u;
    SpectralField rho;

    TwoComponentState() = default;
    TwoComponentState(double t_, SpectralField u_, SpectralField rho_);
};

// One term c * (1 - dxx)^{-s} d_x^{outer} [ (d_x^{inner} u)^2 ] of the
// nonlocal decomposition. Coefficients are dyadic rationals (exact in
// double) in the integer part plus a multiple of the convection parameter.
struct KTerm {
    int outer = 1; // odd derivative order 2i - 1
    int inner = 0; // inner derivative order j
    double coeff = 0.0;
};

struct KDecomposition {
    int s = 0;
    double a = 0.0;
    std::vector<KTerm> terms;
};

// Momentum m = (1 - dxx)^s u.
SpectralField inertia(const SpectralField& u, int s);
SpectralField inverse_inertia(const SpectralField& m, int s);

// Exact right-hand side evaluated through the momentum form:
//   m_t = -u m_x - a u_x m + alpha u_x - kappa rho rho_x
//   du/dt = (1 - dxx)^{-s} m_t,   drho/dt = -u rho_x - (a - 1) u_x rho.
std::pair<SpectralField, SpectralField>
rhs_mform(const TwoComponentState& z, const SystemParams& p);

// Symbolic expansion of u m_x + a u_x m into exact derivatives of squares,
// verified against random fields before returning. Throws DerivationError
// on any internal inconsistency.
KDecomposition derive_k_decomposition(int s, double a);

// Evaluate one decomposition on a field: sum of its terms.
SpectralField apply_k_decomposition(const KDecomposition& k, const SpectralField& u);

// Right-hand side through the nonlocal decomposition:
//   F1 = -1/2 d_x(u^2) + K(u,u) + (1-dxx)^{-s}(alpha u_x - kappa/2 d_x(rho^2))
//   F2 = -d_x(u rho) + (2 - a) u_x rho
std::pair<SpectralField, SpectralField>
rhs_kform(const TwoComponentState& z, const SystemParams& p, const KDecomposition& k);

enum class Scheme { rk4, rk45_adaptive };

Scheme scheme_from_string(const std::string& name);

// Advance by dt (adaptive schemes take substeps summing to dt).
TwoComponentState step(const TwoComponentState& z, const SystemParams& p,
                       double dt, Scheme scheme = Scheme::rk4,
                       double rel_tol = 1e-9);

struct Conserved {
    double H = 0.0;    // ||u||_{H^s}^2 + kappa ||rho||_{L^2}^2
    double Mrho = 0.0; // integral of rho
};

// Invariants of the a = 2 flow (for any alpha, kappa).
Conserved conserved_quantities(const TwoComponentState& z, const SystemParams& p);

// CFL-like step bound dt <= c / (max|u| * xi_max).
double cfl_dt(const TwoComponentState& z, double c = 0.5);

// Throw BlowUpError if the state has non-finite coefficients or
// max|u_x| > 1e6.
void check_blow_up(const TwoComponentState& z);

} // namespace gsw
