#include "gsw/dynamics.hpp"

#include <cmath>
#include <limits>

#include "gsw/norms.hpp"
#include <string>

namespace gsw {

TwoComponentState::TwoComponentState(double t_, SpectralField u_, SpectralField rho_)
    : t(t_), u(std::move(u_)), rho(std::move(rho_)) {
    if (u.grid() != rho.grid())
        throw ShapeError("TwoComponentState: u and rho must share one grid");
}

SpectralField inertia(const SpectralField& u, int s) {
    if (s < 1) throw DomainError("inertia: s must be >= 1");
    return u.apply(MultiplierSpec::bessel(2.0 * s));
}

SpectralField inverse_inertia(const SpectralField& m, int s) {
    if (s < 1) throw DomainError("inverse_inertia: s must be >= 1");
    return m.apply(MultiplierSpec::bessel(-2.0 * s));
}

void check_blow_up(const TwoComponentState& z) {
    if (!z.u.all_finite() || !z.rho.all_finite())
        throw BlowUpError("blow-up suspected: non-finite coefficients at t = " +
                              std::to_string(z.t),
                          z.t, std::numeric_limits<double>::infinity());
    double max_ux = z.u.derivative().max_abs();
    if (max_ux > 1e6)
        throw BlowUpError("blow-up suspected: max|u_x| = " + std::to_string(max_ux) +
                              " at t = " + std::to_string(z.t),
                          z.t, max_ux);
}

std::pair<SpectralField, SpectralField>
rhs_mform(const TwoComponentState& z, const SystemParams& p) {
    const SpectralField& u = z.u;
    const SpectralField& rho = z.rho;

    SpectralField m = inertia(u, p.s);
    SpectralField mx = m.derivative();
    SpectralField ux = u.derivative();
    SpectralField rhox = rho.derivative();

    SpectralField mt = -pointwise_product(u, mx) - p.a * pointwise_product(ux, m) +
                       p.alpha * ux - p.kappa * pointwise_product(rho, rhox);
    SpectralField du = inverse_inertia(mt, p.s);
    SpectralField drho =
        -pointwise_product(u, rhox) - (p.a - 1.0) * pointwise_product(ux, rho);

    if (!du.all_finite() || !drho.all_finite())
        throw BlowUpError("blow-up suspected: non-finite right-hand side at t = " +
                              std::to_string(z.t),
                          z.t, ux.max_abs());
    return {std::move(du), std::move(drho)};
}

SpectralField apply_k_decomposition(const KDecomposition& k, const SpectralField& u) {
    SpectralField acc(u.grid());
    for (const KTerm& term : k.terms) {
        SpectralField d = term.inner == 0 ? u : u.derivative(term.inner);
        SpectralField sq = pointwise_product(d, d);
        acc += term.coeff * sq.derivative(term.outer);
    }
    return inverse_inertia(acc, k.s);
}

std::pair<SpectralField, SpectralField>
rhs_kform(const TwoComponentState& z, const SystemParams& p, const KDecomposition& k) {
    if (k.s != p.s || k.a != p.a)
        throw ShapeError("rhs_kform: decomposition derived for different (s, a)");
    const SpectralField& u = z.u;
    const SpectralField& rho = z.rho;

    SpectralField f1 = -0.5 * pointwise_product(u, u).derivative() +
                       apply_k_decomposition(k, u);
    SpectralField forcing = p.alpha * u.derivative() -
                            0.5 * p.kappa * pointwise_product(rho, rho).derivative();
    f1 += inverse_inertia(forcing, p.s);

    SpectralField f2 = -pointwise_product(u, rho).derivative() +
                       (2.0 - p.a) * pointwise_product(u.derivative(), rho);
    return {std::move(f1), std::move(f2)};
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "rk4") return Scheme::rk4;
    if (name == "rk45-adaptive") return Scheme::rk45_adaptive;
    throw DomainError("unknown scheme: " + name);
}

namespace {

struct Deriv {
    SpectralField du, drho;
};

Deriv eval_rhs(const TwoComponentState& z, const SystemParams& p) {
    auto [du, drho] = rhs_mform(z, p);
    return {std::move(du), std::move(drho)};
}

TwoComponentState advance(const TwoComponentState& z, const Deriv& d, double h) {
    return {z.t + h, z.u + h * d.du, z.rho + h * d.drho};
}

TwoComponentState rk4_step(const TwoComponentState& z, const SystemParams& p, double h) {
    Deriv k1 = eval_rhs(z, p);
    Deriv k2 = eval_rhs(advance(z, k1, h / 2), p);
    Deriv k3 = eval_rhs(advance(z, k2, h / 2), p);
    Deriv k4 = eval_rhs(advance(z, k3, h), p);
    TwoComponentState out(
        z.t + h,
        z.u + (h / 6.0) * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du),
        z.rho + (h / 6.0) * (k1.drho + 2.0 * k2.drho + 2.0 * k3.drho + k4.drho));
    return out;
}

double field_err(const SpectralField& a, const SpectralField& b, double scale) {
    double m = 0.0;
    for (int k = 0; k < a.grid().n; ++k)
        m = std::max(m, std::abs(a.coeffs()[k] - b.coeffs()[k]));
    return m / scale;
}

// Dormand-Prince 5(4) embedded pair.
TwoComponentState dopri_try(const TwoComponentState& z, const SystemParams& p,
                            double h, double& err) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Deriv k1 = eval_rhs(z, p);
    auto at = [&](double c, const SpectralField& u, const SpectralField& r) {
        return TwoComponentState(z.t + c * h, u, r);
    };
    Deriv k2 = eval_rhs(at(c2, z.u + h * a21 * k1.du, z.rho + h * a21 * k1.drho), p);
    Deriv k3 = eval_rhs(at(c3, z.u + h * (a31 * k1.du + a32 * k2.du),
                           z.rho + h * (a31 * k1.drho + a32 * k2.drho)),
                        p);
    Deriv k4 = eval_rhs(at(c4, z.u + h * (a41 * k1.du + a42 * k2.du + a43 * k3.du),
                           z.rho + h * (a41 * k1.drho + a42 * k2.drho + a43 * k3.drho)),
                        p);
    Deriv k5 = eval_rhs(
        at(c5, z.u + h * (a51 * k1.du + a52 * k2.du + a53 * k3.du + a54 * k4.du),
           z.rho + h * (a51 * k1.drho + a52 * k2.drho + a53 * k3.drho + a54 * k4.drho)),
        p);
    Deriv k6 = eval_rhs(
        at(1.0,
           z.u + h * (a61 * k1.du + a62 * k2.du + a63 * k3.du + a64 * k4.du +
                      a65 * k5.du),
           z.rho + h * (a61 * k1.drho + a62 * k2.drho + a63 * k3.drho + a64 * k4.drho +
                        a65 * k5.drho)),
        p);

    SpectralField u5 = z.u + h * (b1 * k1.du + b3 * k3.du + b4 * k4.du + b5 * k5.du +
                                  b6 * k6.du);
    SpectralField r5 = z.rho + h * (b1 * k1.drho + b3 * k3.drho + b4 * k4.drho +
                                    b5 * k5.drho + b6 * k6.drho);
    TwoComponentState out(z.t + h, u5, r5);
    Deriv k7 = eval_rhs(out, p);

    SpectralField eu = h * (e1 * k1.du + e3 * k3.du + e4 * k4.du + e5 * k5.du +
                            e6 * k6.du + e7 * k7.du);
    SpectralField er = h * (e1 * k1.drho + e3 * k3.drho + e4 * k4.drho + e5 * k5.drho +
                            e6 * k6.drho + e7 * k7.drho);
    double scale = std::max({z.u.max_abs_coeff(), z.rho.max_abs_coeff(), 1e-12});
    err = std::max(eu.max_abs_coeff(), er.max_abs_coeff()) / scale;
    return out;
}

TwoComponentState rk45_adaptive(TwoComponentState z, const SystemParams& p,
                                double dt, double rel_tol) {
    const double t_end = z.t + dt;
    const double dt_min = dt * 1e-12;
    double h = dt;
    while (z.t < t_end - 1e-15 * dt) {
        h = std::min(h, t_end - z.t);
        double err = 0.0;
        TwoComponentState trial = dopri_try(z, p, h, err);
        if (err <= rel_tol) {
            z = std::move(trial);
            double grow = err > 0 ? 0.9 * std::pow(rel_tol / err, 0.2) : 2.0;
            h *= std::min(2.0, std::max(0.5, grow));
        } else {
            h *= std::max(0.1, 0.9 * std::pow(rel_tol / err, 0.2));
            if (h < dt_min)
                throw StiffnessError(
                    "adaptive step underflow at t = " + std::to_string(z.t) +
                    " (err = " + std::to_string(err) + ", h = " + std::to_string(h) + ")");
        }
    }
    return z;
}

} // namespace

TwoComponentState step(const TwoComponentState& z, const SystemParams& p,
                       double dt, Scheme scheme, double rel_tol) {
    if (!(dt > 0.0)) throw DomainError("step: dt must be positive");
    check_blow_up(z);
    TwoComponentState out = scheme == Scheme::rk4 ? rk4_step(z, p, dt)
                                                  : rk45_adaptive(z, p, dt, rel_tol);
    check_blow_up(out);
    return out;
}

Conserved conserved_quantities(const TwoComponentState& z, const SystemParams& p) {
    Conserved c;
    double hu = sobolev_norm(z.u, static_cast<double>(p.s));
    double l2r = sobolev_norm(z.rho, 0.0);
    c.H = hu * hu + p.kappa * l2r * l2r;
    c.Mrho = z.rho.grid().length * z.rho.coeffs()[0].real();
    return c;
}

double cfl_dt(const TwoComponentState& z, double c) {
    double speed = std::max(z.u.max_abs(), 1e-12);
    return c / (speed * z.u.grid().xi_max());
}

} // namespace gsw
