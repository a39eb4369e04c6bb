#include "sltwist/twisted.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "sltwist/errors.hpp"

namespace sltwist {

AdmissiblePair::AdmissiblePair(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < p || q < 2) throw ArgumentError("admissible pairs need 1 <= p <= q and q >= 2");
}

double tau_max(const AdmissiblePair& pr) {
    const double p = pr.p, q = pr.q, n = pr.n();
    // (1/2) sqrt(p^p q^q / n^n) via logs to avoid overflow for larger pairs
    return 0.5 * std::exp(0.5 * (p * std::log(p) + q * std::log(q) - n * std::log(n)));
}

double f_poly(const AdmissiblePair& pr, double y) {
    return std::pow(y, pr.q) * std::pow(1.0 - y, pr.p);
}

double f_prime(const AdmissiblePair& pr, double y) {
    return std::pow(y, pr.q - 1) * std::pow(1.0 - y, pr.p - 1) * (pr.q - pr.n() * y);
}

namespace {

// Solves a log x + b log(1 - x) = log(4 tau^2) on [lo, x_crit], where the left side increases.
double increasing_branch_root(int a, int b, double x_crit, double tau) {
    const double target = std::log(4.0 * tau * tau);
    auto g = [&](double x) { return a * std::log(x) + b * std::log1p(-x) - target; };
    double lo = 0.25 * std::pow(2.0 * std::abs(tau), 2.0 / a);
    while (g(lo) > 0) lo *= 0.25;
    double hi = x_crit;
    if (g(hi) <= 0) throw NumericalError("extremum bracket has no sign change");
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(52),
                                               iters);
    double x = 0.5 * (r.first + r.second);
    // one Newton polish in the log variable
    double d = a / x - b / (1.0 - x);
    if (d != 0) {
        double xn = x - g(x) / d;
        if (xn > r.first && xn < r.second) x = xn;
    }
    return x;
}

}  // namespace

Extrema y_extrema(const AdmissiblePair& pr, double tau) {
    const double tm = tau_max(pr);
    if (tau == 0) throw ArgumentError("y_extrema requires tau != 0");
    if (std::abs(tau) >= tm * (1 - 1e-10)) throw ArgumentError("y_extrema requires |tau| < tau_max");
    const double n = pr.n();
    double ymin = increasing_branch_root(pr.q, pr.p, pr.q / n, tau);
    double gap = increasing_branch_root(pr.p, pr.q, pr.p / n, tau);
    return {ymin, 1.0 - gap, gap};
}

double alpha_tau(const AdmissiblePair& pr, double tau) {
    double r = -tau / tau_max(pr);
    return std::asin(std::clamp(r, -1.0, 1.0));
}

SphereState initial_state(const AdmissiblePair& pr, double tau) {
    const double n = pr.n();
    const double tm = tau_max(pr);
    if (std::abs(tau) > tm * (1 + 1e-14)) throw ArgumentError("|tau| exceeds tau_max");
    if (pr.p > 1) {
        double a = alpha_tau(pr, tau);
        return {std::sqrt(pr.p / n) * std::polar(1.0, a / (2.0 * pr.p)),
                std::sqrt(pr.q / n) * std::polar(1.0, a / (2.0 * pr.q))};
    }
    double gap;
    if (tau == 0)
        gap = 0.0;
    else if (std::abs(tau) >= tm * (1 - 1e-10))
        gap = pr.p / n;
    else
        gap = y_extrema(pr, tau).gap;
    double s = tau > 0 ? 1.0 : (tau < 0 ? -1.0 : 0.0);
    return {cplx(0.0, -s * std::sqrt(gap)), cplx(std::sqrt(1.0 - gap), 0.0)};
}

cplx ipow(cplx z, int k) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

VectorField twisted_field(const AdmissiblePair& pr, double tau, Augment aug) {
    const int p = pr.p, q = pr.q, n = pr.n();
    return [p, q, n, tau, aug](double, const double* x, double* dx) {
        const cplx w1(x[0], x[1]), w2(x[2], x[3]);
        const cplx c1 = std::conj(w1), c2 = std::conj(w2);
        const cplx c1p1 = ipow(c1, p - 1), c2q1 = ipow(c2, q - 1);
        const cplx d1 = c1p1 * c2q1 * c2;
        const cplx d2 = -(c1p1 * c1) * c2q1;
        dx[0] = d1.real();
        dx[1] = d1.imag();
        dx[2] = d2.real();
        dx[3] = d2.imag();
        if (aug == Augment::none) return;
        const double r1 = std::norm(w1), r2 = std::norm(w2);
        if (tau == 0) {
            dx[4] = 0.0;
            dx[5] = 0.0;
        } else {
            dx[4] = 2.0 * tau / r1;
            dx[5] = -2.0 * tau / r2;
        }
        if (aug == Augment::psi) return;
        // |w'|^2 = y^{q-1} (1-y)^{p-1}
        const double speed2 = std::pow(r2, q - 1) * std::pow(r1, p - 1);
        dx[6] = x[7];
        dx[7] = -2.0 * n * speed2 * x[6];
    };
}

std::vector<double> pack_state(const SphereState& s, Augment aug) {
    std::vector<double> v(static_cast<std::size_t>(aug), 0.0);
    v[0] = s.w1.real();
    v[1] = s.w1.imag();
    v[2] = s.w2.real();
    v[3] = s.w2.imag();
    return v;
}

SphereState unpack_state(const double* x) { return {cplx(x[0], x[1]), cplx(x[2], x[3])}; }

double state_y(const double* x) { return x[2] * x[2] + x[3] * x[3]; }

cplx state_product(const AdmissiblePair& pr, const double* x) {
    return ipow(cplx(x[0], x[1]), pr.p) * ipow(cplx(x[2], x[3]), pr.q);
}

double state_ydot(const AdmissiblePair& pr, const double* x) {
    return -2.0 * state_product(pr, x).real();
}

TwistedSolution::TwistedSolution(AdmissiblePair pr, double tau, Trajectory traj)
    : pair_(pr), tau_(tau), traj_(std::move(traj)) {
    traj_.record_drift("I1", i1_drift());
    traj_.record_drift("I2", i2_drift());
    traj_.record_drift("energy", energy_drift());
}

SphereState TwistedSolution::w(double t) const {
    double buf[8];
    traj_.eval(t, buf);
    return unpack_state(buf);
}

double TwistedSolution::y(double t) const { return std::norm(w(t).w2); }

double TwistedSolution::ydot(double t) const {
    double buf[8];
    traj_.eval(t, buf);
    return state_ydot(pair_, buf);
}

std::pair<double, double> TwistedSolution::psi(double t) const {
    if (traj_.dim() < 6) throw ArgumentError("trajectory carries no psi components");
    double buf[8];
    traj_.eval(t, buf);
    return {buf[4], buf[5]};
}

double TwistedSolution::i1_drift() const {
    double m = 0;
    for (std::size_t i = 0; i < traj_.time_grid().size(); ++i) {
        const double* x = traj_.node_state(i);
        m = std::max(m, std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - 1.0));
    }
    return m;
}

double TwistedSolution::i2_drift() const {
    double m = 0;
    for (std::size_t i = 0; i < traj_.time_grid().size(); ++i)
        m = std::max(m, std::abs(state_product(pair_, traj_.node_state(i)).imag() + 2.0 * tau_));
    return m;
}

double TwistedSolution::energy_drift() const {
    double m = 0;
    for (std::size_t i = 0; i < traj_.time_grid().size(); ++i) {
        const double* x = traj_.node_state(i);
        const double yd = state_ydot(pair_, x);
        m = std::max(m, std::abs(yd * yd - 4.0 * f_poly(pair_, state_y(x)) + 16.0 * tau_ * tau_));
    }
    return m;
}

namespace {

Trajectory integrate_direct(const AdmissiblePair& pr, double tau, double t0, double t1,
                            const Tolerances& tol, Augment aug) {
    if (t0 > 0 || t1 < 0 || !(t1 > t0)) throw ArgumentError("solve span must contain t = 0");
    auto field = twisted_field(pr, tau, aug);
    auto x0 = pack_state(initial_state(pr, tau), aug);
    return integrate_two_sided(field, x0, 0.0, t0, t1, tol);
}

}  // namespace

TwistedSolution solve_w(const AdmissiblePair& pr, double tau, double t0, double t1,
                        const Tolerances& tol, Augment aug) {
    if (tau >= 0) return TwistedSolution(pr, tau, integrate_direct(pr, tau, t0, t1, tol, aug));
    Trajectory base = integrate_direct(pr, -tau, t0, t1, tol, aug);
    std::vector<double> conj(static_cast<std::size_t>(aug), 1.0);
    conj[1] = -1.0;
    conj[3] = -1.0;
    if (aug != Augment::none) {
        conj[4] = -1.0;
        conj[5] = -1.0;
    }
    return TwistedSolution(pr, tau, base.scaled(conj));
}

double conjugate_family_check(const AdmissiblePair& pr, double tau, double t_end, int samples,
                              const Tolerances& tol) {
    if (samples < 1) throw ArgumentError("need at least one sample");
    Trajectory a = integrate_direct(pr, tau, 0.0, t_end, tol, Augment::none);
    Trajectory b = integrate_direct(pr, -tau, 0.0, t_end, tol, Augment::none);
    double worst = 0;
    double xa[4], xb[4];
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : t_end * i / (samples - 1);
        a.eval(t, xa);
        b.eval(t, xb);
        double d0 = xb[0] - xa[0], d1 = xb[1] + xa[1], d2 = xb[2] - xa[2], d3 = xb[3] + xa[3];
        worst = std::max(worst, std::sqrt(d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3));
    }
    return worst;
}

}  // namespace sltwist
