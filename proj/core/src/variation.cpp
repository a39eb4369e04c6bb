#include "sltwist/variation.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "sltwist/catenoid.hpp"
#include "sltwist/errors.hpp"

namespace sltwist {

namespace {
constexpr double pi = boost::math::constants::pi<double>();
}

LinearisedSolution::LinearisedSolution(AdmissiblePair pr, double tau, double t0, PeriodData periods,
                                       double p_star, Trajectory traj)
    : pair_(pr), tau_(tau), t0_(t0), periods_(periods), p_star_(p_star), traj_(std::move(traj)) {
    const double lim = 2 * periods_.p_tau;
    for (std::size_t i = 0; i < traj_.time_grid().size(); ++i) {
        double t = traj_.time_grid()[i];
        if (std::abs(t) > lim) continue;
        const double* x = traj_.node_state(i);
        double y = state_y(x);
        double w = (pair_.q - pair_.n() * y) * x[7] + pair_.n() * state_ydot(pair_, x) * x[6];
        wronskian_drift_ = std::max(wronskian_drift_, std::abs(w - 1.0));
    }
    traj_.record_drift("wronskian", wronskian_drift_);
}

double LinearisedSolution::Q(double t) const { return traj_.component(t, 6); }
double LinearisedSolution::Qdot(double t) const { return traj_.component(t, 7); }

double LinearisedSolution::y(double t) const {
    double x[8];
    traj_.eval(t, x);
    return state_y(x);
}

double LinearisedSolution::ydot(double t) const {
    double x[8];
    traj_.eval(t, x);
    return state_ydot(pair_, x);
}

double LinearisedSolution::wronskian(double t) const {
    double x[8];
    traj_.eval(t, x);
    return (pair_.q - pair_.n() * state_y(x)) * x[7] + pair_.n() * state_ydot(pair_, x) * x[6];
}

LinearisedSolution solve_Q(const AdmissiblePair& pr, double tau, const Tolerances& tol) {
    if (!(tau > 0) || tau >= tau_max(pr)) throw ArgumentError("solve_Q requires 0 < tau < tau_max");
    PeriodRun run = period_run(pr, tau, tol);
    const PeriodData& d = run.data;
    const double t0 = pr.p == 1 ? run.p_star : 0.0;
    std::vector<double> x0(8, 0.0);
    run.solution.trajectory().eval(t0, x0.data());
    const double yd = state_ydot(pr, x0.data());
    if (yd == 0) throw NumericalError("y' vanishes at the anchor of the linearised solution");
    x0[6] = 1.0 / (pr.n() * yd);
    x0[7] = 0.0;
    const double span = 2.2 * d.p_tau;
    Trajectory tr = integrate_two_sided(twisted_field(pr, tau, Augment::linearised), x0, t0,
                                        std::min(-span, t0), std::max(span, t0), tol);
    return LinearisedSolution(pr, tau, t0, d, run.p_star, std::move(tr));
}

double dpthat_dtau(const LinearisedSolution& lin) {
    const AdmissiblePair& pr = lin.pair();
    const double n = pr.n(), q = pr.q;
    const PeriodData& d = lin.periods();
    auto term = [&](double t) { return lin.Q(t) / (q - n * lin.y(t)); };
    if (pr.p == 1) return 4.0 * (n - 1) * (term(d.p_tau) - term(0.0));
    return 4.0 * pr.p * pr.q * (term(d.p_plus) - term(-d.p_minus));
}

double dpthat_dtau(const AdmissiblePair& pr, double tau, const Tolerances& tol) {
    return dpthat_dtau(solve_Q(pr, tau, tol));
}

DerivativeCheck check_dpthat(const AdmissiblePair& pr, double tau, const Tolerances& tol) {
    DerivativeCheck c{};
    c.formula = dpthat_dtau(pr, tau, tol);
    c.step = std::max(1e-6, 1e-4 * tau);
    double hi = periods_quadrature(pr, tau + c.step).pthat;
    double lo = periods_quadrature(pr, tau - c.step).pthat;
    c.finite_difference = (hi - lo) / (2 * c.step);
    c.rel_diff = std::abs(c.formula - c.finite_difference) / std::abs(c.finite_difference);
    return c;
}

double b_constant(int k) {
    if (k < 2) throw ArgumentError("b_k needs k >= 2");
    if (k == 2) return 0.5;
    // int_1^inf dz / sqrt(z^k - 1) = 2 T1(k)
    return std::pow(4.0, -1.0 + 1.0 / k) * 2.0 * catenoid_lifetime_quadrature(k);
}

double b_constant_beta(int k) {
    if (k < 2) throw ArgumentError("b_k needs k >= 2");
    if (k == 2) return 0.5;
    return std::pow(4.0, -1.0 + 1.0 / k) * boost::math::beta(0.5 - 1.0 / k, 0.5) / k;
}

double b_constant_printed(int k) { return k == 2 ? 1.0 : b_constant_beta(k); }

double T_k(int k, double tau) {
    if (k < 2) throw ArgumentError("T_k needs k >= 2");
    if (!(tau > 0 && tau < 1)) throw ArgumentError("T_k needs 0 < tau < 1");
    if (k == 2) return std::log(1.0 / tau);
    return std::pow(tau, -1.0 + 2.0 / k);
}

std::string law_name(Law law) {
    switch (law) {
        case Law::pt_plus: return "pt_plus";
        case Law::pt_minus: return "pt_minus";
        case Law::pt: return "pt";
        case Law::pthat_excess: return "pthat_excess";
        case Law::ymin: return "ymin";
        case Law::ymax_gap: return "ymax_gap";
    }
    return "unknown";
}

Law parse_law(const std::string& s) {
    for (Law l : {Law::pt_plus, Law::pt_minus, Law::pt, Law::pthat_excess, Law::ymin, Law::ymax_gap})
        if (law_name(l) == s) return l;
    throw ArgumentError("unknown asymptotic law: " + s);
}

std::vector<Law> applicable_laws(const AdmissiblePair& pr) {
    std::vector<Law> v{Law::pt_plus};
    if (pr.p > 1) v.push_back(Law::pt_minus);
    v.insert(v.end(), {Law::pt, Law::pthat_excess, Law::ymin, Law::ymax_gap});
    return v;
}

std::vector<AsymptoticsReport> check_asymptotics(const AdmissiblePair& pr,
                                                 const std::vector<double>& taus, Law law) {
    if (law == Law::pt_minus && pr.p == 1) throw ArgumentError("pt_minus law needs p > 1");
    const int p = pr.p, q = pr.q;
    std::vector<AsymptoticsReport> out;
    for (double tau : taus) {
        if (!(tau > 0) || tau >= tau_max(pr)) throw ArgumentError("asymptotics need 0 < tau < tau_max");
        QuadraturePeriods qp = periods_quadrature(pr, tau);
        AsymptoticsReport r{};
        r.tau = tau;
        r.law = law;
        switch (law) {
            case Law::pt_plus:
                r.measured = qp.p_plus;
                r.predicted = b_constant(q) * T_k(q, tau);
                r.predicted_printed = b_constant_printed(q) * T_k(q, tau);
                break;
            case Law::pt_minus:
                r.measured = qp.p_minus;
                r.predicted = b_constant(p) * T_k(p, tau);
                r.predicted_printed = b_constant_printed(p) * T_k(p, tau);
                break;
            case Law::pt: {
                double m = p == q ? 2.0 : 1.0;
                r.measured = qp.p_tau;
                r.predicted = m * b_constant(q) * T_k(q, tau);
                r.predicted_printed = m * b_constant_printed(q) * T_k(q, tau);
                break;
            }
            case Law::pthat_excess:
                r.measured = qp.pthat - pi / 2;
                r.predicted = 2.0 * p * tau * qp.p_tau;
                r.predicted_printed = 4.0 * p / q * tau * qp.p_tau;
                break;
            case Law::ymin:
                r.measured = qp.extrema.y_min;
                r.predicted = r.predicted_printed = std::pow(2 * tau, 2.0 / q);
                break;
            case Law::ymax_gap:
                r.measured = qp.extrema.gap;
                r.predicted = r.predicted_printed = std::pow(2 * tau, 2.0 / p);
                break;
        }
        r.ratio = r.measured / r.predicted;
        r.ratio_printed = r.measured / r.predicted_printed;
        out.push_back(r);
    }
    return out;
}

}  // namespace sltwist
