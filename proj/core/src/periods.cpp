#include "sltwist/periods.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <cmath>

#include "sltwist/errors.hpp"

namespace sltwist {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

// Coefficients of u -> (x0+u)^a (1-x0-u)^b.
std::vector<double> shifted_coeffs(int a, int b, double x0) {
    std::vector<double> A(a + 1), B(b + 1), C(a + b + 1, 0.0);
    for (int i = 0; i <= a; ++i)
        A[i] = boost::math::binomial_coefficient<double>(a, i) * std::pow(x0, a - i);
    for (int j = 0; j <= b; ++j)
        B[j] = boost::math::binomial_coefficient<double>(b, j) * std::pow(1.0 - x0, b - j) *
               ((j % 2) ? -1.0 : 1.0);
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) C[i + j] += A[i] * B[j];
    return C;
}

// (g(x0+u) - g(x0)) / u evaluated from the shifted coefficients.
struct DifferenceQuotient {
    std::vector<double> c;
    double operator()(double u) const {
        double s = 0;
        for (std::size_t k = c.size() - 1; k >= 1; --k) s = s * u + c[k];
        return s;
    }
};

// Integrand on [0, b], smooth but sharply peaked at 0 when tau is small; tanh-sinh clusters there.
template <class F>
double integrate_peaked(F f, double b) {
    thread_local boost::math::quadrature::tanh_sinh<double> ts(12);
    double err = 0, l1 = 0;
    return ts.integrate(f, 0.0, b, 1e-14, &err, &l1);
}

}  // namespace

QuadraturePeriods periods_quadrature(const AdmissiblePair& pr, double tau) {
    if (tau == 0) throw ArgumentError("period diverges at tau = 0");
    const double at = std::abs(tau);
    Extrema ex = y_extrema(pr, at);
    const double n = pr.n();

    // y side: y = y_min + s^2 up to q/n
    DifferenceQuotient Py{shifted_coeffs(pr.q, pr.p, ex.y_min)};
    const double Sy = std::sqrt(pr.q / n - ex.y_min);
    double p_plus = integrate_peaked([&](double s) { return 1.0 / std::sqrt(Py(s * s)); }, Sy);
    double psi_y = integrate_peaked(
        [&](double s) { return 2.0 / ((1.0 - ex.y_min - s * s) * std::sqrt(Py(s * s))); }, Sy);

    // u = 1 - y side: u = gap + s^2 up to p/n
    DifferenceQuotient Pu{shifted_coeffs(pr.p, pr.q, ex.gap)};
    const double Su = std::sqrt(pr.p / n - ex.gap);
    double p_minus = integrate_peaked([&](double s) { return 1.0 / std::sqrt(Pu(s * s)); }, Su);
    double psi_u = integrate_peaked(
        [&](double s) { return 2.0 / ((ex.gap + s * s) * std::sqrt(Pu(s * s))); }, Su);

    double pthat = pr.p * tau * (psi_y + psi_u);
    return {p_plus, p_minus, p_plus + p_minus, pthat, ex};
}

PeriodRun period_run(const AdmissiblePair& pr, double tau, const Tolerances& tol, double span,
                     Augment aug) {
    if (tau == 0) throw ArgumentError("period diverges at tau = 0");
    if (aug == Augment::none) throw ArgumentError("period_run needs psi components");
    const double est = periods_quadrature(pr, tau).p_tau;
    TwistedSolution sol = solve_w(pr, tau, -span * est, span * est, tol, aug);
    const Trajectory& tr = sol.trajectory();
    ScalarFn ydot = [pr](double, const double* x) { return state_ydot(pr, x); };
    ScalarFn yddot = [pr](double, const double* x) { return 2.0 * f_prime(pr, state_y(x)); };
    PeriodRun run{{}, std::numeric_limits<double>::quiet_NaN(), sol};
    PeriodData& d = run.data;
    const double horizon = span * est;
    if (pr.p > 1) {
        auto tp = first_event(tr, ydot, 0.0, horizon, tol.event_tol, yddot);
        auto tm = first_event(tr, ydot, 0.0, -horizon, tol.event_tol, yddot);
        if (!tp || !tm) throw NumericalError("extremum event not found");
        d.p_plus = *tp;
        d.p_minus = -*tm;
        d.p_tau = d.p_plus + d.p_minus;
    } else {
        auto tp = first_event(tr, ydot, 0.0, horizon, tol.event_tol, yddot, 1e-9);
        if (!tp) throw NumericalError("extremum event not found");
        d.p_tau = *tp;
        const double yc = static_cast<double>(pr.q) / pr.n();
        ScalarFn gy = [yc](double, const double* x) { return state_y(x) - yc; };
        run.p_star = locate_event(tr, gy, 0.0, d.p_tau, tol.event_tol, ydot);
        d.p_minus = run.p_star;
        d.p_plus = d.p_tau - run.p_star;
    }
    if (2 * d.p_tau > tr.t_max()) throw NumericalError("trajectory too short for one full period");
    auto ps = sol.psi(2 * d.p_tau);
    d.psi1_2p = ps.first;
    d.psi2_2p = ps.second;
    d.pthat = 0.5 * pr.p * d.psi1_2p;
    return run;
}

PeriodData period_ode(const AdmissiblePair& pr, double tau, const Tolerances& tol) {
    return period_run(pr, tau, tol).data;
}

PsiConstraintReport verify_psi_constraint(const AdmissiblePair& pr, double tau, int samples,
                                          const Tolerances& tol) {
    if (samples < 1) throw ArgumentError("need at least one sample");
    PeriodRun run = period_run(pr, tau, tol);
    const double alpha = alpha_tau(pr, tau);
    PsiConstraintReport rep{0.0, true};
    for (int i = 0; i < samples; ++i) {
        double t = 2 * run.data.p_tau * i / std::max(1, samples - 1);
        double y = run.solution.y(t);
        auto [p1, p2] = run.solution.psi(t);
        double Psi = pr.p * p1 + pr.q * p2;
        double sf = std::sqrt(f_poly(pr, y));
        if (pr.p == 1) {
            rep.max_residual = std::max(rep.max_residual, std::abs(2 * std::abs(tau) - sf * std::cos(Psi)));
            if (!(Psi > -pi / 2 && Psi < pi / 2)) rep.range_ok = false;
        } else {
            rep.max_residual = std::max(rep.max_residual, std::abs(-2 * tau - sf * std::sin(Psi + alpha)));
            double a = Psi + alpha;
            if (tau > 0 ? !(a > -pi && a < 0) : !(a > 0 && a < pi)) rep.range_ok = false;
        }
    }
    return rep;
}

PthatLimit pthat_limit(const AdmissiblePair& pr) {
    const double tm = tau_max(pr);
    const double n = pr.n();
    // pthat is smooth in eps = 1 - tau/tau_max near the top; two-level Richardson
    const double e1 = 4e-3, e2 = 1e-3;
    double v1 = period_ode(pr, tm * (1 - e1)).pthat;
    double v2 = period_ode(pr, tm * (1 - e2)).pthat;
    double lim = (e1 * v2 - e2 * v1) / (e1 - e2);
    PthatLimit r;
    r.measured = lim;
    r.tau_used = tm * (1 - e2);
    r.candidate_small = pi * std::sqrt(pr.p * pr.q / (2.0 * n));
    r.candidate_large = pi * std::sqrt(2.0 * pr.p * pr.q / n);
    r.matches_small = std::abs(lim - r.candidate_small) < std::abs(lim - r.candidate_large);
    return r;
}

}  // namespace sltwist
