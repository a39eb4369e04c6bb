#include "sltwist/closure.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/math/tools/roots.hpp>
#include <charconv>
#include <cmath>
#include <numeric>

#include "sltwist/errors.hpp"
#include "sltwist/variation.hpp"

namespace sltwist {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ArgumentError("not an integer: '" + s + "'");
    return v;
}

}  // namespace

RationalTarget::RationalTarget(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) throw ArgumentError("rational target needs positive numerator and denominator");
    std::int64_t g = std::gcd(a, b);
    num = a / g;
    den = b / g;
}

RationalTarget RationalTarget::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return {parse_int(s), 1};
    return {parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1))};
}

double RationalTarget::angle() const { return static_cast<double>(num) / static_cast<double>(den) * pi; }

std::string RationalTarget::str() const { return std::to_string(num) + "/" + std::to_string(den); }

std::int64_t lcm_pair(const AdmissiblePair& pr) { return std::lcm<std::int64_t>(pr.p, pr.q); }

std::int64_t k0_from_target(const AdmissiblePair& pr, const RationalTarget& t) {
    const std::int64_t L = lcm_pair(pr);
    return L * t.den / std::gcd(t.num, L * t.den);
}

std::optional<std::int64_t> k0_brute_force(const AdmissiblePair& pr, const RationalTarget& t,
                                           std::int64_t cap) {
    const std::int64_t L = lcm_pair(pr);
    // k a / b in L Z  <=>  k a divisible by L b
    for (std::int64_t k = 1; k <= cap; ++k)
        if ((k * t.num) % (L * t.den) == 0) return k;
    return std::nullopt;
}

TauSearch search_tau_for_angular_period(const AdmissiblePair& pr, const RationalTarget& target,
                                        const Tolerances& tol, int scan_points,
                                        std::optional<std::pair<double, double>> bracket) {
    if (scan_points < 2) throw ArgumentError("scan needs at least two points");
    const double tm = tau_max(pr);
    double lo = 1e-5 * tm, hi = 0.999 * tm;
    if (bracket) {
        lo = std::max(lo, std::min(bracket->first, bracket->second));
        hi = std::min(hi, std::max(bracket->first, bracket->second));
        if (!(hi > lo)) throw ArgumentError("bracket does not meet (0, tau_max)");
    }
    const double goal = target.angle();
    auto g = [&](double tau) { return periods_quadrature(pr, tau).pthat - goal; };

    std::vector<double> taus(scan_points), vals(scan_points);
    const double ratio = std::pow(hi / lo, 1.0 / (scan_points - 1));
    for (int i = 0; i < scan_points; ++i) {
        taus[i] = i == scan_points - 1 ? hi : lo * std::pow(ratio, i);
        vals[i] = g(taus[i]);
    }
    TauSearch out{};
    out.scan_min = *std::min_element(vals.begin(), vals.end()) + goal;
    out.scan_max = *std::max_element(vals.begin(), vals.end()) + goal;
    for (int i = 0; i + 1 < scan_points; ++i) {
        double a = taus[i], b = taus[i + 1], fa = vals[i], fb = vals[i + 1];
        double tau;
        if (fa == 0)
            tau = a;
        else if (fa * fb < 0) {
            std::uintmax_t iters = 200;
            auto r = boost::math::tools::toms748_solve(g, a, b, fa, fb,
                                                       boost::math::tools::eps_tolerance<double>(52), iters);
            tau = 0.5 * (r.first + r.second);
        } else
            continue;
        TauSolution s{};
        s.tau = tau;
        s.pthat_quadrature = g(tau) + goal;
        s.pthat_ode = period_ode(pr, tau, tol).pthat;
        s.residual = std::abs(s.pthat_ode - goal);
        out.roots.push_back(s);
    }
    return out;
}

TauSolution find_tau_for_angular_period(const AdmissiblePair& pr, const RationalTarget& target,
                                        const Tolerances& tol,
                                        std::optional<std::pair<double, double>> bracket) {
    TauSearch s = search_tau_for_angular_period(pr, target, tol, 200, bracket);
    if (s.roots.empty())
        throw NumericalError("target " + target.str() + " pi not bracketed; scanned pthat range [" +
                             std::to_string(s.scan_min) + ", " + std::to_string(s.scan_max) + "]");
    return s.roots.front();
}

SphereState rotate_M(const AdmissiblePair& pr, double x, const SphereState& w) {
    return {std::polar(1.0, x / pr.p) * w.w1, std::polar(1.0, -x / pr.q) * w.w2};
}

namespace {

double dist(const SphereState& a, const SphereState& b) {
    return std::sqrt(std::norm(a.w1 - b.w1) + std::norm(a.w2 - b.w2));
}

}  // namespace

ClosureCheck verify_closed(const AdmissiblePair& pr, double tau, std::int64_t k0, int samples,
                           const Tolerances& tol) {
    if (samples < 1 || k0 < 1) throw ArgumentError("verify_closed needs samples >= 1 and k0 >= 1");
    PeriodData d = period_ode(pr, tau, tol);
    const double shift = 2.0 * k0 * d.p_tau;
    TwistedSolution sol = solve_w(pr, tau, 0.0, shift + 2.0 * d.p_tau, tol, Augment::none);
    ClosureCheck c{d.p_tau, d.pthat, 0.0, 0.0};
    for (int i = 0; i < samples; ++i) {
        double t = 2.0 * d.p_tau * i / samples;
        SphereState w = sol.w(t);
        c.closure_residual = std::max(c.closure_residual, dist(sol.w(t + shift), w));
        c.one_period_residual =
            std::max(c.one_period_residual, dist(sol.w(t + 2 * d.p_tau), rotate_M(pr, 2 * d.pthat, w)));
    }
    return c;
}

ClosureReport half_period_classification(const AdmissiblePair& pr, const RationalTarget& target) {
    ClosureReport r{};
    r.k0 = k0_from_target(pr, target);
    const int n = pr.n();
    const std::string sphere_product =
        pr.p == 1 ? "S1xS^" + std::to_string(n - 2)
                  : "S1xS^" + std::to_string(pr.p - 1) + "xS^" + std::to_string(pr.q - 1);
    const std::string full = "T_{" + std::to_string(2 * r.k0) + "p_tau}";
    const std::string half = "T_{" + std::to_string(r.k0) + "p_tau}";
    r.per_generator = full;
    r.topology = sphere_product;
    if (r.k0 % 2 == 1) return r;
    const int h = std::gcd(pr.p, pr.q);
    HalfPeriodType t{(pr.q / h) % 2, (pr.p / h) % 2};
    if (pr.p == 1 && t.j == 1) return r;  // sign on w1 cannot be absorbed without a first factor
    r.half_period_type = t;
    r.per_generator = pr.p == 1 ? half + " o -Id_{S^" + std::to_string(n - 2) + "}"
                                : half + " o rho_{" + std::to_string(t.j) + std::to_string(t.k) + "}";
    r.topology = "Z2-quotient";
    return r;
}

double verify_half_period(const AdmissiblePair& pr, double tau, std::int64_t k0,
                          const HalfPeriodType& type, int samples, const Tolerances& tol) {
    if (samples < 1 || k0 < 1) throw ArgumentError("verify_half_period needs samples >= 1 and k0 >= 1");
    PeriodData d = period_ode(pr, tau, tol);
    const double shift = k0 * d.p_tau;
    TwistedSolution sol = solve_w(pr, tau, 0.0, shift + 2.0 * d.p_tau, tol, Augment::none);
    const double s1 = type.j ? -1.0 : 1.0, s2 = type.k ? -1.0 : 1.0;
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        double t = 2.0 * d.p_tau * i / samples;
        SphereState w = sol.w(t);
        worst = std::max(worst, dist(sol.w(t + shift), {s1 * w.w1, s2 * w.w2}));
    }
    return worst;
}

double injectivity_gap(const AdmissiblePair& pr, double tau, std::int64_t k0, double dt,
                       const Tolerances& tol) {
    if (!(dt > 0)) throw ArgumentError("scan spacing must be positive");
    PeriodData d = period_ode(pr, tau, tol);
    const double T = 2.0 * k0 * d.p_tau;
    TwistedSolution sol = solve_w(pr, tau, 0.0, T, tol, Augment::none);
    const SphereState w0 = sol.w(0.0);
    const double skip = 0.05 * d.p_tau;
    double gap = std::numeric_limits<double>::infinity();
    for (double t = skip; t < T - skip; t += dt) gap = std::min(gap, dist(sol.w(t), w0));
    return gap;
}

RationalTarget necklace_target(const AdmissiblePair& pr, int m) {
    if (m < 1) throw ArgumentError("necklace index must be positive");
    if (pr.p == 1) {
        std::int64_t a = static_cast<std::int64_t>(pr.n() - 1) * m;
        return {a, 2 * a - 1};
    }
    if (pr.p == pr.q) {
        std::int64_t a = static_cast<std::int64_t>(pr.p) * m;
        return {a, 2 * a - 1};
    }
    throw ArgumentError("necklaces are defined for p = 1 or p = q");
}

Necklace necklace(const AdmissiblePair& pr, int m, const Tolerances& tol) {
    Necklace nk{};
    nk.m = m;
    nk.target = necklace_target(pr, m);
    nk.k0 = k0_from_target(pr, nk.target);
    // the small-tau branch: pthat decreases to pi/2 as tau -> 0, take the smallest root
    nk.solution = find_tau_for_angular_period(pr, nk.target, tol);
    const double tau = nk.solution.tau;
    double c, c_printed;
    if (pr.p == 1) {
        const int k = pr.n() - 1;
        c = pi / (8.0 * k * b_constant(k));
        c_printed = pi / (16.0 * k * b_constant_printed(k));
        nk.m_scaling_ratio = m * tau * T_k(k, tau) / c;
        nk.m_scaling_ratio_printed = m * tau * T_k(k, tau) / c_printed;
    } else {
        const int p = pr.p;
        c = pi / (16.0 * p * p * b_constant(p));
        c_printed = pi / (32.0 * p * b_constant_printed(p));
        nk.m_scaling_ratio = m * tau * T_k(p, tau) / c;
        nk.m_scaling_ratio_printed = m * tau * T_k(p, tau) / c_printed;
    }
    return nk;
}

}  // namespace sltwist
