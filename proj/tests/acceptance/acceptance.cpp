// One line per acceptance criterion: PASS or FAIL, the measured quantity and its limit.
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <sltwist/sltwist.hpp>

using namespace sltwist;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<AdmissiblePair> pairs{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
const double fractions[] = {0.1, 0.5, 0.9};

int failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("criterion %2d %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[1024];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void run(int id, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

void conservation_and_energy() {
    auto t0 = Clock::now();
    double i_drift = 0, e_drift = 0;
    for (const auto& pr : pairs)
        for (double f : fractions) {
            double tau = f * tau_max(pr);
            double P = periods_quadrature(pr, tau).p_tau;
            auto sol = solve_w(pr, tau, -10 * P, 10 * P);
            i_drift = std::max({i_drift, sol.i1_drift(), sol.i2_drift()});
            e_drift = std::max(e_drift, sol.energy_drift());
        }
    double dt = seconds_since(t0);
    report(1, i_drift <= 1e-9 && dt < 10,
           fmt("max I1/I2 drift %.3e (limit 1e-9) over [-10p, 10p], %.2f s (limit 10 s)", i_drift, dt));
    report(2, e_drift <= 1e-8, fmt("max |y'^2 - 4f(y) + 16 tau^2| %.3e (limit 1e-8)", e_drift));
}

void dual_route() {
    auto t0 = Clock::now();
    double worst = 0;
    for (const auto& pr : pairs)
        for (double f : fractions) {
            double tau = f * tau_max(pr);
            auto q = periods_quadrature(pr, tau);
            auto o = period_ode(pr, tau);
            worst = std::max({worst, std::abs(q.p_tau - o.p_tau), std::abs(q.p_plus - o.p_plus),
                              std::abs(q.p_minus - o.p_minus)});
        }
    double dt = seconds_since(t0);
    report(3, worst <= 1e-8 && dt < 30,
           fmt("max quadrature/ode difference in p_tau, p_tau+- %.3e (limit 1e-8), %.2f s (limit 30 s)",
               worst, dt));
}

void wronskian() {
    double worst = 0;
    for (const auto& pr : pairs)
        for (double f : fractions) {
            auto lin = solve_Q(pr, f * tau_max(pr));
            const double P = lin.periods().p_tau;
            for (int i = 0; i < 50; ++i) {
                double t = -2 * P + 4 * P * i / 49.0;
                worst = std::max(worst, std::abs(lin.wronskian(t) - 1));
            }
        }
    report(4, worst <= 1e-8, fmt("max |(q - ny)Q' + n y' Q - 1| %.3e at 50 samples per case (limit 1e-8)", worst));
}

void derivative() {
    auto t0 = Clock::now();
    double worst = 0;
    for (const auto& pr : pairs) worst = std::max(worst, check_dpthat(pr, 0.5 * tau_max(pr)).rel_diff);
    double dt = seconds_since(t0);
    report(5, worst <= 1e-6 && dt < 60,
           fmt("max relative difference formula vs central difference %.3e (limit 1e-6), %.2f s (limit 60 s)",
               worst, dt));
}

void asymptotics() {
    bool pass = true;
    std::string detail;
    for (const auto& pr : pairs) {
        for (auto law : {Law::pt_plus, Law::pt_minus, Law::pthat_excess, Law::ymin, Law::ymax_gap}) {
            if (law == Law::pt_minus && pr.p == 1) continue;
            auto r = check_asymptotics(pr, {1e-2, 1e-4}, law);
            bool in_band = r[1].ratio >= 0.85 && r[1].ratio <= 1.15;
            bool closer = std::abs(r[1].ratio - 1) < std::abs(r[0].ratio - 1);
            bool ok = in_band && closer;
            pass = pass && ok;
            std::printf("    (%d,%d) %-12s ratio %.4f at 1e-2, %.4f at 1e-4; as printed %.4f at 1e-4%s\n", pr.p,
                        pr.q, law_name(law).c_str(), r[0].ratio, r[1].ratio, r[1].ratio_printed,
                        ok ? "" : (in_band ? "  <- not closer to 1" : "  <- outside [0.85, 1.15]"));
        }
    }
    report(6, pass, "leading-order ratios at tau = 1e-4 in [0.85, 1.15] and closer to 1 than at 1e-2");
}

void taumax_limit() {
    AdmissiblePair pr(1, 2);
    double P = period_ode(pr, 0.999 * tau_max(pr)).p_tau;
    double rel = std::abs(2 * P - M_PI) / M_PI;
    auto lim = pthat_limit(pr);
    double d_small = std::abs(lim.measured - lim.candidate_small);
    double d_large = std::abs(lim.measured - lim.candidate_large);
    bool matched = std::min(d_small, d_large) < 1e-3;
    report(7, rel <= 0.01 && matched,
           fmt("(1,2) 2p_tau at 0.999 tau_max off pi by %.3e relative (limit 1e-2); pthat limit %.8f, "
               "pi sqrt(pq/2n) = %.8f (diff %.1e), pi sqrt(2pq/n) = %.8f (diff %.1e)",
               rel, lim.measured, lim.candidate_small, d_small, lim.candidate_large, d_large));
}

void torques() {
    auto t0 = Clock::now();
    double cf = 0, off = 0, mer = 0;
    double example = 0;
    for (const auto& pr : pairs) {
        double tau = pr.p == 1 && pr.q == 2 ? 0.1 : 0.5 * tau_max(pr);
        double P = periods_quadrature(pr, tau).p_tau;
        auto sol = solve_w(pr, tau, -1.5 * P, 1.5 * P);
        auto gen = SuBasisElement::generator(pr);
        auto a = torque(sol, gen, 0.0), b = torque(sol, gen, 0.6 * P);
        cf = std::max(cf, a.abs_error);
        mer = std::max(mer, std::abs(a.numeric - b.numeric));
        for (const auto& k : off_diagonal_basis(pr.n())) off = std::max(off, std::abs(torque(sol, k, 0.0).numeric));
        if (pr.p == 1 && pr.q == 2) example = std::abs(a.numeric - 6 * M_PI * 0.1);
    }
    double dt = seconds_since(t0);
    report(8, cf <= 1e-8 && off <= 1e-10 && mer <= 1e-8 && example <= 1e-8 && dt < 20,
           fmt("closed form %.2e, (1,2) tau = 0.1 vs 6 pi 0.1 %.2e, meridians %.2e (limit 1e-8); "
               "off-diagonal %.2e (limit 1e-10); %.2f s (limit 20 s)",
               cf, example, mer, off, dt));
}

void closure() {
    auto t0 = Clock::now();
    bool pass = true;
    struct Case {
        AdmissiblePair pr;
        int m;
        std::int64_t k0;
    };
    for (const Case& c : {Case{{1, 2}, 2, 7}, Case{{2, 2}, 2, 7}, Case{{2, 2}, 3, 11}}) {
        auto nk = necklace(c.pr, c.m);
        double pres = std::abs(nk.solution.pthat_ode - nk.target.angle());
        // |w(t + 2 k0 p_tau) - w(t)| at 20 samples
        auto cc = verify_closed(c.pr, nk.solution.tau, nk.k0, 20);
        bool ok = pres <= 1e-10 && nk.k0 == c.k0 && cc.closure_residual <= 1e-7;
        pass = pass && ok;
        std::printf("    (%d,%d) m = %d: tau %.15f, target %s, |pthat - target| %.2e, k0 %lld, closure %.2e\n",
                    c.pr.p, c.pr.q, c.m, nk.solution.tau, nk.target.str().c_str(), pres,
                    static_cast<long long>(nk.k0), cc.closure_residual);
    }
    AdmissiblePair pr(1, 2);
    const std::pair<int, int> targets[] = {{5, 9},  {6, 11},  {7, 13},  {8, 15},  {9, 17},
                                           {11, 20}, {13, 24}, {13, 23}, {12, 23}, {17, 30}};
    std::set<long long> taus;
    int closed = 0;
    for (auto [a, b] : targets) {
        RationalTarget t(a, b);
        auto s = find_tau_for_angular_period(pr, t);
        std::int64_t k0 = k0_from_target(pr, t);
        auto cc = verify_closed(pr, s.tau, k0, 20);
        bool ok = s.residual <= 1e-10 && cc.closure_residual <= 1e-7;
        if (ok) ++closed;
        taus.insert(std::llround(s.tau * 1e12));
        std::printf("    (1,2) target %s: tau %.12f, k0 %lld, closure %.2e%s\n", t.str().c_str(), s.tau,
                    static_cast<long long>(k0), cc.closure_residual, ok ? "" : "  <- not closed");
    }
    double dt = seconds_since(t0);
    pass = pass && closed == 10 && taus.size() == 10 && dt < 120;
    report(9, pass, fmt("three necklaces and %d of 10 distinct closed (1,2) curves, %.2f s (limit 120 s)", closed, dt));
}

void symmetries() {
    double worst = 0;
    std::string where;
    for (const auto& pr : pairs)
        for (double f : fractions)
            for (const auto& r : symmetry_residuals(pr, f * tau_max(pr)))
                if (r.residual > worst) {
                    worst = r.residual;
                    where = fmt("(%d,%d) %.1f tau_max %s", pr.p, pr.q, f, r.name.c_str());
                }
    report(10, worst <= 1e-8, fmt("max symmetry residual %.3e at %s (limit 1e-8)", worst, where.c_str()));
}

void catenoid() {
    double a = catenoid_lifetime_quadrature(3), b = catenoid_lifetime_beta(3);
    auto s = verify_catenoid_symmetry(3, 200);
    bool pass = std::abs(a - b) <= 1e-10 && std::abs(b - 1.2143) < 1e-4 && s.residual <= 1e-9;
    report(11, pass,
           fmt("T1(3) quadrature %.15f, Beta %.15f, diff %.1e (limit 1e-10); reflection residual %.2e "
               "(limit 1e-9), with the opposite phase %.2e",
               a, b, std::abs(a - b), s.residual, s.residual_printed));
}

void necks() {
    AdmissiblePair pr(1, 2);
    auto a = neck_rescale(pr, 1e-3, 1, 2.0);
    auto b = neck_rescale(pr, 2.5e-4, 1, 2.0);
    double er = a.max_error / b.max_error, br = a.beta / b.beta;
    double factor = er / br;
    bool pass = factor <= 2.0 && factor >= 0.5;
    report(12, pass,
           fmt("(1,2) b = 2: error %.4e -> %.4e, ratio %.4f; beta ratio %.4f; factor %.4f (limit 2)", a.max_error,
               b.max_error, er, br, factor));
}

void half_period() {
    AdmissiblePair pr(2, 3);
    RationalTarget t(3, 5);
    auto rep = half_period_classification(pr, t);
    bool typed = rep.half_period_type && rep.half_period_type->j == 1 && rep.half_period_type->k == 0;
    double res = 1;
    if (typed) {
        auto s = find_tau_for_angular_period(pr, t);
        res = verify_half_period(pr, s.tau, rep.k0, *rep.half_period_type, 20);
    }
    report(13, rep.k0 % 2 == 0 && typed && res <= 1e-7,
           fmt("(2,3) target 3/5: k0 %lld, type %s, |w(t + k0 p_tau) - rho w(t)| %.2e (limit 1e-7)",
               static_cast<long long>(rep.k0),
               rep.half_period_type
                   ? fmt("(%d,%d)", rep.half_period_type->j, rep.half_period_type->k).c_str()
                   : "none",
               res));
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    run(1, conservation_and_energy);
    run(3, dual_route);
    run(4, wronskian);
    run(5, derivative);
    run(6, asymptotics);
    run(7, taumax_limit);
    run(8, torques);
    run(9, closure);
    run(10, symmetries);
    run(11, catenoid);
    run(12, necks);
    run(13, half_period);
    std::printf("%d failing, %.1f s\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
