#include <doctest.h>

#include <cmath>
#include <sltwist/curves.hpp>
#include <sltwist/errors.hpp>
#include <sltwist/immersion.hpp>

using namespace sltwist;

namespace {
std::vector<RVec> grid(int params, int count, double t_scale) {
    std::vector<RVec> pts;
    for (int i = 0; i < count; ++i) {
        RVec u(params);
        u(0) = t_scale * (0.1 + 0.37 * i);
        for (int k = 1; k < params; ++k) u(k) = 0.3 + 0.41 * k + 0.13 * i;
        pts.push_back(u);
    }
    return pts;
}
}  // namespace

TEST_CASE("X_tau is special Legendrian") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
        CAPTURE(p);
        CAPTURE(q);
        AdmissiblePair pr(p, q);
        auto sol = solve_w(pr, 0.3 * tau_max(pr), -4, 4);
        auto X = immersion_sampler(sol);
        auto pts = grid(X.params, 6, 1.0);
        CHECK(legendrian_residual(X, pts) < 1e-8);
        auto ph0 = lagrangian_phase(X, pts[0]);
        for (const auto& u : pts) CHECK(std::abs(lagrangian_phase(X, u) - ph0) < 1e-8);
        for (const auto& u : pts) CHECK(metric_residual(sol, u) < 1e-7);
    }
}

TEST_CASE("immerse needs unit vectors") {
    auto sol = solve_w({2, 2}, 0.05, -1, 1);
    RVec s(2), bad(2);
    s << 0.6, 0.8;
    bad << 1.0, 1.0;
    CHECK(std::abs(immerse(sol, 0.2, s, s).norm() - 1) < 1e-12);
    CHECK_THROWS_AS(immerse(sol, 0.2, bad, s), ArgumentError);
}

TEST_CASE("tau_max solution is explicit") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}}) {
        AdmissiblePair pr(p, q);
        auto sol = solve_w(pr, tau_max(pr) * (1 - 1e-15), -3, 3);
        for (double t : {-2.5, 0.0, 1.7}) {
            auto a = sol.w(t), b = w_taumax(pr, t);
            CHECK(std::abs(a.w1 - b.w1) + std::abs(a.w2 - b.w2) < 1e-6);
        }
    }
}

TEST_CASE("twisted product phase relation") {
    AdmissiblePair pr(2, 3);
    auto sol = solve_w(pr, 0.02, -3, 3);
    auto curve = curve_sampler([&](double t) { return sol.w(t); });
    auto rel = twisted_product_phase(equator_sampler(2), equator_sampler(3), curve, grid(4, 5, 1.0));
    CHECK(rel.max_residual < 1e-7);
    CHECK(rel.max_factor_legendre < 1e-8);
}

TEST_CASE("contact stationary curves") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {2, 5}}) {
        CAPTURE(p);
        CAPTURE(q);
        AdmissiblePair pr(p, q);
        auto r = cs_residual(pr, 0.6);
        CHECK(r.a == doctest::Approx(M_PI / 2));
        CHECK(r.residual < 1e-12);
        CHECK(r.legendre < 1e-12);
        CHECK(r.residual_swapped > 1e-3);
    }
    // p = q or c = pi/4 makes the two exponent patterns agree
    CHECK(cs_residual({2, 2}, 0.6).residual_swapped < 1e-12);
    CHECK(cs_residual({2, 3}, M_PI / 4).residual_swapped < 1e-12);
}

TEST_CASE("contact stationary periods") {
    AdmissiblePair pr(1, 2);
    const double c = std::atan(std::sqrt(2.0 / 3.0));
    double T = cs_period(pr, c, 2, 3);
    auto a = cs_curve(pr, c, 0.4), b = cs_curve(pr, c, 0.4 + T);
    CHECK(std::abs(a.w1 - b.w1) + std::abs(a.w2 - b.w2) < 1e-10);
    CHECK(cs_period(pr, c, 4, 6) == doctest::Approx(T));
    CHECK_THROWS_AS(cs_period(pr, c, 1, 3), ArgumentError);
}

TEST_CASE("Hamiltonian stationary curves") {
    for (auto [m, n] : {std::pair{1, 2}, {2, 3}, {1, 1}}) {
        auto w = [m = m, n = n](double s) { return hs_curve(m, n, s); };
        auto wd = [m = m, n = n](double s) { return hs_curve_dot(m, n, s); };
        auto c = curve_sampler(w, wd);
        auto pts = grid(1, 5, 1.0);
        CHECK(legendrian_residual(c, pts) < 1e-14);
        auto g = w(0.8);
        CHECK(std::abs(std::norm(g.w1) + std::norm(g.w2) - 1) < 1e-15);
        // the phase rotates linearly in s
        auto ph = [&](double s) { return curve_phase(w(s), wd(s)); };
        auto r1 = ph(0.5) / ph(0.0), r2 = ph(1.0) / ph(0.5);
        CHECK(std::abs(r1 - r2) < 1e-12);
    }
}
