#include <doctest.h>

#include <cmath>
#include <sltwist/errors.hpp>
#include <sltwist/twisted.hpp>

using namespace sltwist;

TEST_CASE("admissible pairs") {
    CHECK_NOTHROW(AdmissiblePair(1, 2));
    CHECK_NOTHROW(AdmissiblePair(3, 3));
    CHECK_THROWS_AS(AdmissiblePair(3, 2), ArgumentError);
    CHECK_THROWS_AS(AdmissiblePair(1, 1), ArgumentError);
    CHECK_THROWS_AS(AdmissiblePair(0, 2), ArgumentError);
}

TEST_CASE("tau_max") {
    CHECK(tau_max({1, 2}) == doctest::Approx(0.5 * std::sqrt(4.0 / 27.0)).epsilon(1e-15));
    CHECK(tau_max({2, 2}) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(tau_max({3, 3}) == doctest::Approx(0.0625).epsilon(1e-15));
}

TEST_CASE("extrema against the mpmath oracle") {
    auto e = y_extrema({1, 2}, 0.1);
    CHECK(std::abs(e.y_min - 0.22756104032278087) < 1e-14);
    CHECK(std::abs(e.y_max - 0.95625675919567119) < 1e-14);
    auto f = y_extrema({2, 2}, 0.06);
    CHECK(std::abs(f.y_min - 0.13944487245360107) < 1e-14);
    CHECK(std::abs(f.y_max - 0.86055512754639893) < 1e-14);
    CHECK_THROWS_AS(y_extrema({1, 2}, 0.0), ArgumentError);
    CHECK_THROWS_AS(y_extrema({1, 2}, 1.0), ArgumentError);
}

TEST_CASE("conserved quantities along the flow") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {3, 3}}) {
        AdmissiblePair pr(p, q);
        double tau = 0.3 * tau_max(pr);
        auto sol = solve_w(pr, tau, -30, 30);
        CHECK(sol.i1_drift() < 1e-10);
        CHECK(sol.i2_drift() < 1e-10);
        CHECK(sol.energy_drift() < 1e-9);
        auto s0 = initial_state(pr, tau);
        CHECK(std::abs(std::norm(s0.w1) + std::norm(s0.w2) - 1) < 1e-15);
    }
}

TEST_CASE("negative tau is the conjugate family") {
    CHECK(conjugate_family_check({2, 3}, 0.02, 15.0, 50) < 1e-12);
    auto a = solve_w({1, 2}, 0.1, -3, 3), b = solve_w({1, 2}, -0.1, -3, 3);
    CHECK(std::abs(std::conj(a.w(1.3).w1) - b.w(1.3).w1) < 1e-14);
    CHECK(b.i2_drift() < 1e-10);
}

TEST_CASE("p = 1, tau = 0 passes through the origin of w1") {
    auto sol = solve_w({1, 2}, 0.0, -2, 2);
    CHECK(std::abs(sol.w(0).w1) == 0.0);
    CHECK(sol.i1_drift() < 1e-10);
    CHECK(sol.i2_drift() < 1e-10);
}
