#include <doctest.h>

#include <cmath>
#include <sltwist/errors.hpp>
#include <sltwist/periods.hpp>
#include <sltwist/torque.hpp>

using namespace sltwist;

TEST_CASE("sphere volumes and rules") {
    CHECK(sphere_volume(1) == 1.0);
    CHECK(sphere_volume(2) == doctest::Approx(2 * M_PI));
    CHECK(sphere_volume(3) == doctest::Approx(4 * M_PI));
    CHECK(sphere_volume(4) == doctest::Approx(2 * M_PI * M_PI));
    for (int k = 1; k <= 4; ++k) CHECK(sphere_rule_defect(sphere_rule(k)) < 1e-12);
}

TEST_CASE("basis elements") {
    CHECK_THROWS_AS(SuBasisElement::diag({1.0, 1.0}), ArgumentError);
    CHECK(off_diagonal_basis(4).size() == 12);
    auto g = SuBasisElement::generator({2, 3});
    CHECK(g.lambda.size() == 5);
    CHECK(std::abs(g.lambda[0] - 0.5) < 1e-15);
    CHECK(std::abs(g.lambda[4] + 1.0 / 3.0) < 1e-15);
}

TEST_CASE("torque of the generator") {
    AdmissiblePair pr(1, 2);
    auto sol = solve_w(pr, 0.1, -3, 3);
    auto t = torque(sol, SuBasisElement::generator(pr), 0.4);
    CHECK(std::abs(t.numeric - 0.6 * M_PI) < 1e-10);
    CHECK(std::abs(t.closed_form - 0.6 * M_PI) < 1e-14);
    for (const auto& k : off_diagonal_basis(3)) CHECK(std::abs(torque(sol, k, 0.4).numeric) < 1e-10);
}

TEST_CASE("torque is independent of the meridian") {
    AdmissiblePair pr(2, 3);
    const double tau = 0.02;
    auto sol = solve_w(pr, tau, -6, 6);
    auto gen = SuBasisElement::generator(pr);
    auto a = torque(sol, gen, -2.0), b = torque(sol, gen, 3.1);
    CHECK(std::abs(a.numeric - b.numeric) < 1e-9);
    CHECK(std::abs(a.numeric - 2 * tau * 5.0 / 6.0 * 2 * M_PI * 4 * M_PI) < 1e-9);
    // a diagonal element that preserves both factors but is not the generator
    auto d = SuBasisElement::diag({1.0, -1.0, 0.0, 0.0, 0.0});
    CHECK(std::abs(torque(sol, d, 0.0).numeric - torque_closed_form(pr, tau, d)) < 1e-9);
}
