#include <doctest.h>

#include <cmath>
#include <sltwist/closure.hpp>
#include <sltwist/errors.hpp>

using namespace sltwist;

TEST_CASE("rational targets") {
    auto t = RationalTarget::parse("6/10");
    CHECK(t.num == 3);
    CHECK(t.den == 5);
    CHECK(t.str() == "3/5");
    CHECK(RationalTarget::parse("2").den == 1);
    CHECK(t.angle() == doctest::Approx(0.6 * M_PI));
    for (const char* bad : {"", "3/", "/5", "0/3", "3/0", "-1/2", "1.5", "a/b", "3/5x"})
        CHECK_THROWS_AS(RationalTarget::parse(bad), ArgumentError);
}

TEST_CASE("rotational period order") {
    CHECK(k0_from_target({1, 2}, {4, 7}) == 7);
    CHECK(k0_from_target({1, 2}, {5, 9}) == 18);
    CHECK(k0_from_target({2, 3}, {3, 5}) == 10);
    CHECK(k0_from_target({2, 2}, {6, 11}) == 11);
    for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {2, 5}})
        for (auto [a, b] : {std::pair{4, 7}, {5, 9}, {3, 5}, {7, 12}, {11, 20}, {1, 1}, {13, 6}}) {
            CAPTURE(p);
            CAPTURE(q);
            CAPTURE(a);
            CAPTURE(b);
            AdmissiblePair pr(p, q);
            RationalTarget t(a, b);
            auto brute = k0_brute_force(pr, t);
            REQUIRE(brute);
            CHECK(*brute == k0_from_target(pr, t));
        }
}

TEST_CASE("half period classification") {
    auto r = half_period_classification({2, 3}, {3, 5});
    CHECK(r.k0 == 10);
    REQUIRE(r.half_period_type);
    CHECK(r.half_period_type->j == 1);
    CHECK(r.half_period_type->k == 0);
    CHECK(r.topology == "Z2-quotient");
    auto odd = half_period_classification({1, 2}, {4, 7});
    CHECK(odd.k0 == 7);
    CHECK_FALSE(odd.half_period_type);
    CHECK(odd.topology == "S1xS^1");
    // n = 3 is odd for (1,2): even k0 gives a (0,0)-type half period
    auto even = half_period_classification({1, 2}, {5, 9});
    CHECK(even.k0 == 18);
    REQUIRE(even.half_period_type);
    CHECK(even.half_period_type->j == 0);
    // (1,3): n even, no strict half period
    auto n4 = half_period_classification({1, 3}, {5, 8});
    CHECK(n4.k0 == 24);
    CHECK_FALSE(n4.half_period_type);
}

TEST_CASE("closed curves from targets") {
    // mpmath roots of pthat(tau) = target
    auto s = find_tau_for_angular_period({1, 2}, {4, 7});
    CHECK(std::abs(s.tau - 0.15987730425998311) < 1e-12);
    CHECK(s.residual < 1e-10);
    auto c = verify_closed({1, 2}, s.tau, 7);
    CHECK(c.closure_residual < 1e-8);
    CHECK(c.one_period_residual < 1e-9);
    auto h = find_tau_for_angular_period({2, 3}, {3, 5});
    CHECK(std::abs(h.tau - 0.013492255981065877) < 1e-12);
    CHECK(verify_half_period({2, 3}, h.tau, 10, {1, 0}) < 1e-8);
    CHECK(verify_half_period({2, 3}, h.tau, 10, {0, 1}) > 0.1);
}

TEST_CASE("targets outside the attainable range") {
    CHECK_THROWS_AS(find_tau_for_angular_period({1, 2}, {1, 3}), NumericalError);
    CHECK(search_tau_for_angular_period({1, 2}, {1, 3}).roots.empty());
}

TEST_CASE("necklaces") {
    CHECK(necklace_target({1, 2}, 2).str() == "4/7");
    CHECK(necklace_target({2, 2}, 3).str() == "6/11");
    CHECK_THROWS_AS(necklace_target({2, 3}, 2), ArgumentError);
    auto nk = necklace({2, 2}, 2);
    CHECK(nk.k0 == 7);
    CHECK(std::abs(nk.solution.tau - 0.018744975630196928) < 1e-12);
    CHECK(injectivity_gap({2, 2}, nk.solution.tau, nk.k0) > 1e-3);
}
