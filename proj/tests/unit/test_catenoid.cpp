#include <doctest.h>

#include <cmath>
#include <sltwist/catenoid.hpp>
#include <sltwist/errors.hpp>

using namespace sltwist;

TEST_CASE("lifetime") {
    // mpmath: B(1/6, 1/2) / 6
    CHECK(std::abs(catenoid_lifetime_beta(3) - 1.2143253239437908) < 1e-14);
    for (int n = 3; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(std::abs(catenoid_lifetime_quadrature(n) - catenoid_lifetime_beta(n)) < 1e-10);
        CHECK(catenoid_lifetime_gamma_printed(n) < 0);
    }
    CHECK_THROWS_AS(catenoid_lifetime(2), ArgumentError);
}

TEST_CASE("profile") {
    CatenoidProfile w({3, 1.0}, 1.0);
    auto z0 = w(0.0);
    CHECK(std::abs(z0 - std::polar(1.0, M_PI / 6)) < 1e-15);
    // Im(w^n) is conserved along w' = conj(w)^{n-1}
    for (double t : {-0.9, 0.4, 1.0}) CHECK(std::abs(std::pow(w(t), 3).imag() - 1.0) < 1e-10);
    CHECK_THROWS_AS(CatenoidProfile({3, 1.0}, 1.3), ArgumentError);
    CHECK_THROWS_AS(w(1.5), ArgumentError);
}

TEST_CASE("scaling") {
    auto a = catenoid_flow({3, 8.0}, 0.2);
    auto b = catenoid_flow({3, 1.0}, 0.4);
    CHECK(std::abs(a - 2.0 * b) < 1e-10);
}

TEST_CASE("reflection symmetry uses e^{+i pi / n}") {
    for (int n : {2, 3, 4}) {
        auto r = verify_catenoid_symmetry(n, 101);
        CHECK(r.residual < 1e-9);
        CHECK(r.residual_printed > 0.1);
    }
}
