#include <doctest.h>

#include <cmath>
#include <sltwist/catenoid.hpp>
#include <sltwist/errors.hpp>
#include <sltwist/necks.hpp>

using namespace sltwist;

TEST_CASE("rescaled neck of (1,2)") {
    AdmissiblePair pr(1, 2);
    auto a = neck_rescale(pr, 1e-3, 1, 2.0);
    auto b = neck_rescale(pr, 2.5e-4, 1, 2.0);
    CHECK(a.catenoid_dim == 2);
    CHECK(a.waist_type == 2);
    CHECK(std::abs(a.beta - std::sqrt(y_extrema(pr, 1e-3).y_min)) < 1e-12);
    CHECK(std::abs(a.beta - a.beta_extrema) < 1e-12);
    CHECK(std::abs(a.det_W + 1) < 1e-14);
    CHECK(b.max_error < a.max_error);
    // quadratic in beta on this window
    double ratio = (a.max_error / b.max_error) / std::pow(a.beta / b.beta, 2);
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("necks of both types for (2,3)") {
    AdmissiblePair pr(2, 3);
    for (int k : {1, 2}) {
        CAPTURE(k);
        auto a = neck_rescale(pr, 1e-5, k, 0.5);
        auto b = neck_rescale(pr, 2.5e-6, k, 0.5);
        CHECK(a.catenoid_dim == (k == 1 ? 3 : 2));
        CHECK(std::abs(a.det_W + 1) < 1e-12);
        CHECK(b.max_error < a.max_error);
        CHECK(a.max_error < 0.05);
    }
}

TEST_CASE("window beyond the catenoid lifetime") {
    CHECK_THROWS_AS(neck_rescale({2, 3}, 1e-4, 1, catenoid_lifetime(3) + 0.1), ArgumentError);
}
