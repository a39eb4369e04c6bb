#include <doctest.h>

#include <cmath>
#include <sltwist/errors.hpp>
#include <sltwist/symmetry.hpp>

using namespace sltwist;

TEST_CASE("symmetry relations hold over a period") {
    for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
        AdmissiblePair pr(p, q);
        for (double f : {0.1, 0.5, 0.9}) {
            CAPTURE(p);
            CAPTURE(q);
            CAPTURE(f);
            auto rs = symmetry_residuals(pr, f * tau_max(pr), 100);
            CHECK(rs.size() >= 5);
            for (const auto& r : rs) {
                CAPTURE(r.name);
                CHECK(r.residual < 1e-8);
            }
        }
    }
}

TEST_CASE("exchange relation only for p = q") {
    auto has = [](const std::vector<SymmetryResidual>& rs, const std::string& n) {
        for (const auto& r : rs)
            if (r.name == n) return true;
        return false;
    };
    CHECK(has(symmetry_residuals({2, 2}, 0.05), "exchange"));
    CHECK_FALSE(has(symmetry_residuals({2, 3}, 0.02), "exchange"));
}

TEST_CASE("T_tilde is special unitary") {
    auto T = T_tilde({2, 3}, 0.7);
    CHECK(std::abs(T.determinant() - cplx(1, 0)) < 1e-14);
    CHECK((T.adjoint() * T - CMat::Identity(5, 5)).norm() < 1e-14);
}

TEST_CASE("waists and bulges") {
    AdmissiblePair p12(1, 2);
    auto wb = waists_and_bulges(p12, 0.1, -3 * 1.8677652614711665 - 1e-9, 3 * 1.8677652614711665 + 1e-9);
    REQUIRE(wb.waists.size() == 4);
    const double P = wb.periods.p_tau;
    CHECK(std::abs(wb.waists[0].t + 3 * P) < 1e-12);
    CHECK(std::abs(wb.waists[1].t + P) < 1e-12);
    CHECK(std::abs(wb.waists[2].t - P) < 1e-12);
    CHECK(std::abs(wb.waists[3].t - 3 * P) < 1e-12);
    auto ymin = y_extrema(p12, 0.1).y_min;
    for (const auto& w : wb.waists) CHECK(std::abs(w.y - ymin) < 1e-9);

    AdmissiblePair p23(2, 3);
    auto wc = waists_and_bulges(p23, 0.02, -8, 8);
    auto ex = y_extrema(p23, 0.02);
    for (const auto& w : wc.waists) {
        CAPTURE(w.index);
        CHECK(std::abs(w.y - (w.type == 2 ? ex.y_min : ex.y_max)) < 1e-9);
    }
    for (const auto& b : wc.bulges) CHECK(b.t_right > b.t_left);
    CHECK_THROWS_AS(waists_and_bulges(p23, 0.02, 1, 0), ArgumentError);
}

TEST_CASE("approximating spheres") {
    AdmissiblePair pr(1, 2);
    auto S = approximating_spheres(pr, 1e-4, 0, 1);
    CHECK((S[0].frame - CMat::Identity(3, 3)).norm() < 1e-15);
    CHECK(S[1].frame_orthogonality < 1e-14);
    // tau -> 0 limit of the first frame: diag(-1, e^{-i pi/(n-1)} Id)
    CHECK(std::abs(S[1].frame(0, 0) + 1.0) < 0.05);
    CHECK(std::abs(S[1].frame(1, 1) - std::polar(1.0, -M_PI / 2)) < 0.05);
    auto T = approximating_spheres({2, 3}, 1e-3, 0, 3);
    for (const auto& s : T) CHECK(s.frame_orthogonality < 1e-13);
}

TEST_CASE("bulges are almost spherical") {
    AdmissiblePair pr(1, 2);
    auto a = bulge_sphere_distance(pr, 1e-3, 0, 2.0);
    auto b = bulge_sphere_distance(pr, 1e-4, 0, 2.0);
    CHECK(a.max_distance < 0.01);
    CHECK(b.over_tau == doctest::Approx(a.over_tau).epsilon(0.1));
    auto c = bulge_sphere_distance(pr, 1e-4, 1, 2.0);
    CHECK(c.max_distance < 1e-3);
}
