#include "sltwist/necks.hpp"

#include <cmath>

#include "sltwist/catenoid.hpp"
#include "sltwist/errors.hpp"

namespace sltwist {

NeckComparison neck_rescale(const AdmissiblePair& pr, double tau, int k, double b, int samples,
                            const Tolerances& tol) {
    constexpr double pi = 3.14159265358979323846;
    if (!(tau > 0) || tau >= tau_max(pr)) throw ArgumentError("neck comparison needs 0 < tau < tau_max");
    if (!(b > 0) || samples < 2) throw ArgumentError("neck window must be positive");
    NeckComparison r{};
    r.waist_index = k;
    r.window = b;
    PeriodData d = period_ode(pr, tau, tol);
    Extrema ex = y_extrema(pr, tau);
    const int l = static_cast<int>(std::floor(k / 2.0));
    if (pr.p == 1) {
        r.waist_type = 2;
        r.t_waist = (2.0 * k - 1) * d.p_tau;
    } else if (k - 2 * l == 1) {
        r.waist_type = 2;
        r.t_waist = 2.0 * l * d.p_tau + d.p_plus;
    } else {
        r.waist_type = 1;
        r.t_waist = 2.0 * l * d.p_tau - d.p_minus;
    }
    const bool second = r.waist_type == 2;
    r.catenoid_dim = pr.p == 1 ? pr.n() - 1 : (second ? pr.q : pr.p);
    const int m = r.catenoid_dim;
    if (m >= 3 && b >= catenoid_lifetime(m)) throw ArgumentError("window exceeds the catenoid lifetime");
    r.beta_extrema = second ? std::sqrt(ex.y_min) : std::sqrt(ex.gap);

    const double scale = std::pow(r.beta_extrema, 2.0 - m);
    const double reach = scale * b * 1.01;
    TwistedSolution sol = solve_w(pr, tau, std::min(0.0, r.t_waist - reach), std::max(0.0, r.t_waist + reach),
                                  tol, Augment::none);
    auto comp = [&](double t) { return second ? sol.w(t).w2 : sol.w(t).w1; };
    const cplx wc = comp(r.t_waist);
    r.beta = std::abs(wc);
    const SphereState ww = sol.w(r.t_waist);

    // W = diag(|w1|/w1 Id_p, e^{i pi/2m} |w2|/w2 Id_q) at a type 2 waist, factors exchanged at type 1
    const cplx u1 = std::abs(ww.w1) / ww.w1, u2 = std::abs(ww.w2) / ww.w2;
    const cplx rot = std::polar(1.0, pi / (2.0 * m));
    r.rescale_frame = CMat::Zero(pr.n(), pr.n());
    for (int i = 0; i < pr.n(); ++i)
        r.rescale_frame(i, i) = i < pr.p ? (second ? u1 : rot * u1) : (second ? rot * u2 : u2);
    r.det_W = r.rescale_frame.determinant().real();

    CatenoidProfile z0({m, 1.0}, b, tol);
    const double s = second ? 1.0 : -1.0;
    for (int i = 0; i < samples; ++i) {
        double tt = -b + 2 * b * i / (samples - 1);
        cplx z = rot * comp(r.t_waist + s * scale * tt) / wc;
        r.max_error = std::max(r.max_error, std::abs(z - z0(tt)));
    }
    return r;
}

}  // namespace sltwist
