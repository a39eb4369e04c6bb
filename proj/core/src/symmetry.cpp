#include "sltwist/symmetry.hpp"

#include <cmath>
#include <random>

#include "sltwist/closure.hpp"
#include "sltwist/errors.hpp"

namespace sltwist {

namespace {

double dist(const SphereState& a, const SphereState& b) {
    return std::sqrt(std::norm(a.w1 - b.w1) + std::norm(a.w2 - b.w2));
}

CMat block_diag(const AdmissiblePair& pr, cplx a, cplx b) {
    CMat m = CMat::Zero(pr.n(), pr.n());
    for (int i = 0; i < pr.n(); ++i) m(i, i) = i < pr.p ? a : b;
    return m;
}

// Phases (u1, u2) of the reflection about s / 2 for p > 1.
std::pair<cplx, cplx> reflection_phases(const AdmissiblePair& pr, const PeriodRun& run, double s) {
    const double alpha = alpha_tau(pr, run.solution.tau());
    auto [p1, p2] = run.solution.psi(s);
    return {std::polar(1.0, alpha / pr.p + p1), std::polar(1.0, alpha / pr.q + p2)};
}

SphereState apply_anti(cplx u1, cplx u2, const SphereState& w) {
    return {u1 * std::conj(w.w1), u2 * std::conj(w.w2)};
}

}  // namespace

CMat T_tilde(const AdmissiblePair& pr, double x) {
    return block_diag(pr, std::polar(1.0, x / pr.p), std::polar(1.0, -x / pr.q));
}

AntiHolomorphic reflection_plus(const AdmissiblePair& pr, const PeriodRun& run) {
    if (pr.p == 1) return {block_diag(pr, -1.0, 1.0)};
    auto [u1, u2] = reflection_phases(pr, run, 2 * run.data.p_plus);
    return {block_diag(pr, u1, u2)};
}

AntiHolomorphic reflection_minus(const AdmissiblePair& pr, const PeriodRun& run) {
    if (pr.p == 1) return {T_tilde(pr, 2 * run.data.pthat) * block_diag(pr, -1.0, 1.0)};
    auto [u1, u2] = reflection_phases(pr, run, -2 * run.data.p_minus);
    return {block_diag(pr, u1, u2)};
}

double omega_pullback_residual(const AntiHolomorphic& a, unsigned seed) {
    const int n = a.U.rows();
    std::mt19937 gen(seed);
    std::normal_distribution<double> nd;
    double worst = 0;
    for (int f = 0; f < 5; ++f) {
        CMat V(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) V(i, j) = cplx(nd(gen), nd(gen));
        CMat AV(n, n);
        for (int j = 0; j < n; ++j) AV.col(j) = a.apply(V.col(j));
        cplx om = V.determinant();
        worst = std::max(worst, std::abs(AV.determinant() + std::conj(om)) / std::abs(om));
    }
    return worst;
}

std::vector<SymmetryResidual> symmetry_residuals(const AdmissiblePair& pr, double tau, int samples,
                                                 const Tolerances& tol) {
    if (!(tau > 0) || tau >= tau_max(pr)) throw ArgumentError("symmetry residuals need 0 < tau < tau_max");
    if (samples < 2) throw ArgumentError("need at least two samples");
    PeriodRun run = period_run(pr, tau, tol, 3.2);
    const TwistedSolution& sol = run.solution;
    const PeriodData& d = run.data;
    const double P = d.p_tau;

    double trans = 0, r0 = 0, r1 = 0, ex = 0;
    AntiHolomorphic ap = reflection_plus(pr, run), am = reflection_minus(pr, run);
    const cplx a1 = ap.U(0, 0), a2 = ap.U(pr.n() - 1, pr.n() - 1);
    const cplx b1 = am.U(0, 0), b2 = am.U(pr.n() - 1, pr.n() - 1);
    const double c_plus = pr.p == 1 ? 0.0 : 2 * d.p_plus;
    const double c_minus = pr.p == 1 ? 2 * P : -2 * d.p_minus;
    for (int i = 0; i < samples; ++i) {
        double t = -P + 2 * P * i / (samples - 1);
        SphereState w = sol.w(t);
        trans = std::max(trans, dist(sol.w(t + 2 * P), rotate_M(pr, 2 * d.pthat, w)));
        r0 = std::max(r0, dist(sol.w(c_plus - t), apply_anti(a1, a2, w)));
        r1 = std::max(r1, dist(sol.w(c_minus - t), apply_anti(b1, b2, w)));
        if (pr.p == pr.q) {
            SphereState m = sol.w(-t);
            ex = std::max(ex, dist(m, {w.w2, w.w1}));
        }
    }
    std::vector<SymmetryResidual> out{{"translation", trans}};
    if (pr.p == 1) {
        out.push_back({"reflection_0", r0});
        out.push_back({"reflection_p", r1});
    } else {
        out.push_back({"reflection_plus", r0});
        out.push_back({"reflection_minus", r1});
    }
    if (pr.p == pr.q) out.push_back({"exchange", ex});

    std::mt19937 gen(11);
    std::uniform_real_distribution<double> ux(-50.0, 50.0);
    double det = 0;
    for (int i = 0; i < 20; ++i) det = std::max(det, std::abs(T_tilde(pr, ux(gen)).determinant() - 1.0));
    out.push_back({"det_T_tilde", det});
    out.push_back({"omega_plus", omega_pullback_residual(ap)});
    out.push_back({"omega_minus", omega_pullback_residual(am)});
    return out;
}

WaistsAndBulges waists_and_bulges(const AdmissiblePair& pr, double tau, double a, double b,
                                  const Tolerances& tol) {
    if (!(b > a)) throw ArgumentError("window must have a < b");
    WaistsAndBulges r;
    r.periods = period_ode(pr, tau, tol);
    const PeriodData& d = r.periods;
    const double P = d.p_tau;
    TwistedSolution sol = solve_w(pr, tau, std::min(a, 0.0) - P, std::max(b, 0.0) + P, tol, Augment::none);
    auto waist_t = [&](int k) {
        if (pr.p == 1) return (2.0 * k - 1) * P;
        int l = k >= 0 ? k / 2 : -((-k + 1) / 2);
        return (k - 2 * l) == 1 ? 2.0 * l * P + d.p_plus : 2.0 * l * P - d.p_minus;
    };
    auto waist_type = [&](int k) { return pr.p == 1 ? 2 : ((k % 2 + 2) % 2 == 1 ? 2 : 1); };
    // enough indices to cover the window
    const int kmax = static_cast<int>(std::ceil(std::max(std::abs(a), std::abs(b)) / P)) + 2;
    for (int k = -kmax; k <= kmax; ++k) {
        double t = waist_t(k);
        if (t >= a && t <= b) r.waists.push_back({k, t, waist_type(k), sol.y(t)});
        double t2 = waist_t(k + 1);
        if (t2 > a && t < b) r.bulges.push_back({k, t, t2});
    }
    return r;
}

std::vector<MarkedSphere> approximating_spheres(const AdmissiblePair& pr, double tau, int k_min, int k_max,
                                                const Tolerances& tol) {
    if (k_max < k_min) throw ArgumentError("empty index range");
    PeriodRun run = period_run(pr, tau, tol, 3.2);
    const double ph = run.data.pthat;
    const std::string marks =
        pr.p == 1 ? "+-e1" : "S^" + std::to_string(pr.p - 1) + "x0, 0xS^" + std::to_string(pr.q - 1);
    AntiHolomorphic up = reflection_plus(pr, run);
    std::vector<MarkedSphere> out;
    for (int k = k_min; k <= k_max; ++k) {
        CMat F;
        if (pr.p == 1)
            F = T_tilde(pr, 2.0 * k * ph);
        else {
            int l = k >= 0 ? k / 2 : -((-k + 1) / 2);
            F = T_tilde(pr, 2.0 * l * ph);
            if (k - 2 * l == 1) F = F * up.U;
        }
        double orth = (F.adjoint() * F - CMat::Identity(pr.n(), pr.n())).cwiseAbs().maxCoeff();
        out.push_back({k, F, marks, orth});
    }
    return out;
}

double distance_to_sphere(const CMat& frame, const CVec& z) {
    CVec u = frame.adjoint() * z;
    RVec re = u.real();
    double r = re.norm();
    if (r == 0) return std::sqrt(1.0 + u.squaredNorm());
    return (u - (re / r).cast<cplx>()).norm();
}

SphereDistance bulge_sphere_distance(const AdmissiblePair& pr, double tau, int k, double b, int samples,
                                     const Tolerances& tol) {
    if (!(b > 0) || samples < 2) throw ArgumentError("bulge comparison needs b > 0 and two samples");
    MarkedSphere S = approximating_spheres(pr, tau, k, k, tol).front();
    PeriodData d = period_ode(pr, tau, tol);
    double center, dir = 1.0;
    if (pr.p == 1)
        center = 2.0 * k * d.p_tau;
    else {
        int l = k >= 0 ? k / 2 : -((-k + 1) / 2);
        center = 2.0 * l * d.p_tau;
        if (k - 2 * l == 1) {
            center += 2 * d.p_plus;
            dir = -1.0;
        }
    }
    TwistedSolution sol = solve_w(pr, tau, std::min(0.0, center - b), std::max(0.0, center + b), tol,
                                  Augment::none);
    std::vector<std::pair<RVec, RVec>> meridian;
    RVec e1 = RVec::Zero(pr.p), f1 = RVec::Zero(pr.q);
    e1[0] = 1;
    f1[0] = 1;
    meridian.push_back({e1, f1});
    meridian.push_back({RVec::Ones(pr.p).normalized(), RVec::Ones(pr.q).normalized()});
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        double s = -b + 2 * b * i / (samples - 1);
        for (auto& [s1, s2] : meridian)
            worst = std::max(worst, distance_to_sphere(S.frame, immerse(sol, center + dir * s, s1, s2)));
    }
    return {tau, worst, worst / tau};
}

}  // namespace sltwist
