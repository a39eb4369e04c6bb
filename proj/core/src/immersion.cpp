#include "sltwist/immersion.hpp"

#include <cmath>

#include "sltwist/errors.hpp"

namespace sltwist {

CMat tangent_frame(const Sampler& s, const RVec& u) {
    if (u.size() != s.params) throw ArgumentError("sampler parameter count mismatch");
    if (s.jacobian) return s.jacobian(u);
    CMat J(s.ambient, s.params);
    const double h = s.fd_step;
    for (int k = 0; k < s.params; ++k) {
        RVec v = u;
        auto at = [&](double d) {
            v[k] = u[k] + d;
            return s.map(v);
        };
        J.col(k) = (8.0 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) / (12.0 * h);
    }
    return J;
}

RVec sphere_point(int k, const double* a) {
    RVec s(k);
    double prod = 1.0;
    for (int i = 0; i + 1 < k; ++i) {
        s[i] = prod * std::cos(a[i]);
        prod *= std::sin(a[i]);
    }
    s[k - 1] = prod;
    return s;
}

Eigen::MatrixXd sphere_jacobian(int k, const double* a) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(k, k - 1);
    for (int m = 0; m + 1 < k; ++m) {
        // derivative in angle m: replace its factor by the derivative
        double prod = 1.0;
        for (int i = 0; i + 1 < k; ++i) {
            if (i < m)
                J(i, m) = 0.0;
            else if (i == m)
                J(i, m) = -prod * std::sin(a[i]);
            else
                J(i, m) = prod * std::cos(a[i]);
            prod *= (i == m) ? std::cos(a[i]) : std::sin(a[i]);
        }
        J(k - 1, m) = prod;
    }
    return J;
}

Sampler equator_sampler(int k) {
    if (k < 1) throw ArgumentError("sphere dimension must be nonnegative");
    Sampler s;
    s.params = k - 1;
    s.ambient = k;
    s.map = [k](const RVec& u) -> CVec { return sphere_point(k, u.data()).cast<cplx>(); };
    s.jacobian = [k](const RVec& u) -> CMat { return sphere_jacobian(k, u.data()).cast<cplx>(); };
    return s;
}

CVec immerse(const TwistedSolution& sol, double t, const RVec& s1, const RVec& s2) {
    const AdmissiblePair& pr = sol.pair();
    if (s1.size() != pr.p || s2.size() != pr.q) throw ArgumentError("sphere vectors have wrong size");
    if (std::abs(s1.norm() - 1) > 1e-12 || std::abs(s2.norm() - 1) > 1e-12)
        throw ArgumentError("sphere vectors must be unit");
    SphereState w = sol.w(t);
    CVec x(pr.n());
    x.head(pr.p) = w.w1 * s1.cast<cplx>();
    x.tail(pr.q) = w.w2 * s2.cast<cplx>();
    return x;
}

Sampler immersion_sampler(const TwistedSolution& sol) {
    const int p = sol.pair().p, q = sol.pair().q;
    Sampler s;
    s.params = 1 + (p - 1) + (q - 1);
    s.ambient = p + q;
    s.map = [&sol, p, q](const RVec& u) -> CVec {
        return immerse(sol, u[0], sphere_point(p, u.data() + 1), sphere_point(q, u.data() + p));
    };
    return s;
}

SphereState w_taumax(const AdmissiblePair& pr, double t) {
    const double n = pr.n(), tm = tau_max(pr);
    constexpr double pi = 3.14159265358979323846;
    if (pr.p == 1)
        return {cplx(0, -1) * std::sqrt(1.0 / n) * std::polar(1.0, 2 * n * tm * t),
                std::sqrt((n - 1) / n) * std::polar(1.0, -2 * n * tm * t / (n - 1))};
    return {std::sqrt(pr.p / n) * std::polar(1.0, -pi / (4 * pr.p) + 2 * n * tm * t / pr.p),
            std::sqrt(pr.q / n) * std::polar(1.0, -pi / (4 * pr.q) - 2 * n * tm * t / pr.q)};
}

double legendrian_residual(const Sampler& s, const std::vector<RVec>& points) {
    double worst = 0;
    for (const RVec& u : points) {
        CVec x = s.map(u);
        CMat J = tangent_frame(s, u);
        for (int k = 0; k < J.cols(); ++k) {
            double len = J.col(k).norm();
            if (len == 0) continue;
            worst = std::max(worst, std::abs(x.dot(J.col(k)).imag()) / len);
        }
    }
    return worst;
}

cplx lagrangian_phase(const Sampler& s, const RVec& u) {
    if (s.params != s.ambient - 1) throw ArgumentError("phase needs a hypersurface of the sphere");
    CMat F(s.ambient, s.ambient);
    F.col(0) = s.map(u);
    if (s.params > 0) F.rightCols(s.params) = tangent_frame(s, u);
    cplx d = F.determinant();
    if (std::abs(d) == 0) throw NumericalError("degenerate tangent frame");
    return d / std::abs(d);
}

cplx curve_phase(const SphereState& w, const SphereState& wd) {
    double speed = std::sqrt(std::norm(wd.w1) + std::norm(wd.w2));
    return (w.w1 * wd.w2 - wd.w1 * w.w2) / speed;
}

Sampler curve_sampler(std::function<SphereState(double)> w, std::function<SphereState(double)> wdot) {
    Sampler s;
    s.params = 1;
    s.ambient = 2;
    s.map = [w](const RVec& u) -> CVec {
        SphereState v = w(u[0]);
        CVec x(2);
        x << v.w1, v.w2;
        return x;
    };
    if (wdot)
        s.jacobian = [wdot](const RVec& u) -> CMat {
            SphereState v = wdot(u[0]);
            CMat J(2, 1);
            J << v.w1, v.w2;
            return J;
        };
    return s;
}

Sampler twisted_product(const Sampler& x1, const Sampler& x2, const Sampler& c) {
    if (c.ambient != 2 || c.params != 1) throw ArgumentError("twisting curve must be a curve in C^2");
    Sampler s;
    s.params = 1 + x1.params + x2.params;
    s.ambient = x1.ambient + x2.ambient;
    s.map = [x1, x2, c](const RVec& u) -> CVec {
        CVec w = c.map(u.head(1));
        CVec x(x1.ambient + x2.ambient);
        x.head(x1.ambient) = w[0] * x1.map(u.segment(1, x1.params));
        x.tail(x2.ambient) = w[1] * x2.map(u.tail(x2.params));
        return x;
    };
    return s;
}

PhaseRelation twisted_product_phase(const Sampler& x1, const Sampler& x2, const Sampler& c,
                                    const std::vector<RVec>& points) {
    Sampler prod = twisted_product(x1, x2, c);
    const int p = x1.ambient, q = x2.ambient;
    PhaseRelation r{0.0, 0.0};
    std::vector<RVec> pa, pb, pc;
    for (const RVec& u : points) {
        RVec ut = u.head(1), ua = u.segment(1, x1.params), ub = u.tail(x2.params);
        pc.push_back(ut);
        pa.push_back(ua);
        pb.push_back(ub);
        CVec w = c.map(ut);
        cplx predicted = ((p - 1) % 2 ? -1.0 : 1.0) * lagrangian_phase(x1, ua) * lagrangian_phase(x2, ub) *
                         lagrangian_phase(c, ut) * std::polar(1.0, (p - 1) * std::arg(w[0])) *
                         std::polar(1.0, (q - 1) * std::arg(w[1]));
        r.max_residual = std::max(r.max_residual, std::abs(lagrangian_phase(prod, u) - predicted));
    }
    r.max_factor_legendre = std::max({legendrian_residual(x1, pa), legendrian_residual(x2, pb),
                                      legendrian_residual(c, pc)});
    if (r.max_factor_legendre > 1e-4) throw ArgumentError("twisted product factor is not Legendrian");
    return r;
}

double metric_residual(const TwistedSolution& sol, const RVec& u) {
    const AdmissiblePair& pr = sol.pair();
    const int p = pr.p, q = pr.q;
    Sampler s = immersion_sampler(sol);
    CMat J = tangent_frame(s, u);
    Eigen::MatrixXd G = (J.adjoint() * J).real();
    SphereState w = sol.w(u[0]);
    const double y = std::norm(w.w2);
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(s.params, s.params);
    E(0, 0) = std::pow(y, q - 1) * std::pow(1 - y, p - 1);
    if (p > 1) {
        Eigen::MatrixXd j1 = sphere_jacobian(p, u.data() + 1);
        E.block(1, 1, p - 1, p - 1) = (1 - y) * j1.transpose() * j1;
    }
    Eigen::MatrixXd j2 = sphere_jacobian(q, u.data() + p);
    E.block(p, p, q - 1, q - 1) = y * j2.transpose() * j2;
    return (G - E).cwiseAbs().maxCoeff();
}

}  // namespace sltwist
