#include "sltwist/torque.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>

#include "sltwist/errors.hpp"
#include "sltwist/immersion.hpp"

namespace sltwist {

namespace {

constexpr double pi = 3.14159265358979323846;

// Gauss-Legendre on [-1, 1] by Golub-Welsch.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
        double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    x.resize(m);
    w.resize(m);
    for (int i = 0; i < m; ++i) {
        x[i] = es.eigenvalues()[i];
        double v = es.eigenvectors()(0, i);
        w[i] = 2.0 * v * v;
    }
}

struct ChartRule {
    std::vector<std::vector<double>> nodes;
    std::vector<double> chart_weights;
};

ChartRule chart_rule(int k, int order) {
    ChartRule r;
    if (k == 1) {
        r.nodes.push_back({});
        r.chart_weights.push_back(1.0);
        return r;
    }
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);
    r.nodes.push_back({});
    r.chart_weights.push_back(1.0);
    for (int a = 0; a < k - 1; ++a) {
        const bool azimuth = a == k - 2;
        std::vector<std::vector<double>> nn;
        std::vector<double> ww;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            for (int m = 0; m < order; ++m) {
                double ang = azimuth ? 2 * pi * m / order : 0.5 * pi * (gx[m] + 1.0);
                double wt = azimuth ? 2 * pi / order : 0.5 * pi * gw[m];
                auto v = r.nodes[i];
                v.push_back(ang);
                nn.push_back(std::move(v));
                ww.push_back(r.chart_weights[i] * wt);
            }
        r.nodes = std::move(nn);
        r.chart_weights = std::move(ww);
    }
    return r;
}

double area_element(int k, const std::vector<double>& a) {
    double e = 1.0;
    for (int i = 0; i + 2 < k; ++i) e *= std::pow(std::sin(a[i]), k - 2 - i);
    return e;
}

}  // namespace

SuBasisElement SuBasisElement::diag(std::vector<double> l) {
    double s = std::accumulate(l.begin(), l.end(), 0.0);
    double scale = 0;
    for (double v : l) scale = std::max(scale, std::abs(v));
    if (std::abs(s) > 1e-12 * std::max(1.0, scale)) throw ArgumentError("diagonal element must be traceless");
    SuBasisElement e;
    e.kind = Kind::diagonal;
    e.lambda = std::move(l);
    return e;
}

SuBasisElement SuBasisElement::rot(int i, int j) {
    if (i == j || i < 0 || j < 0) throw ArgumentError("rotation needs distinct indices");
    SuBasisElement e;
    e.kind = Kind::rotation;
    e.i = i;
    e.j = j;
    return e;
}

SuBasisElement SuBasisElement::sym(int i, int j) {
    if (i == j || i < 0 || j < 0) throw ArgumentError("symmetric element needs distinct indices");
    SuBasisElement e;
    e.kind = Kind::symmetric;
    e.i = i;
    e.j = j;
    return e;
}

SuBasisElement SuBasisElement::generator(const AdmissiblePair& pr) {
    std::vector<double> l(pr.n());
    for (int a = 0; a < pr.n(); ++a) l[a] = a < pr.p ? 1.0 / pr.p : -1.0 / pr.q;
    return diag(l);
}

std::string SuBasisElement::name() const {
    switch (kind) {
        case Kind::diagonal: return "diag";
        case Kind::rotation: return "R_" + std::to_string(i) + std::to_string(j);
        case Kind::symmetric: return "iS_" + std::to_string(i) + std::to_string(j);
    }
    return "?";
}

std::vector<SuBasisElement> off_diagonal_basis(int n) {
    std::vector<SuBasisElement> v;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            v.push_back(SuBasisElement::rot(i, j));
            v.push_back(SuBasisElement::sym(i, j));
        }
    return v;
}

double sphere_volume(int k) {
    if (k < 1) throw ArgumentError("sphere dimension must be nonnegative");
    if (k == 1) return 1.0;
    return 2.0 * std::pow(pi, 0.5 * k) / boost::math::tgamma(0.5 * k);
}

SphereRule sphere_rule(int k, int order) {
    if (order < 2) throw ArgumentError("quadrature order too small");
    ChartRule c = chart_rule(k, order);
    SphereRule r{k, c.nodes, {}};
    for (std::size_t i = 0; i < c.nodes.size(); ++i)
        r.weights.push_back(c.chart_weights[i] * area_element(k, c.nodes[i]));
    return r;
}

double sphere_rule_defect(const SphereRule& r) {
    const double vol = sphere_volume(r.k);
    double total = 0;
    std::vector<double> second(r.k, 0.0);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        RVec s = sphere_point(r.k, r.nodes[i].data());
        total += r.weights[i];
        for (int a = 0; a < r.k; ++a) second[a] += r.weights[i] * s[a] * s[a];
    }
    double d = std::abs(total - vol);
    if (r.k > 1)
        for (double v : second) d = std::max(d, std::abs(v - vol / r.k));
    return d;
}

double torque_closed_form(const AdmissiblePair& pr, double tau, const SuBasisElement& k) {
    if (!k.is_diagonal()) return 0.0;
    if (static_cast<int>(k.lambda.size()) != pr.n()) throw ArgumentError("diagonal element has wrong size");
    double sl = 0, sm = 0;
    for (int a = 0; a < pr.p; ++a) sl += k.lambda[a];
    for (int a = pr.p; a < pr.n(); ++a) sm += k.lambda[a];
    return 2 * tau * (sl / pr.p - sm / pr.q) * sphere_volume(pr.p) * sphere_volume(pr.q);
}

TorqueReport torque(const TwistedSolution& sol, const SuBasisElement& k, double t0, int order) {
    const AdmissiblePair& pr = sol.pair();
    const int p = pr.p, q = pr.q, n = pr.n();
    if (k.is_diagonal() && static_cast<int>(k.lambda.size()) != n)
        throw ArgumentError("diagonal element has wrong size");
    if (!k.is_diagonal() && (k.i >= n || k.j >= n)) throw ArgumentError("basis index out of range");
    const SphereState w = sol.w(t0);
    double x[4] = {w.w1.real(), w.w1.imag(), w.w2.real(), w.w2.imag()}, dx[4];
    twisted_field(pr, sol.tau(), Augment::none)(t0, x, dx);
    const cplx d1(dx[0], dx[1]), d2(dx[2], dx[3]);

    ChartRule r1 = chart_rule(p, order), r2 = chart_rule(q, order);
    double flux = 0;
    CVec X(n), Xt(n), kX(n);
    CMat T(n, n - 2);
    std::vector<RVec> s2v;
    std::vector<Eigen::MatrixXd> j2v;
    for (const auto& nd : r2.nodes) {
        s2v.push_back(sphere_point(q, nd.data()));
        j2v.push_back(sphere_jacobian(q, nd.data()));
    }
    for (std::size_t a = 0; a < r1.nodes.size(); ++a) {
        RVec s1 = sphere_point(p, r1.nodes[a].data());
        Eigen::MatrixXd j1 = sphere_jacobian(p, r1.nodes[a].data());
        X.head(p) = w.w1 * s1.cast<cplx>();
        Xt.head(p) = d1 * s1.cast<cplx>();
        T.setZero();
        if (p > 1) T.block(0, 0, p, p - 1) = w.w1 * j1.cast<cplx>();
        for (std::size_t b = 0; b < r2.nodes.size(); ++b) {
            X.tail(q) = w.w2 * s2v[b].cast<cplx>();
            Xt.tail(q) = d2 * s2v[b].cast<cplx>();
            T.block(p, p - 1, q, q - 1) = w.w2 * j2v[b].cast<cplx>();
            const double dv = std::sqrt(std::max(0.0, (T.adjoint() * T).real().determinant()));
            switch (k.kind) {
                case SuBasisElement::Kind::diagonal:
                    for (int c = 0; c < n; ++c) kX[c] = cplx(0, k.lambda[c]) * X[c];
                    break;
                case SuBasisElement::Kind::rotation:
                    kX.setZero();
                    kX[k.i] = X[k.j];
                    kX[k.j] = -X[k.i];
                    break;
                case SuBasisElement::Kind::symmetric:
                    kX.setZero();
                    kX[k.i] = cplx(0, 1) * X[k.j];
                    kX[k.j] = cplx(0, 1) * X[k.i];
                    break;
            }
            flux += r1.chart_weights[a] * r2.chart_weights[b] * kX.dot(Xt).real() / Xt.norm() * dv;
        }
    }
    TorqueReport rep;
    rep.basis = k.name();
    rep.t0 = t0;
    rep.numeric = flux;
    rep.closed_form = torque_closed_form(pr, sol.tau(), k);
    rep.abs_error = std::abs(rep.numeric - rep.closed_form);
    return rep;
}

}  // namespace sltwist
