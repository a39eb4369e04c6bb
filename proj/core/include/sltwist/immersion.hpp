#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "sltwist/twisted.hpp"

namespace sltwist {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

// A parametrised submanifold of C^N. The jacobian is optional; without it
// tangents come from fourth order central differences.
struct Sampler {
    int params = 0;
    int ambient = 0;
    std::function<CVec(const RVec&)> map;
    std::function<CMat(const RVec&)> jacobian;
    double fd_step = 1e-3;
};

CMat tangent_frame(const Sampler& s, const RVec& u);

// Hyperspherical chart of S^{k-1} in R^k: k-1 angles, the last one azimuthal.
// k = 1 gives the single point +1 with no parameters.
RVec sphere_point(int k, const double* angles);
Eigen::MatrixXd sphere_jacobian(int k, const double* angles);

Sampler equator_sampler(int k);  // S^{k-1} in R^k in C^k

// X(t, angles1, angles2) = (w1(t) s1, w2(t) s2); for p = 1 the first factor is the point 1.
Sampler immersion_sampler(const TwistedSolution& sol);

CVec immerse(const TwistedSolution& sol, double t, const RVec& sigma1, const RVec& sigma2);

// Explicit immersion at tau = tau_max.
SphereState w_taumax(const AdmissiblePair& pr, double t);

// max over points and tangent columns of |Im <X, T>| / |T|.
double legendrian_residual(const Sampler& s, const std::vector<RVec>& points);

// det_C [X, T_1, ..., T_{N-1}] / |det|; needs params = ambient - 1.
cplx lagrangian_phase(const Sampler& s, const RVec& u);

// Curve phase (w1 w2' - w1' w2) / |w'| for a curve in S^3.
cplx curve_phase(const SphereState& w, const SphereState& wdot);

Sampler curve_sampler(std::function<SphereState(double)> w, std::function<SphereState(double)> wdot = {});

// (w1(t) X1(a), w2(t) X2(b)) with parameters (t, a, b).
Sampler twisted_product(const Sampler& x1, const Sampler& x2, const Sampler& curve);

struct PhaseRelation {
    double max_residual;         // |e^{i theta_X} - predicted|
    double max_factor_legendre;  // worst Legendrian residual among the three inputs
};

// e^{i theta_X} = (-1)^{p-1} e^{i theta_1} e^{i theta_2} e^{i theta_w} e^{i (p-1) arg w1 + i (q-1) arg w2}
// at each (t, a, b) sample.
PhaseRelation twisted_product_phase(const Sampler& x1, const Sampler& x2, const Sampler& curve,
                                    const std::vector<RVec>& points);

// Compares the finite-difference Gram matrix of the immersion with
// |w'|^2 dt^2 + (1 - y) g1 + y g2 at (t, angles).
double metric_residual(const TwistedSolution& sol, const RVec& u);

}  // namespace sltwist
