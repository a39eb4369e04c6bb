#pragma once

#include <string>
#include <vector>

#include "sltwist/immersion.hpp"
#include "sltwist/periods.hpp"

namespace sltwist {

// diag(e^{ix/p} Id_p, e^{-ix/q} Id_q) in U(n).
CMat T_tilde(const AdmissiblePair& pr, double x);

// z -> U conj(z) with U diagonal unitary.
struct AntiHolomorphic {
    CMat U;
    CVec apply(const CVec& z) const { return U * z.conjugate(); }
};

// p = 1: diag(-1, Id). p > 1: the reflections about p_plus and -p_minus, with phases
// e^{i alpha/p} e^{i psi_1(s)} and e^{i alpha/q} e^{i psi_2(s)} at s = 2 p_plus or -2 p_minus.
AntiHolomorphic reflection_plus(const AdmissiblePair& pr, const PeriodRun& run);
AntiHolomorphic reflection_minus(const AdmissiblePair& pr, const PeriodRun& run);

// max over a frame basis of |Omega(A v_1, ..., A v_n) + conj(Omega(v_1, ..., v_n))|.
double omega_pullback_residual(const AntiHolomorphic& a, unsigned seed = 7);

struct SymmetryResidual {
    std::string name;
    double residual;
};

// Relations over one period t in [-p_tau, p_tau] (samples points) plus matrix checks:
// det T_tilde(x) = 1 for 20 seeded random x and the Omega pullback of the reflections.
std::vector<SymmetryResidual> symmetry_residuals(const AdmissiblePair& pr, double tau, int samples = 200,
                                                 const Tolerances& tol = {});

struct Waist {
    int index;
    double t;
    int type;  // 2: y = y_min, 1: y = y_max; p = 1 waists are type 2
    double y;
};

struct Bulge {
    int index;
    double t_left;
    double t_right;
};

struct WaistsAndBulges {
    std::vector<Waist> waists;
    std::vector<Bulge> bulges;
    PeriodData periods;
};

// Waists with t in [a, b] and every bulge meeting [a, b].
WaistsAndBulges waists_and_bulges(const AdmissiblePair& pr, double tau, double a, double b,
                                  const Tolerances& tol = {});

struct MarkedSphere {
    int index;
    CMat frame;               // unitary; the sphere is frame * (unit sphere of R^n)
    std::string marked_set;   // "+-e1" or "S^{p-1} x 0, 0 x S^{q-1}"
    double frame_orthogonality;  // max |F^H F - I|
};

std::vector<MarkedSphere> approximating_spheres(const AdmissiblePair& pr, double tau, int k_min, int k_max,
                                                const Tolerances& tol = {});

// Distance from z to the sphere frame * S^{n-1}_R.
double distance_to_sphere(const CMat& frame, const CVec& z);

struct SphereDistance {
    double tau;
    double max_distance;  // over t in center + [-b, b] and a few meridian points
    double over_tau;      // max_distance / tau
};

// Almost spherical region of bulge k (k = 0, or p = 1 any k, or p > 1 any k) compared with S[k].
SphereDistance bulge_sphere_distance(const AdmissiblePair& pr, double tau, int k, double b, int samples = 200,
                                     const Tolerances& tol = {});

}  // namespace sltwist
