#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "sltwist/ode.hpp"

namespace sltwist {

using cplx = std::complex<double>;

struct AdmissiblePair {
    int p = 1;
    int q = 2;

    AdmissiblePair() = default;
    AdmissiblePair(int p_, int q_);  // throws ArgumentError unless 1 <= p <= q, q >= 2
    int n() const { return p + q; }
};

double tau_max(const AdmissiblePair& pr);

// f(y) = y^q (1-y)^p and its derivative.
double f_poly(const AdmissiblePair& pr, double y);
double f_prime(const AdmissiblePair& pr, double y);

struct Extrema {
    double y_min;
    double y_max;
    double gap;  // 1 - y_max, computed without cancellation
};

// Roots of f(y) = 4 tau^2 on either side of q/n. Requires 0 < |tau| < tau_max (1 - 1e-10).
Extrema y_extrema(const AdmissiblePair& pr, double tau);

struct SphereState {
    cplx w1;
    cplx w2;
};

// alpha_tau = arcsin(-tau / tau_max).
double alpha_tau(const AdmissiblePair& pr, double tau);

SphereState initial_state(const AdmissiblePair& pr, double tau);

cplx ipow(cplx z, int k);

// Layout of the integrated state: w1, w2 as (re, im) pairs, then optionally
// psi1, psi2, then optionally the linearised solution Q and its derivative.
enum class Augment { none = 4, psi = 6, linearised = 8 };

VectorField twisted_field(const AdmissiblePair& pr, double tau, Augment aug);

// Dense solution of the (p,q)-twisted system through the canonical initial state.
class TwistedSolution {
public:
    TwistedSolution(AdmissiblePair pr, double tau, Trajectory traj);

    const AdmissiblePair& pair() const { return pair_; }
    double tau() const { return tau_; }
    const Trajectory& trajectory() const { return traj_; }
    double t_min() const { return traj_.t_min(); }
    double t_max() const { return traj_.t_max(); }

    SphereState w(double t) const;
    double y(double t) const;
    double ydot(double t) const;
    std::pair<double, double> psi(double t) const;  // requires Augment::psi or more

    // Max |I1 - 1| and |I2 + 2 tau| over the integrator grid.
    double i1_drift() const;
    double i2_drift() const;
    // Max |y'^2 - 4 f(y) + 16 tau^2| over the integrator grid.
    double energy_drift() const;

private:
    AdmissiblePair pair_;
    double tau_;
    Trajectory traj_;
};

std::vector<double> pack_state(const SphereState& s, Augment aug);
SphereState unpack_state(const double* x);
double state_y(const double* x);
double state_ydot(const AdmissiblePair& pr, const double* x);
cplx state_product(const AdmissiblePair& pr, const double* x);  // w1^p w2^q

// Integrates over [t0, t1] (t0 <= 0 <= t1) from initial_state at t = 0.
// Negative tau is obtained by conjugating the |tau| solution.
TwistedSolution solve_w(const AdmissiblePair& pr, double tau, double t0, double t1,
                        const Tolerances& tol = {}, Augment aug = Augment::psi);

// max |w_{-tau}(t) - conj(w_tau(t))| over samples in [0, t_end], both sides integrated
// independently (no conjugation shortcut).
double conjugate_family_check(const AdmissiblePair& pr, double tau, double t_end, int samples,
                              const Tolerances& tol = {});

}  // namespace sltwist
