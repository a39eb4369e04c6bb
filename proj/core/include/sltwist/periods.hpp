#pragma once

#include <limits>

#include "sltwist/twisted.hpp"

namespace sltwist {

struct PeriodData {
    double p_plus = 0;
    double p_minus = 0;
    double p_tau = 0;
    double pthat = 0;
    double psi1_2p = 0;
    double psi2_2p = 0;
};

// Both partial periods and the angular period by singular quadrature in y.
// For p = 1 the split point is also q/n: p_plus runs y_min -> q/n, p_minus q/n -> y_max.
struct QuadraturePeriods {
    double p_plus;
    double p_minus;
    double p_tau;
    double pthat;
    Extrema extrema;
};

QuadraturePeriods periods_quadrature(const AdmissiblePair& pr, double tau);

struct PeriodRun {
    PeriodData data;
    double p_star = std::numeric_limits<double>::quiet_NaN();  // p = 1: y(p_star) = q/n
    TwistedSolution solution;
};

// ODE route: extrema events on the trajectory and psi integrated alongside w.
// The returned solution covers [-span * p_tau, span * p_tau].
PeriodRun period_run(const AdmissiblePair& pr, double tau, const Tolerances& tol = {},
                     double span = 2.2, Augment aug = Augment::psi);

PeriodData period_ode(const AdmissiblePair& pr, double tau, const Tolerances& tol = {});

struct PsiConstraintReport {
    double max_residual;
    bool range_ok;  // Psi in (-pi/2, pi/2) for p = 1, Psi + alpha in (-pi, 0) for p > 1
};

PsiConstraintReport verify_psi_constraint(const AdmissiblePair& pr, double tau, int samples,
                                          const Tolerances& tol = {});

struct PthatLimit {
    double measured;      // pthat at tau near tau_max
    double tau_used;
    double candidate_small;  // pi sqrt(pq / (2n))
    double candidate_large;  // pi sqrt(2pq / n)
    bool matches_small;
};

// Limit of the angular period as tau -> tau_max, Richardson extrapolated in sqrt(tau_max - tau).
PthatLimit pthat_limit(const AdmissiblePair& pr);

}  // namespace sltwist
