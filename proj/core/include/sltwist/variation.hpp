#pragma once

#include <string>
#include <vector>

#include "sltwist/periods.hpp"

namespace sltwist {

// Solution of the rotationally invariant linearised equation phi'' = -2n |w'|^2 phi,
// normalised against q - n y by the Wronskian (q - n y) Q' + n y' Q = 1.
class LinearisedSolution {
public:
    LinearisedSolution(AdmissiblePair pr, double tau, double t0, PeriodData periods, double p_star,
                       Trajectory traj);

    const AdmissiblePair& pair() const { return pair_; }
    double tau() const { return tau_; }
    double t0() const { return t0_; }
    double p_star() const { return p_star_; }
    const PeriodData& periods() const { return periods_; }
    const Trajectory& trajectory() const { return traj_; }

    double Q(double t) const;
    double Qdot(double t) const;
    double y(double t) const;
    double ydot(double t) const;
    double wronskian(double t) const;
    // max |W - 1| over the integrator grid inside [-2 p_tau, 2 p_tau]
    double wronskian_drift() const { return wronskian_drift_; }

private:
    AdmissiblePair pair_;
    double tau_;
    double t0_;
    PeriodData periods_;
    double p_star_;
    Trajectory traj_;
    double wronskian_drift_ = 0;
};

// t0 = p_star (p = 1) or 0 (p > 1); n y'(t0) Q(t0) = 1, Q'(t0) = 0. Requires 0 < tau < tau_max.
LinearisedSolution solve_Q(const AdmissiblePair& pr, double tau, const Tolerances& tol = {});

double dpthat_dtau(const LinearisedSolution& lin);
double dpthat_dtau(const AdmissiblePair& pr, double tau, const Tolerances& tol = {});

struct DerivativeCheck {
    double formula;
    double finite_difference;
    double step;
    double rel_diff;
};

// Central difference of the quadrature angular period, h = max(1e-6, 1e-4 tau).
DerivativeCheck check_dpthat(const AdmissiblePair& pr, double tau, const Tolerances& tol = {});

// b_2 = 1/2; b_k = 4^{-1+1/k} int_1^inf dz / sqrt(z^k - 1) for k >= 3.
double b_constant(int k);
// Same integral through the Beta function.
double b_constant_beta(int k);
// The constant as printed in the source normalisation (b_2 = 1).
double b_constant_printed(int k);

// tau^{-1+2/k} for k > 2, log(1/tau) for k = 2.
double T_k(int k, double tau);

enum class Law { pt_plus, pt_minus, pt, pthat_excess, ymin, ymax_gap };

std::string law_name(Law law);
Law parse_law(const std::string& s);  // throws ArgumentError

struct AsymptoticsReport {
    double tau;
    double measured;
    double predicted;          // corrected constants
    double ratio;
    double predicted_printed;  // constants exactly as printed
    double ratio_printed;
    Law law;
};

// pt_minus is only defined for p > 1.
std::vector<AsymptoticsReport> check_asymptotics(const AdmissiblePair& pr,
                                                 const std::vector<double>& taus, Law law);

std::vector<Law> applicable_laws(const AdmissiblePair& pr);

}  // namespace sltwist
