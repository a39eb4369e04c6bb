#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sltwist/periods.hpp"

namespace sltwist {

// The angle (num/den) pi, stored in lowest terms.
struct RationalTarget {
    std::int64_t num = 1;
    std::int64_t den = 2;

    RationalTarget() = default;
    RationalTarget(std::int64_t a, std::int64_t b);  // reduces; throws unless a, b > 0

    static RationalTarget parse(const std::string& s);  // "a/b" or "a"
    double angle() const;
    std::string str() const;
};

std::int64_t lcm_pair(const AdmissiblePair& pr);

// Order of the rotational period when pthat = target, exact integer arithmetic.
std::int64_t k0_from_target(const AdmissiblePair& pr, const RationalTarget& target);
// Direct minimum scan; nullopt beyond cap.
std::optional<std::int64_t> k0_brute_force(const AdmissiblePair& pr, const RationalTarget& target,
                                           std::int64_t cap = 1000000);

struct TauSolution {
    double tau;
    double pthat_quadrature;
    double pthat_ode;
    double residual;  // |pthat_ode - target|
};

struct TauSearch {
    std::vector<TauSolution> roots;  // one per sign-change bracket, increasing in tau
    double scan_min;                 // smallest pthat on the scan
    double scan_max;
};

// Geometric scan of the quadrature angular period on [1e-5, 0.999] tau_max, every bracket
// refined by TOMS 748, then checked on the ODE route. An explicit bracket restricts the scan.
TauSearch search_tau_for_angular_period(const AdmissiblePair& pr, const RationalTarget& target,
                                        const Tolerances& tol = {}, int scan_points = 200,
                                        std::optional<std::pair<double, double>> bracket = {});

// First root of the search; throws NumericalError when the target is not bracketed.
TauSolution find_tau_for_angular_period(const AdmissiblePair& pr, const RationalTarget& target,
                                        const Tolerances& tol = {},
                                        std::optional<std::pair<double, double>> bracket = {});

struct ClosureCheck {
    double p_tau;
    double pthat;
    double closure_residual;     // max |w(t + 2 k0 p_tau) - w(t)|
    double one_period_residual;  // max |w(t + 2 p_tau) - M_{2 pthat} w(t)|
};

ClosureCheck verify_closed(const AdmissiblePair& pr, double tau, std::int64_t k0, int samples = 20,
                           const Tolerances& tol = {});

// Diagonal phase matrix M_x = diag(e^{ix/p}, e^{-ix/q}) applied to w.
SphereState rotate_M(const AdmissiblePair& pr, double x, const SphereState& w);

struct HalfPeriodType {
    int j;  // sign (-1)^j on w1
    int k;  // sign (-1)^k on w2
};

struct ClosureReport {
    std::int64_t k0;
    bool k0_infinite = false;
    std::string per_generator;
    std::optional<HalfPeriodType> half_period_type;
    std::string topology;
};

ClosureReport half_period_classification(const AdmissiblePair& pr, const RationalTarget& target);

// max |w(t + k0 p_tau) - rho_{jk} w(t)| over samples in [0, 2 p_tau].
double verify_half_period(const AdmissiblePair& pr, double tau, std::int64_t k0,
                          const HalfPeriodType& type, int samples = 20, const Tolerances& tol = {});

// Smallest |w(t) - w(0)| on a grid of spacing dt over (0, 2 k0 p_tau), skipping 0.05 p_tau
// around both ends.
double injectivity_gap(const AdmissiblePair& pr, double tau, std::int64_t k0, double dt = 1e-3,
                       const Tolerances& tol = {});

struct Necklace {
    int m;
    RationalTarget target;
    std::int64_t k0;
    TauSolution solution;
    double m_scaling_ratio;          // m tau T / c with the corrected constant
    double m_scaling_ratio_printed;  // same with the printed constant
};

// p = 1: ((n-1)m / (2(n-1)m - 1)) pi; p = q: (pm / (2pm - 1)) pi.
RationalTarget necklace_target(const AdmissiblePair& pr, int m);
Necklace necklace(const AdmissiblePair& pr, int m, const Tolerances& tol = {});

}  // namespace sltwist
