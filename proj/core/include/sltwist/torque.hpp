#pragma once

#include <string>
#include <vector>

#include "sltwist/twisted.hpp"

namespace sltwist {

// An element of su(n): i diag(lambda) with sum lambda = 0, the rotation e_ij - e_ji,
// or the symmetric i (e_ij + e_ji).
struct SuBasisElement {
    enum class Kind { diagonal, rotation, symmetric };
    Kind kind = Kind::diagonal;
    std::vector<double> lambda;  // diagonal only, length n
    int i = 0;
    int j = 1;

    static SuBasisElement diag(std::vector<double> l);  // throws unless traceless
    static SuBasisElement rot(int i, int j);
    static SuBasisElement sym(int i, int j);
    // Generator of the diagonal family diag(e^{ix/p} Id_p, e^{-ix/q} Id_q).
    static SuBasisElement generator(const AdmissiblePair& pr);

    std::string name() const;
    bool is_diagonal() const { return kind == Kind::diagonal; }
};

// Every off-diagonal element R_ij, iS_ij for i < j.
std::vector<SuBasisElement> off_diagonal_basis(int n);

double sphere_volume(int k);  // Vol(S^{k-1}) in R^k; 1 for k = 1 (a single marked point)

struct SphereRule {
    int k;
    std::vector<std::vector<double>> nodes;  // angles
    std::vector<double> weights;
};

// Product Gauss-Legendre in the polar angles, trapezoid in the azimuth.
SphereRule sphere_rule(int k, int order = 24);

// max | sum w sigma_i^2 - Vol / k | and |sum w - Vol| for the rule.
double sphere_rule_defect(const SphereRule& r);

struct TorqueReport {
    std::string basis;
    double t0;
    double numeric;
    double closed_form;
    double abs_error;
};

// Flux of k X through the meridian {t0} x S^{p-1} x S^{q-1}.
TorqueReport torque(const TwistedSolution& sol, const SuBasisElement& k, double t0, int order = 24);

// 2 tau (sum lambda_i / p - sum mu_j / q) Vol Vol for diagonal k, zero otherwise.
double torque_closed_form(const AdmissiblePair& pr, double tau, const SuBasisElement& k);

}  // namespace sltwist
