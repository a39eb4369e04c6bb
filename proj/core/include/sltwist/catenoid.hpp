#pragma once

#include <complex>

#include "sltwist/ode.hpp"

namespace sltwist {

struct CatenoidParams {
    int n = 3;
    double lambda = 1.0;

    void validate() const;
};

// w_lambda(t) = lambda^{1/n} w1(lambda^{1-2/n} t), w1' = conj(w1)^{n-1}, w1(0) = e^{i pi / 2n}.
// Integrates the unit profile once over the requested window and interpolates.
class CatenoidProfile {
public:
    CatenoidProfile(CatenoidParams params, double half_window, const Tolerances& tol = {});

    std::complex<double> operator()(double t) const;
    double half_window() const { return half_window_; }
    const CatenoidParams& params() const { return params_; }

private:
    CatenoidParams params_;
    double half_window_;
    double time_scale_;
    double size_;
    Trajectory unit_;
};

std::complex<double> catenoid_flow(const CatenoidParams& params, double t, const Tolerances& tol = {});

// T1 = int_1^inf dy / (2 sqrt(y^n - 1)) by tanh-sinh quadrature after y = u^{-1/n}.
double catenoid_lifetime_quadrature(int n);
// (1/(2n)) B(1/2 - 1/n, 1/2).
double catenoid_lifetime_beta(int n);
// sqrt(pi) Gamma(1/2 - 1/n) / (2 Gamma(-1/n)) exactly as printed; negative for every n >= 3.
double catenoid_lifetime_gamma_printed(int n);

// Beta form; throws ArgumentError for n < 3.
double catenoid_lifetime(int n);

struct CatenoidSymmetryReport {
    double residual;          // max |w1(-t) - e^{+i pi/n} conj(w1(t))|
    double residual_printed;  // same with e^{-i pi/n}
};

// Samples t uniformly on [-window, window]; window defaults to 0.9 T1 (n >= 3) or 5 (n = 2).
CatenoidSymmetryReport verify_catenoid_symmetry(int n, int samples, double window = 0.0,
                                                const Tolerances& tol = {});

}  // namespace sltwist
