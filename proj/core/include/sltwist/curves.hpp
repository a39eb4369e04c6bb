#pragma once

#include "sltwist/immersion.hpp"

namespace sltwist {

// Explicit twisted contact stationary curve
//   w(t) = (cos c e^{i t cos^{p-2}c sin^q c}, sin c e^{-i t cos^p c sin^{q-2}c}),
// which satisfies conj(w1) w1' = -conj(w2) w2' = e^{i(a + b t)} conj(w1)^p conj(w2)^q with
// a = pi/2 and b = cos^{p-2}c sin^{q-2}c (p sin^2 c - q cos^2 c).
SphereState cs_curve(const AdmissiblePair& pr, double c, double t);
SphereState cs_curve_dot(const AdmissiblePair& pr, double c, double t);

// The same curve with the two exponent patterns exchanged, as it is sometimes printed:
// rates sin^p c cos^{q-2} c and sin^{p-2} c cos^q c.
SphereState cs_curve_swapped(const AdmissiblePair& pr, double c, double t);
SphereState cs_curve_swapped_dot(const AdmissiblePair& pr, double c, double t);

struct CsResidual {
    double a;
    double b;
    double b_swapped;         // sin^{p-2}c cos^{q-2}c (p sin^2 c - q cos^2 c)
    double residual;          // curve above, samples over t in [0, t_end]
    double residual_swapped;  // swapped exponents with a and b_swapped
    double legendre;          // analytic tangents
};

double cs_b(const AdmissiblePair& pr, double c);
CsResidual cs_residual(const AdmissiblePair& pr, double c, double t_end = 10.0, int samples = 200);

// Closed iff tan^2 c is rational; for tan^2 c = r / s (lowest terms) returns the period.
double cs_period(const AdmissiblePair& pr, double c, long r, long s);

// gamma_{m,n}(s) = (sqrt(n) e^{i s sqrt(m/n)}, i sqrt(m) e^{-i s sqrt(n/m)}) / sqrt(m+n).
SphereState hs_curve(int m, int n, double s);
SphereState hs_curve_dot(int m, int n, double s);

}  // namespace sltwist
