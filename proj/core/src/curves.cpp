#include "sltwist/curves.hpp"

#include <cmath>
#include <numeric>

#include "sltwist/errors.hpp"

namespace sltwist {

namespace {

constexpr double pi = 3.14159265358979323846;

void check_c(double c) {
    if (!(c > 0 && c < pi / 2)) throw ArgumentError("cs curve needs 0 < c < pi/2");
}

struct Rates {
    double w1, w2;
};

Rates rates(const AdmissiblePair& pr, double c, bool swapped) {
    check_c(c);
    const double co = std::cos(c), si = std::sin(c);
    if (swapped) return {std::pow(si, pr.p) * std::pow(co, pr.q - 2), std::pow(si, pr.p - 2) * std::pow(co, pr.q)};
    return {std::pow(co, pr.p - 2) * std::pow(si, pr.q), std::pow(co, pr.p) * std::pow(si, pr.q - 2)};
}

SphereState curve_at(const AdmissiblePair& pr, double c, double t, bool swapped) {
    Rates r = rates(pr, c, swapped);
    return {std::cos(c) * std::polar(1.0, r.w1 * t), std::sin(c) * std::polar(1.0, -r.w2 * t)};
}

SphereState curve_dot(const AdmissiblePair& pr, double c, double t, bool swapped) {
    Rates r = rates(pr, c, swapped);
    SphereState w = curve_at(pr, c, t, swapped);
    return {cplx(0, r.w1) * w.w1, cplx(0, -r.w2) * w.w2};
}

double cs_equation_residual(const AdmissiblePair& pr, double a, double b, const SphereState& w,
                            const SphereState& wd, double t) {
    cplx rhs = std::polar(1.0, a + b * t) * ipow(std::conj(w.w1), pr.p) * ipow(std::conj(w.w2), pr.q);
    return std::max(std::abs(std::conj(w.w1) * wd.w1 - rhs), std::abs(-std::conj(w.w2) * wd.w2 - rhs));
}

}  // namespace

SphereState cs_curve(const AdmissiblePair& pr, double c, double t) { return curve_at(pr, c, t, false); }
SphereState cs_curve_dot(const AdmissiblePair& pr, double c, double t) { return curve_dot(pr, c, t, false); }
SphereState cs_curve_swapped(const AdmissiblePair& pr, double c, double t) { return curve_at(pr, c, t, true); }
SphereState cs_curve_swapped_dot(const AdmissiblePair& pr, double c, double t) {
    return curve_dot(pr, c, t, true);
}

double cs_b(const AdmissiblePair& pr, double c) {
    check_c(c);
    const double co = std::cos(c), si = std::sin(c);
    return std::pow(co, pr.p - 2) * std::pow(si, pr.q - 2) * (pr.p * si * si - pr.q * co * co);
}

CsResidual cs_residual(const AdmissiblePair& pr, double c, double t_end, int samples) {
    if (samples < 1) throw ArgumentError("need at least one sample");
    CsResidual r{};
    const double co = std::cos(c), si = std::sin(c);
    r.a = pi / 2;
    r.b = cs_b(pr, c);
    r.b_swapped = std::pow(si, pr.p - 2) * std::pow(co, pr.q - 2) * (pr.p * si * si - pr.q * co * co);
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : t_end * i / (samples - 1);
        SphereState w = cs_curve(pr, c, t), wd = cs_curve_dot(pr, c, t);
        r.residual = std::max(r.residual, cs_equation_residual(pr, r.a, r.b, w, wd, t));
        r.residual_swapped =
            std::max(r.residual_swapped, cs_equation_residual(pr, r.a, r.b_swapped, cs_curve_swapped(pr, c, t),
                                                              cs_curve_swapped_dot(pr, c, t), t));
        cplx h = std::conj(w.w1) * wd.w1 + std::conj(w.w2) * wd.w2;
        r.legendre = std::max(r.legendre, std::abs(h.imag()) / std::sqrt(std::norm(wd.w1) + std::norm(wd.w2)));
    }
    return r;
}

double cs_period(const AdmissiblePair& pr, double c, long r, long s) {
    if (r <= 0 || s <= 0) throw ArgumentError("tan^2 c = r/s needs positive r, s");
    const double t2 = std::tan(c) * std::tan(c), rs = double(r) / double(s);
    if (std::abs(t2 - rs) > 1e-12 * std::max(1.0, rs)) throw ArgumentError("tan^2 c differs from r/s");
    Rates w = rates(pr, c, false);
    return 2 * pi * (s / std::gcd(r, s)) / w.w2;
}

SphereState hs_curve(int m, int n, double s) {
    if (m < 1 || n < 1) throw ArgumentError("hs curve needs positive m, n");
    const double k = 1.0 / std::sqrt(double(m + n));
    return {k * std::sqrt(double(n)) * std::polar(1.0, s * std::sqrt(double(m) / n)),
            k * cplx(0, std::sqrt(double(m))) * std::polar(1.0, -s * std::sqrt(double(n) / m))};
}

SphereState hs_curve_dot(int m, int n, double s) {
    if (m < 1 || n < 1) throw ArgumentError("hs curve needs positive m, n");
    const double k = 1.0 / std::sqrt(double(m + n));
    return {k * cplx(0, std::sqrt(double(m))) * std::polar(1.0, s * std::sqrt(double(m) / n)),
            k * std::sqrt(double(n)) * std::polar(1.0, -s * std::sqrt(double(n) / m))};
}

}  // namespace sltwist
