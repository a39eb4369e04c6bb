#include "sltwist/catenoid.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "sltwist/errors.hpp"

namespace sltwist {

namespace {
constexpr double pi = boost::math::constants::pi<double>();
}

void CatenoidParams::validate() const {
    if (n < 2) throw ArgumentError("catenoid dimension must be at least 2");
    if (!(lambda > 0) || !std::isfinite(lambda)) throw ArgumentError("catenoid size must be positive");
}

double catenoid_lifetime_quadrature(int n) {
    if (n < 3) throw ArgumentError("lifetime is infinite for n < 3");
    // y = u^{-1/n}: integrand (1/2n) u^{-1/2-1/n} (1-u)^{-1/2} on (0, 1)
    const double a = -0.5 - 1.0 / n;
    // uc is b - u on the right half, which keeps 1 - u exact near u = 1
    auto f = [a](double u, double uc) { return std::pow(u, a) / std::sqrt(uc > 0 ? uc : 1.0 - u); };
    boost::math::quadrature::tanh_sinh<double> ts(15);
    double err = 0, l1 = 0;
    double v = ts.integrate(f, 0.0, 1.0, 1e-15, &err, &l1);
    return v / (2.0 * n);
}

double catenoid_lifetime_beta(int n) {
    if (n < 3) throw ArgumentError("lifetime is infinite for n < 3");
    return boost::math::beta(0.5 - 1.0 / n, 0.5) / (2.0 * n);
}

double catenoid_lifetime_gamma_printed(int n) {
    if (n < 3) throw ArgumentError("lifetime is infinite for n < 3");
    return std::sqrt(pi) * boost::math::tgamma(0.5 - 1.0 / n) / (2.0 * boost::math::tgamma(-1.0 / n));
}

double catenoid_lifetime(int n) { return catenoid_lifetime_beta(n); }

namespace {

VectorField catenoid_field(int n) {
    return [n](double, const double* x, double* dx) {
        std::complex<double> c(x[0], -x[1]), r(1.0, 0.0);
        for (int i = 0; i < n - 1; ++i) r *= c;
        dx[0] = r.real();
        dx[1] = r.imag();
    };
}

}  // namespace

CatenoidProfile::CatenoidProfile(CatenoidParams params, double half_window, const Tolerances& tol)
    : params_(params), half_window_(half_window) {
    params_.validate();
    if (!(half_window > 0)) throw ArgumentError("catenoid window must be positive");
    const int n = params_.n;
    time_scale_ = std::pow(params_.lambda, 1.0 - 2.0 / n);
    size_ = std::pow(params_.lambda, 1.0 / n);
    const double s = time_scale_ * half_window;
    if (n >= 3 && s >= catenoid_lifetime(n)) throw ArgumentError("time outside catenoid lifetime");
    auto w0 = std::polar(1.0, pi / (2.0 * n));
    unit_ = integrate_two_sided(catenoid_field(n), {w0.real(), w0.imag()}, 0.0, -s, s, tol);
}

std::complex<double> CatenoidProfile::operator()(double t) const {
    if (std::abs(t) > half_window_ * (1 + 1e-14)) throw ArgumentError("time outside profile window");
    double x[2];
    unit_.eval(time_scale_ * t, x);
    return size_ * std::complex<double>(x[0], x[1]);
}

std::complex<double> catenoid_flow(const CatenoidParams& params, double t, const Tolerances& tol) {
    params.validate();
    if (t == 0) return std::pow(params.lambda, 1.0 / params.n) * std::polar(1.0, pi / (2.0 * params.n));
    return CatenoidProfile(params, std::abs(t), tol)(t);
}

CatenoidSymmetryReport verify_catenoid_symmetry(int n, int samples, double window,
                                                const Tolerances& tol) {
    if (samples < 1) throw ArgumentError("need at least one sample");
    if (window <= 0) window = n >= 3 ? 0.9 * catenoid_lifetime(n) : 5.0;
    CatenoidProfile w({n, 1.0}, window, tol);
    const auto good = std::polar(1.0, pi / n), printed = std::polar(1.0, -pi / n);
    CatenoidSymmetryReport rep{0.0, 0.0};
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : -window + 2.0 * window * i / (samples - 1);
        auto a = w(-t), b = std::conj(w(t));
        rep.residual = std::max(rep.residual, std::abs(a - good * b));
        rep.residual_printed = std::max(rep.residual_printed, std::abs(a - printed * b));
    }
    return rep;
}

}  // namespace sltwist
