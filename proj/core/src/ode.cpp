#include "sltwist/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sltwist/errors.hpp"

namespace sltwist {

void Tolerances::validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0) || !(max_step > 0) || !(event_tol > 0))
        throw ArgumentError("tolerances must be strictly positive");
    if (event_tol > abs_tol) throw ArgumentError("event_tol must not exceed abs_tol");
}

namespace {

// Dormand-Prince 5(4) tableau with Hairer's dense output coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace

class Dopri5 {
public:
    Dopri5(const VectorField& f, std::size_t dim, const Tolerances& tol)
        : f_(f), n_(dim), tol_(tol), k1_(dim), k2_(dim), k3_(dim), k4_(dim), k5_(dim), k6_(dim),
          k7_(dim), y1_(dim), tmp_(dim) {}

    Trajectory run(const std::vector<double>& x0, double t0, double t1) {
        Trajectory out(n_);
        std::vector<double> y = x0;
        double t = t0;
        const double dir = t1 > t0 ? 1.0 : -1.0;
        eval(t, y.data(), k1_.data());
        double h = dir * initial_step(t, y, dir);
        double facold = 1e-4;
        bool last = false;
        int rejects_in_row = 0;
        while (!last) {
            if (dir * (t + h - t1) >= 0) {
                h = t1 - t;
                last = true;
            }
            if (std::abs(h) <= 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
                fail("step size underflow", t);
            double err = attempt(t, y, h);
            if (!std::isfinite(err)) {
                last = false;
                h *= 0.25;
                if (++rejects_in_row > 60) fail("non-finite field evaluation", t);
                continue;
            }
            const double expo1 = 0.2 - 0.04 * 0.75;
            double fac11 = std::pow(err, expo1);
            if (err <= 1.0) {
                rejects_in_row = 0;
                double fac = fac11 / std::pow(facold, 0.04);
                fac = std::clamp(fac / 0.9, 0.1, 5.0);
                facold = std::max(err, 1e-4);
                store(out, t, y, h);
                t = last ? t1 : t + h;
                y = y1_;
                std::swap(k1_, k7_);
                double hnew = h / fac;
                if (std::abs(hnew) > tol_.max_step) hnew = dir * tol_.max_step;
                h = hnew;
            } else {
                last = false;
                h = h / std::min(5.0, fac11 / 0.9);
                if (++rejects_in_row > 200) fail("repeated step rejection", t);
            }
        }
        out.finalize();
        return out;
    }

private:
    [[noreturn]] void fail(const char* what, double t) const {
        std::ostringstream os;
        os.precision(17);
        os << what << "; last reachable time " << t;
        throw NumericalError(os.str());
    }

    void eval(double t, const double* x, double* dx) {
        f_(t, x, dx);
        for (std::size_t i = 0; i < n_; ++i)
            if (!std::isfinite(dx[i])) {
                dx[0] = std::numeric_limits<double>::quiet_NaN();
                return;
            }
    }

    double initial_step(double t, const std::vector<double>& y, double dir) {
        double dnf = 0, dny = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            double sk = tol_.abs_tol + tol_.rel_tol * std::abs(y[i]);
            dnf += (k1_[i] / sk) * (k1_[i] / sk);
            dny += (y[i] / sk) * (y[i] / sk);
        }
        double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : std::sqrt(dny / dnf) * 0.01;
        h = std::min(h, tol_.max_step);
        for (std::size_t i = 0; i < n_; ++i) tmp_[i] = y[i] + dir * h * k1_[i];
        eval(t + dir * h, tmp_.data(), k2_.data());
        double der2 = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            double sk = tol_.abs_tol + tol_.rel_tol * std::abs(y[i]);
            der2 += ((k2_[i] - k1_[i]) / sk) * ((k2_[i] - k1_[i]) / sk);
        }
        if (!std::isfinite(der2)) return 1e-6;
        der2 = std::sqrt(der2) / h;
        double der12 = std::max(der2, std::sqrt(dnf));
        double h1 = der12 <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / der12, 0.2);
        return std::min({100 * h, h1, tol_.max_step});
    }

    double attempt(double t, const std::vector<double>& y, double h) {
        const std::size_t n = n_;
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * a21 * k1_[i];
        eval(t + c2 * h, tmp_.data(), k2_.data());
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * (a31 * k1_[i] + a32 * k2_[i]);
        eval(t + c3 * h, tmp_.data(), k3_.data());
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + h * (a41 * k1_[i] + a42 * k2_[i] + a43 * k3_[i]);
        eval(t + c4 * h, tmp_.data(), k4_.data());
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + h * (a51 * k1_[i] + a52 * k2_[i] + a53 * k3_[i] + a54 * k4_[i]);
        eval(t + c5 * h, tmp_.data(), k5_.data());
        for (std::size_t i = 0; i < n; ++i)
            tmp_[i] = y[i] + h * (a61 * k1_[i] + a62 * k2_[i] + a63 * k3_[i] + a64 * k4_[i] +
                                  a65 * k5_[i]);
        eval(t + h, tmp_.data(), k6_.data());
        for (std::size_t i = 0; i < n; ++i)
            y1_[i] = y[i] + h * (a71 * k1_[i] + a73 * k3_[i] + a74 * k4_[i] + a75 * k5_[i] +
                                 a76 * k6_[i]);
        eval(t + h, y1_.data(), k7_.data());
        double err = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double e = h * (e1 * k1_[i] + e3 * k3_[i] + e4 * k4_[i] + e5 * k5_[i] + e6 * k6_[i] +
                            e7 * k7_[i]);
            double sk = tol_.abs_tol + tol_.rel_tol * std::max(std::abs(y[i]), std::abs(y1_[i]));
            err += (e / sk) * (e / sk);
        }
        return std::sqrt(err / static_cast<double>(n));
    }

    void store(Trajectory& out, double t, const std::vector<double>& y, double h) {
        const std::size_t n = n_;
        Trajectory::Step s{t, h, out.coef_.size()};
        out.coef_.resize(out.coef_.size() + 5 * n);
        double* r = &out.coef_[s.offset];
        for (std::size_t i = 0; i < n; ++i) {
            double ydiff = y1_[i] - y[i];
            double bspl = h * k1_[i] - ydiff;
            r[i] = y[i];
            r[n + i] = ydiff;
            r[2 * n + i] = bspl;
            r[3 * n + i] = ydiff - h * k7_[i] - bspl;
            r[4 * n + i] = h * (d1 * k1_[i] + d3 * k3_[i] + d4 * k4_[i] + d5 * k5_[i] +
                                d6 * k6_[i] + d7 * k7_[i]);
        }
        out.steps_.push_back(s);
    }

    const VectorField& f_;
    std::size_t n_;
    Tolerances tol_;
    std::vector<double> k1_, k2_, k3_, k4_, k5_, k6_, k7_, y1_, tmp_;
};

void Trajectory::finalize() {
    std::sort(steps_.begin(), steps_.end(),
              [](const Step& a, const Step& b) { return a.left() < b.left(); });
    grid_.clear();
    nodes_.clear();
    std::vector<double> buf(dim_);
    for (const Step& s : steps_) {
        grid_.push_back(s.left());
        eval(s.left(), buf.data());
        nodes_.insert(nodes_.end(), buf.begin(), buf.end());
    }
    if (!steps_.empty()) {
        grid_.push_back(steps_.back().right());
        eval(steps_.back().right(), buf.data());
        nodes_.insert(nodes_.end(), buf.begin(), buf.end());
    }
}

std::size_t Trajectory::find_step(double t) const {
    auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                               [](double v, const Step& s) { return v < s.left(); });
    if (it == steps_.begin()) return 0;
    return static_cast<std::size_t>(it - steps_.begin()) - 1;
}

void Trajectory::eval(double t, double* out) const {
    if (steps_.empty()) throw NumericalError("evaluating an empty trajectory");
    const double span = std::max(1.0, std::abs(grid_.empty() ? t : grid_.back()));
    if (!grid_.empty() && (t < grid_.front() - 1e-12 * span || t > grid_.back() + 1e-12 * span)) {
        std::ostringstream os;
        os.precision(17);
        os << "time " << t << " outside trajectory span [" << grid_.front() << ", "
           << grid_.back() << "]";
        throw NumericalError(os.str());
    }
    const Step& s = steps_[find_step(t)];
    const double th = (t - s.t_origin) / s.h;
    const double th1 = 1.0 - th;
    const double* r = &coef_[s.offset];
    const std::size_t n = dim_;
    for (std::size_t i = 0; i < n; ++i)
        out[i] = r[i] + th * (r[n + i] + th1 * (r[2 * n + i] + th * (r[3 * n + i] + th1 * r[4 * n + i])));
}

std::vector<double> Trajectory::operator()(double t) const {
    std::vector<double> v(dim_);
    eval(t, v.data());
    return v;
}

double Trajectory::component(double t, std::size_t k) const {
    std::vector<double> v(dim_);
    eval(t, v.data());
    return v[k];
}

void Trajectory::record_drift(const std::string& name, double value) {
    value = std::abs(value);
    for (auto& d : drift_)
        if (d.name == name) {
            d.max_deviation = std::max(d.max_deviation, value);
            return;
        }
    drift_.push_back({name, value});
}

Trajectory Trajectory::scaled(const std::vector<double>& factors) const {
    if (factors.size() != dim_) throw ArgumentError("scale vector has wrong length");
    Trajectory r = *this;
    for (const Step& s : r.steps_)
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t i = 0; i < dim_; ++i) r.coef_[s.offset + j * dim_ + i] *= factors[i];
    for (std::size_t k = 0; k < r.grid_.size(); ++k)
        for (std::size_t i = 0; i < dim_; ++i) r.nodes_[k * dim_ + i] *= factors[i];
    return r;
}

Trajectory Trajectory::join(const Trajectory& backward, const Trajectory& forward) {
    if (backward.dim_ != forward.dim_) throw ArgumentError("joining trajectories of different dimension");
    Trajectory r(forward.dim_);
    for (const Trajectory* part : {&backward, &forward}) {
        const std::size_t base = r.coef_.size();
        r.coef_.insert(r.coef_.end(), part->coef_.begin(), part->coef_.end());
        for (Step s : part->steps_) {
            s.offset += base;
            r.steps_.push_back(s);
        }
    }
    r.finalize();
    return r;
}

Trajectory integrate(const VectorField& field, const std::vector<double>& x0, double t0, double t1,
                     const Tolerances& tol) {
    tol.validate();
    if (x0.empty()) throw ArgumentError("empty initial state");
    if (!(t1 != t0) || !std::isfinite(t0) || !std::isfinite(t1))
        throw ArgumentError("integration span must be finite and non-empty");
    Dopri5 solver(field, x0.size(), tol);
    return solver.run(x0, t0, t1);
}

Trajectory integrate_two_sided(const VectorField& field, const std::vector<double>& x0, double t0,
                               double ta, double tb, const Tolerances& tol) {
    if (ta > t0 || tb < t0) throw ArgumentError("two-sided span must contain the initial time");
    if (ta == t0) return integrate(field, x0, t0, tb, tol);
    if (tb == t0) return integrate(field, x0, t0, ta, tol);
    return Trajectory::join(integrate(field, x0, t0, ta, tol), integrate(field, x0, t0, tb, tol));
}

namespace {

double g_at(const Trajectory& traj, const ScalarFn& g, double t, std::vector<double>& buf) {
    traj.eval(t, buf.data());
    return g(t, buf.data());
}

}  // namespace

double locate_event(const Trajectory& traj, const ScalarFn& g, double ta, double tb,
                    double event_tol, const ScalarFn& dg) {
    std::vector<double> buf(traj.dim());
    double lo = std::min(ta, tb), hi = std::max(ta, tb);
    double glo = g_at(traj, g, lo, buf), ghi = g_at(traj, g, hi, buf);
    if (glo == 0) return lo;
    if (ghi == 0) return hi;
    if ((glo > 0) == (ghi > 0)) throw NumericalError("event function has no sign change in bracket");
    for (int it = 0; it < 200 && hi - lo > event_tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double gm = g_at(traj, g, mid, buf);
        if (gm == 0) return mid;
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    double t = 0.5 * (lo + hi);
    if (dg) {
        traj.eval(t, buf.data());
        double gv = g(t, buf.data()), dv = dg(t, buf.data());
        if (dv != 0 && std::isfinite(dv)) {
            double tn = t - gv / dv;
            if (tn >= lo - event_tol && tn <= hi + event_tol &&
                std::abs(g_at(traj, g, tn, buf)) <= std::abs(gv))
                t = tn;
        }
    }
    return t;
}

std::optional<double> first_event(const Trajectory& traj, const ScalarFn& g, double t_from,
                                  double t_to, double event_tol, const ScalarFn& dg,
                                  double start_zero_tol) {
    const auto& grid = traj.time_grid();
    std::vector<double> buf(traj.dim());
    const bool fwd = t_to > t_from;
    std::vector<double> pts;
    if (fwd) {
        auto it = std::upper_bound(grid.begin(), grid.end(), t_from);
        for (; it != grid.end() && *it < t_to; ++it) pts.push_back(*it);
    } else {
        auto it = std::lower_bound(grid.begin(), grid.end(), t_from);
        while (it != grid.begin()) {
            --it;
            if (*it <= t_to) break;
            pts.push_back(*it);
        }
    }
    pts.push_back(t_to);
    double prev_t = t_from;
    double prev_g = g_at(traj, g, t_from, buf);
    std::size_t start = 0;
    if (std::abs(prev_g) <= start_zero_tol) {
        prev_t = pts[0];
        prev_g = g_at(traj, g, prev_t, buf);
        start = 1;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
        double gi = g_at(traj, g, pts[i], buf);
        if (gi == 0 || (gi > 0) != (prev_g > 0)) return locate_event(traj, g, prev_t, pts[i], event_tol, dg);
        prev_t = pts[i];
        prev_g = gi;
    }
    return std::nullopt;
}

}  // namespace sltwist
