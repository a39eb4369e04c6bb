#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sltwist {

struct Tolerances {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    double max_step = std::numeric_limits<double>::infinity();
    double event_tol = 1e-13;

    void validate() const;
};

// dx/dt = F(t, x); writes dim entries into dxdt.
using VectorField = std::function<void(double t, const double* x, double* dxdt)>;

// Scalar of (t, state), used for events.
using ScalarFn = std::function<double(double t, const double* x)>;

struct DriftRecord {
    std::string name;
    double max_deviation = 0.0;
};

// Piecewise quartic dense output of a Dormand-Prince 5(4) run.
// Steps may come from a forward and a backward sweep; lookup is by time.
class Trajectory {
public:
    Trajectory() = default;
    explicit Trajectory(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    bool empty() const { return steps_.empty(); }
    double t_min() const { return grid_.front(); }
    double t_max() const { return grid_.back(); }
    std::size_t step_count() const { return steps_.size(); }

    const std::vector<double>& time_grid() const { return grid_; }
    // Integrator state at grid node i (not interpolated).
    const double* node_state(std::size_t i) const { return &nodes_[i * dim_]; }

    void eval(double t, double* out) const;
    std::vector<double> operator()(double t) const;
    double component(double t, std::size_t k) const;

    const std::vector<DriftRecord>& drift() const { return drift_; }
    void record_drift(const std::string& name, double value);

    // Multiplies component k by factors[k]; exact for linear symmetries such as conjugation.
    Trajectory scaled(const std::vector<double>& factors) const;

    // Joins a backward sweep and a forward sweep sharing their initial point.
    static Trajectory join(const Trajectory& backward, const Trajectory& forward);

    struct Step {
        double t_origin;
        double h;
        std::size_t offset;  // into coef_, 5*dim entries
        double left() const { return h > 0 ? t_origin : t_origin + h; }
        double right() const { return h > 0 ? t_origin + h : t_origin; }
    };

private:
    friend class Dopri5;

    std::size_t find_step(double t) const;
    void finalize();

    std::size_t dim_ = 0;
    std::vector<Step> steps_;
    std::vector<double> coef_;
    std::vector<double> grid_;
    std::vector<double> nodes_;
    std::vector<DriftRecord> drift_;
};

// Adaptive DP5(4) from t0 to t1 (either direction).
// Throws NumericalError on step underflow or non-finite field values; the
// message reports the last time reached.
Trajectory integrate(const VectorField& field, const std::vector<double>& x0, double t0, double t1,
                     const Tolerances& tol = {});

// Integrates from t0 both down to ta and up to tb (ta <= t0 <= tb).
Trajectory integrate_two_sided(const VectorField& field, const std::vector<double>& x0, double t0,
                               double ta, double tb, const Tolerances& tol = {});

// Root of g along the interpolant inside [ta, tb] (either order).
// Bisection to event_tol, then one Newton step when dg is given.
// Throws NumericalError when g has no sign change on the bracket.
double locate_event(const Trajectory& traj, const ScalarFn& g, double ta, double tb,
                    double event_tol = 1e-13, const ScalarFn& dg = nullptr);

// First sign change of g strictly after t_from, scanning grid nodes towards t_to.
// If |g(t_from)| <= start_zero_tol the start is treated as a root and skipped.
std::optional<double> first_event(const Trajectory& traj, const ScalarFn& g, double t_from,
                                  double t_to, double event_tol = 1e-13,
                                  const ScalarFn& dg = nullptr, double start_zero_tol = 0.0);

}  // namespace sltwist
