#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

namespace cli {

using namespace sltwist;

Tolerances RunConfig::tolerances() const {
    Tolerances t;
    if (tol == "fast") {
        t.abs_tol = t.rel_tol = 1e-9;
        t.event_tol = 1e-11;
    } else if (tol == "strict") {
        t.abs_tol = t.rel_tol = 1e-13;
        t.event_tol = 1e-14;
    } else if (tol != "standard") {
        throw ArgumentError("unknown tolerance preset: " + tol);
    }
    return t;
}

double RunConfig::need_tau() const {
    if (!tau) throw ArgumentError("--tau is required");
    if (target) throw ArgumentError("give either --tau or --target, not both");
    return *tau;
}

namespace {

Json drift_json(const Trajectory& tr) {
    Json j = Json::object();
    for (const auto& d : tr.drift()) j[d.name] = d.max_deviation;
    return j;
}

Json period_json(const PeriodData& d) { return Json::parse(period_data_json(d)); }

Json quadrature_json(const QuadraturePeriods& q) {
    return {{"p_plus", q.p_plus}, {"p_minus", q.p_minus}, {"p_tau", q.p_tau}, {"pthat", q.pthat},
            {"y_min", q.extrema.y_min}, {"y_max", q.extrema.y_max}};
}

RationalTarget need_target(const RunConfig& c) {
    if (!c.target) throw ArgumentError("--target is required");
    if (c.tau) throw ArgumentError("give either --tau or --target, not both");
    return RationalTarget::parse(*c.target);
}

std::ostream& open_out(const RunConfig& c, std::ofstream& file) {
    if (c.out.empty()) return std::cout;
    file.open(c.out);
    if (!file) throw ArgumentError("cannot open " + c.out);
    return file;
}

struct Check {
    Json& list;
    bool& ok;
    void operator()(const std::string& name, double value, double limit) {
        bool pass = std::isfinite(value) && value <= limit;
        ok = ok && pass;
        list.push_back({{"check", name}, {"value", value}, {"limit", limit}, {"pass", pass}});
    }
};

}  // namespace

Json cmd_solve(const RunConfig& c) {
    const auto pr = c.pair();
    const double tau = c.need_tau();
    const auto tol = c.tolerances();
    double half;
    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["tau"] = tau;
    j["tau_max"] = tau_max(pr);
    if (tau == 0) {
        half = c.window.value_or(10.0);
    } else {
        double pt = periods_quadrature(pr, tau).p_tau;
        half = c.window.value_or(10.0) * pt;
        j["p_tau"] = pt;
    }
    TwistedSolution sol = solve_w(pr, tau, -half, half, tol);
    j["t_min"] = sol.t_min();
    j["t_max"] = sol.t_max();
    j["steps"] = sol.trajectory().step_count();
    j["drift"] = drift_json(sol.trajectory());
    if (!c.out.empty()) {
        std::ofstream f;
        auto& os = open_out(c, f);
        auto fmt = parse_format(c.format);
        if (fmt == ExportFormat::csv)
            write_w_csv(os, sol, -half, half, c.samples);
        else if (fmt == ExportFormat::json)
            write_w_json(os, sol, -half, half, c.samples);
        else
            throw ArgumentError("solve writes csv or json; use export for obj");
        j["written"] = c.out;
    }
    return j;
}

Json cmd_periods(const RunConfig& c) {
    const auto pr = c.pair();
    const double tau = c.need_tau();
    auto qp = periods_quadrature(pr, tau);
    auto run = period_run(pr, tau, c.tolerances());
    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["tau"] = tau;
    j["quadrature"] = quadrature_json(qp);
    j["ode"] = period_json(run.data);
    if (pr.p == 1) j["ode"]["p_star"] = run.p_star;
    j["diff"] = {{"p_tau", std::abs(qp.p_tau - run.data.p_tau)},
                 {"p_plus", std::abs(qp.p_plus - run.data.p_plus)},
                 {"p_minus", std::abs(qp.p_minus - run.data.p_minus)},
                 {"pthat", std::abs(qp.pthat - run.data.pthat)}};
    j["drift"] = drift_json(run.solution.trajectory());
    return j;
}

Json cmd_closure(const RunConfig& c) {
    const auto pr = c.pair();
    const auto target = need_target(c);
    const auto tol = c.tolerances();
    auto rep = half_period_classification(pr, target);
    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["target"] = target.str();
    j["k0"] = rep.k0;
    j["per_generator"] = rep.per_generator;
    if (rep.half_period_type)
        j["half_period_type"] = {rep.half_period_type->j, rep.half_period_type->k};
    else
        j["half_period_type"] = nullptr;
    j["topology"] = rep.topology;
    auto search = search_tau_for_angular_period(pr, target, tol);
    j["scan"] = {{"pthat_min", search.scan_min}, {"pthat_max", search.scan_max}};
    if (search.roots.empty())
        throw NumericalError("no tau with pthat = " + target.str() + " pi; scanned pthat in [" +
                             fmt17(search.scan_min) + ", " + fmt17(search.scan_max) + "]");
    Json roots = Json::array();
    for (const auto& r : search.roots)
        roots.push_back({{"tau", r.tau}, {"pthat_quadrature", r.pthat_quadrature},
                         {"pthat_ode", r.pthat_ode}, {"residual", r.residual}});
    j["roots"] = roots;
    const double tau = search.roots.front().tau;
    auto cc = verify_closed(pr, tau, rep.k0, 20, tol);
    j["closure_residual"] = cc.closure_residual;
    j["one_period_residual"] = cc.one_period_residual;
    if (rep.half_period_type)
        j["half_period_residual"] = verify_half_period(pr, tau, rep.k0, *rep.half_period_type, 20, tol);
    return j;
}

Json cmd_necklace(const RunConfig& c) {
    const auto pr = c.pair();
    const auto tol = c.tolerances();
    auto nk = necklace(pr, c.m, tol);
    auto cc = verify_closed(pr, nk.solution.tau, nk.k0, 20, tol);
    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["m"] = nk.m;
    j["target"] = nk.target.str();
    j["tau"] = nk.solution.tau;
    j["k0"] = nk.k0;
    j["pthat"] = nk.solution.pthat_ode;
    j["pthat_residual"] = nk.solution.residual;
    j["closure_residual"] = cc.closure_residual;
    j["injectivity_gap"] = injectivity_gap(pr, nk.solution.tau, nk.k0, 1e-3, tol);
    j["m_scaling_ratio"] = nk.m_scaling_ratio;
    j["m_scaling_ratio_printed"] = nk.m_scaling_ratio_printed;
    return j;
}

Json cmd_torque(const RunConfig& c) {
    const auto pr = c.pair();
    const double tau = c.need_tau();
    double pt = periods_quadrature(pr, tau).p_tau;
    TwistedSolution sol = solve_w(pr, tau, -1.5 * pt, 1.5 * pt, c.tolerances());
    auto gen = SuBasisElement::generator(pr);
    auto a = torque(sol, gen, 0.0), b = torque(sol, gen, 0.5 * pt);
    double off = 0;
    for (const auto& k : off_diagonal_basis(pr.n())) off = std::max(off, std::abs(torque(sol, k, 0.0).numeric));
    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["tau"] = tau;
    j["generator"] = gen.name();
    j["flux"] = a.numeric;
    j["flux_second_meridian"] = b.numeric;
    j["closed_form"] = a.closed_form;
    j["abs_error"] = a.abs_error;
    j["max_off_diagonal"] = off;
    return j;
}

Json cmd_asymptotics(const RunConfig& c) {
    const auto pr = c.pair();
    std::vector<double> taus{1e-2, 1e-3, 1e-4};
    if (c.tau) taus = {*c.tau};
    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    Json laws = Json::array();
    for (auto law : applicable_laws(pr)) {
        for (const auto& r : check_asymptotics(pr, taus, law))
            laws.push_back({{"law", law_name(law)}, {"tau", r.tau}, {"measured", r.measured},
                            {"predicted", r.predicted}, {"ratio", r.ratio},
                            {"predicted_printed", r.predicted_printed}, {"ratio_printed", r.ratio_printed}});
    }
    j["laws"] = laws;
    return j;
}

Json cmd_neck(const RunConfig& c) {
    const auto pr = c.pair();
    const double tau = c.need_tau();
    auto nc = neck_rescale(pr, tau, c.waist, c.window.value_or(2.0), std::max(c.samples, 3), c.tolerances());
    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["tau"] = tau;
    j["waist_index"] = nc.waist_index;
    j["waist_type"] = nc.waist_type;
    j["catenoid_dim"] = nc.catenoid_dim;
    j["t_waist"] = nc.t_waist;
    j["beta"] = nc.beta;
    j["beta_extrema"] = nc.beta_extrema;
    j["det_W"] = nc.det_W;
    j["window"] = nc.window;
    j["max_error"] = nc.max_error;
    return j;
}

Json cmd_export(const RunConfig& c) {
    const auto pr = c.pair();
    const double tau = c.need_tau();
    const auto fmt = parse_format(c.format);
    const double pt = tau == 0 ? 1.0 : periods_quadrature(pr, tau).p_tau;
    const double half = c.window.value_or(1.0) * pt;
    TwistedSolution sol = solve_w(pr, tau, -half, half, c.tolerances());
    std::ofstream f;
    auto& os = open_out(c, f);
    Json j;
    j["format"] = c.format;
    j["t0"] = -half;
    j["t1"] = half;
    if (fmt == ExportFormat::csv) {
        write_w_csv(os, sol, -half, half, c.samples);
        j["rows"] = c.samples;
    } else if (fmt == ExportFormat::json) {
        write_w_json(os, sol, -half, half, c.samples);
        j["rows"] = c.samples;
    } else {
        auto st = write_obj(os, sol, -half, half, c.samples, 48);
        j["vertices"] = st.vertices;
        j["faces"] = st.faces;
    }
    if (!c.out.empty()) j["written"] = c.out;
    return j;
}

Json cmd_verify(const RunConfig& c, bool& ok) {
    const auto pr = c.pair();
    const double tau = c.need_tau();
    if (tau == 0) throw ArgumentError("verify needs tau != 0");
    const auto tol = c.tolerances();
    const int samples = std::max(c.samples, 2);
    ok = true;
    Json checks = Json::array();
    Check check{checks, ok};

    auto qp = periods_quadrature(pr, tau);
    auto run = period_run(pr, tau, tol);
    check("p_tau routes", std::abs(qp.p_tau - run.data.p_tau), 1e-8);
    check("p_plus routes", std::abs(qp.p_plus - run.data.p_plus), 1e-8);
    check("p_minus routes", std::abs(qp.p_minus - run.data.p_minus), 1e-8);

    TwistedSolution sol = solve_w(pr, tau, -10 * qp.p_tau, 10 * qp.p_tau, tol);
    check("I1 drift", sol.i1_drift(), 1e-9);
    check("I2 drift", sol.i2_drift(), 1e-9);
    check("energy", sol.energy_drift(), 1e-8);

    auto psi = verify_psi_constraint(pr, tau, samples, tol);
    check("psi constraint", psi.max_residual, 1e-8);
    check("psi range", psi.range_ok ? 0.0 : 1.0, 0.0);

    for (const auto& r : symmetry_residuals(pr, tau, samples, tol)) check("symmetry " + r.name, r.residual, 1e-8);

    const double at = std::abs(tau);
    auto lin = solve_Q(pr, at, tol);
    double wr = 0;
    for (int i = 0; i < 50; ++i) {
        double t = -2 * lin.periods().p_tau + 4 * lin.periods().p_tau * i / 49.0;
        wr = std::max(wr, std::abs(lin.wronskian(t) - 1.0));
    }
    check("wronskian", wr, 1e-8);
    check("dpthat/dtau", check_dpthat(pr, at, tol).rel_diff, 1e-6);

    TwistedSolution tsol = solve_w(pr, tau, -1.5 * qp.p_tau, 1.5 * qp.p_tau, tol);
    auto gen = SuBasisElement::generator(pr);
    auto a = torque(tsol, gen, 0.0), b = torque(tsol, gen, 0.5 * qp.p_tau);
    check("torque closed form", a.abs_error, 1e-8);
    check("torque meridians", std::abs(a.numeric - b.numeric), 1e-8);
    double off = 0;
    for (const auto& k : off_diagonal_basis(pr.n())) off = std::max(off, std::abs(torque(tsol, k, 0.0).numeric));
    check("torque off-diagonal", off, 1e-10);

    Json j;
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["tau"] = tau;
    j["checks"] = checks;
    j["ok"] = ok;
    return j;
}

}  // namespace cli
