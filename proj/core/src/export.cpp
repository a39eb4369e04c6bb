#include "sltwist/export.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "sltwist/errors.hpp"

namespace sltwist {

ExportFormat parse_format(const std::string& s) {
    if (s == "csv") return ExportFormat::csv;
    if (s == "json") return ExportFormat::json;
    if (s == "obj") return ExportFormat::obj;
    throw ArgumentError("unknown format: " + s);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void check_grid(double t0, double t1, int samples, const TwistedSolution& sol) {
    if (samples < 2) throw ArgumentError("need at least two samples");
    if (!(t1 > t0)) throw ArgumentError("export range must have t0 < t1");
    if (t0 < sol.t_min() || t1 > sol.t_max()) throw ArgumentError("export range outside the solution");
}

}  // namespace

void write_w_csv(std::ostream& os, const TwistedSolution& sol, double t0, double t1, int samples) {
    check_grid(t0, t1, samples, sol);
    os << "t,re_w1,im_w1,re_w2,im_w2\n";
    for (int i = 0; i < samples; ++i) {
        double t = i == samples - 1 ? t1 : t0 + (t1 - t0) * i / (samples - 1);
        SphereState w = sol.w(t);
        os << fmt17(t) << ',' << fmt17(w.w1.real()) << ',' << fmt17(w.w1.imag()) << ',' << fmt17(w.w2.real())
           << ',' << fmt17(w.w2.imag()) << '\n';
    }
}

void write_w_json(std::ostream& os, const TwistedSolution& sol, double t0, double t1, int samples) {
    check_grid(t0, t1, samples, sol);
    nlohmann::ordered_json j;
    j["p"] = sol.pair().p;
    j["q"] = sol.pair().q;
    j["tau"] = sol.tau();
    auto& rows = j["samples"] = nlohmann::ordered_json::array();
    for (int i = 0; i < samples; ++i) {
        double t = i == samples - 1 ? t1 : t0 + (t1 - t0) * i / (samples - 1);
        SphereState w = sol.w(t);
        rows.push_back({t, w.w1.real(), w.w1.imag(), w.w2.real(), w.w2.imag()});
    }
    os << j.dump(1) << '\n';
}

std::string period_data_json(const PeriodData& d) {
    nlohmann::ordered_json j;
    j["p_plus"] = d.p_plus;
    j["p_minus"] = d.p_minus;
    j["p_tau"] = d.p_tau;
    j["pthat"] = d.pthat;
    j["psi1_2p"] = d.psi1_2p;
    j["psi2_2p"] = d.psi2_2p;
    return j.dump();
}

PeriodData period_data_from_json(const std::string& s) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("bad PeriodData json: ") + e.what());
    }
    PeriodData d;
    try {
        d.p_plus = j.at("p_plus").get<double>();
        d.p_minus = j.at("p_minus").get<double>();
        d.p_tau = j.at("p_tau").get<double>();
        d.pthat = j.at("pthat").get<double>();
        d.psi1_2p = j.at("psi1_2p").get<double>();
        d.psi2_2p = j.at("psi2_2p").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("bad PeriodData json: ") + e.what());
    }
    return d;
}

ObjStats write_obj(std::ostream& os, const TwistedSolution& sol, double t0, double t1, int nt, int nphi) {
    if (sol.pair().p != 1 || sol.pair().q != 2) throw ArgumentError("obj export is only defined for (1,2)");
    check_grid(t0, t1, nt, sol);
    if (nphi < 3) throw ArgumentError("need at least three angular samples");
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < nt; ++i) {
        double t = i == nt - 1 ? t1 : t0 + (t1 - t0) * i / (nt - 1);
        SphereState w = sol.w(t);
        for (int j = 0; j < nphi; ++j) {
            double ph = 2 * pi * j / nphi;
            cplx z1 = w.w1, z2 = w.w2 * std::cos(ph), z3 = w.w2 * std::sin(ph);
            os << "v " << fmt17(z2.real() + 0.5 * z1.imag()) << ' ' << fmt17(z3.real() + 0.5 * z1.imag()) << ' '
               << fmt17(z1.real() + 0.5 * (z2.imag() + z3.imag())) << '\n';
        }
    }
    std::size_t faces = 0;
    for (int i = 0; i + 1 < nt; ++i)
        for (int j = 0; j < nphi; ++j) {
            int a = i * nphi + j + 1, b = i * nphi + (j + 1) % nphi + 1;
            os << "f " << a << ' ' << b << ' ' << b + nphi << ' ' << a + nphi << '\n';
            ++faces;
        }
    return {static_cast<std::size_t>(nt) * nphi, faces};
}

bool validate_obj(std::istream& is, ObjStats& stats) {
    stats = {0, 0};
    std::string line;
    bool faces_started = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            if (faces_started) return false;
            double x, y, z;
            if (!(ls >> x >> y >> z) || !std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) return false;
            ++stats.vertices;
        } else if (tag == "f") {
            faces_started = true;
            long idx;
            int count = 0;
            while (ls >> idx) {
                if (idx < 1 || static_cast<std::size_t>(idx) > stats.vertices) return false;
                ++count;
            }
            if (count < 3) return false;
            ++stats.faces;
        } else if (!tag.empty() && tag[0] != '#') {
            return false;
        }
    }
    return true;
}

}  // namespace sltwist
