#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include <sltwist/sltwist.hpp>

namespace cli {

using Json = nlohmann::ordered_json;

struct RunConfig {
    int p = 1;
    int q = 2;
    std::optional<double> tau;
    std::optional<std::string> target;
    int m = 2;
    std::string tol = "standard";
    bool json = false;
    std::string out;
    std::string format = "csv";
    int samples = 200;
    std::optional<double> window;
    int waist = 1;

    sltwist::AdmissiblePair pair() const { return {p, q}; }
    sltwist::Tolerances tolerances() const;
    double need_tau() const;
};

// Every command fills a result object; verify also reports whether all checks held.
Json cmd_solve(const RunConfig& c);
Json cmd_periods(const RunConfig& c);
Json cmd_closure(const RunConfig& c);
Json cmd_necklace(const RunConfig& c);
Json cmd_torque(const RunConfig& c);
Json cmd_asymptotics(const RunConfig& c);
Json cmd_neck(const RunConfig& c);
Json cmd_export(const RunConfig& c);
Json cmd_verify(const RunConfig& c, bool& ok);

}  // namespace cli
