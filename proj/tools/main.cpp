#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <map>

#include "commands.hpp"

namespace {

void print_text(const cli::Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && j.front().is_structured()) {
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (j.is_number_float()) {
        os << prefix << " = " << sltwist::fmt17(j.get<double>()) << '\n';
    } else if (j.is_string()) {
        os << prefix << " = " << j.get<std::string>() << '\n';
    } else {
        os << prefix << " = " << j.dump() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted special Legendrian curves and their periods"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sltwist 0.3.0");

    cli::RunConfig cfg;
    std::optional<double> tau;
    std::optional<std::string> target;
    std::optional<double> window;

    const std::vector<std::string> names{"solve", "periods", "closure", "necklace", "torque",
                                         "asymptotics", "neck", "export", "verify"};
    const std::map<std::string, std::string> help{
        {"solve", "integrate w_tau over a window of periods"},
        {"periods", "partial, full and angular periods by quadrature and by integration"},
        {"closure", "rotational period, half-period type and tau for a rational target"},
        {"necklace", "closed curve with pthat = target(m)"},
        {"torque", "meridian flux of the diagonal generator and off-diagonal elements"},
        {"asymptotics", "small tau ratios against the leading-order laws"},
        {"neck", "rescale a waist and compare with the unit catenoid"},
        {"export", "write samples of w or a mesh of the (1,2) surface"},
        {"verify", "run the invariant suite; exit 1 if any check fails"}};

    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--p", cfg.p, "first exponent")->capture_default_str();
        sub->add_option("--q", cfg.q, "second exponent")->capture_default_str();
        sub->add_option("--tau", tau, "value of the conserved quantity");
        sub->add_option("--target", target, "angular period as a/b, meaning (a/b) pi");
        sub->add_option("--m", cfg.m, "necklace index")->capture_default_str();
        sub->add_option("--tol", cfg.tol, "fast, standard or strict")
            ->check(CLI::IsMember({"fast", "standard", "strict"}))
            ->capture_default_str();
        sub->add_flag("--json", cfg.json, "print JSON");
        sub->add_option("--out", cfg.out, "output file");
        sub->add_option("--format", cfg.format, "csv, json or obj")
            ->check(CLI::IsMember({"csv", "json", "obj"}))
            ->capture_default_str();
        sub->add_option("--samples", cfg.samples, "sample count")->capture_default_str();
        sub->add_option("--window", window, "half window (periods for solve/export, rescaled time for neck)");
        sub->add_option("--waist", cfg.waist, "waist index for neck")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.tau = tau;
    cfg.target = target;
    cfg.window = window;

    const std::string cmd = app.get_subcommands().front()->get_name();
    bool ok = true;
    cli::Json result;
    try {
        if (cmd == "solve") result = cli::cmd_solve(cfg);
        else if (cmd == "periods") result = cli::cmd_periods(cfg);
        else if (cmd == "closure") result = cli::cmd_closure(cfg);
        else if (cmd == "necklace") result = cli::cmd_necklace(cfg);
        else if (cmd == "torque") result = cli::cmd_torque(cfg);
        else if (cmd == "asymptotics") result = cli::cmd_asymptotics(cfg);
        else if (cmd == "neck") result = cli::cmd_neck(cfg);
        else if (cmd == "export") result = cli::cmd_export(cfg);
        else result = cli::cmd_verify(cfg, ok);
    } catch (const sltwist::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const sltwist::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }

    // export without --out streams the data itself on stdout
    std::ostream& os = (cmd == "export" && cfg.out.empty()) ? std::cerr : std::cout;
    if (cfg.json)
        os << result.dump(2) << '\n';
    else
        print_text(result, "", os);
    return ok ? 0 : 1;
}
