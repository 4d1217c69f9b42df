#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dirac1d/config.hpp"

namespace {

using namespace dirac1d;

constexpr int kExitConfigError = 1;
constexpr int kExitSolverError = 2;
constexpr int kExitAuditFailed = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw config_error("--format: expected csv or json");
}

class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw config_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of the 1D Dirac equation with multiple delta potentials"};
    app.require_subcommand(1);

    std::string config_path, output_path, format_name = "csv", figure_name;

    auto* solve = app.add_subcommand("solve", "Bound levels for one configuration");
    solve->add_option("--config", config_path, "JSON config file")->required();
    solve->add_option("--output", output_path, "Output path (default stdout)");
    solve->add_option("--format", format_name, "csv or json");

    auto* sweep = app.add_subcommand("sweep", "Parameter sweep over g or mR");
    sweep->add_option("--config", config_path, "JSON config file (with a sweep block)");
    sweep->add_option("--figure", figure_name,
                      "Built-in figure preset figure1a..figure4b (overrides --config)");
    sweep->add_option("--output", output_path, "Output path (default stdout)");
    sweep->add_option("--format", format_name, "csv or json");

    auto* audit = app.add_subcommand("audit", "Limit-law audit for a preset");
    audit->add_option("--config", config_path, "JSON config file")->required();
    audit->add_option("--output", output_path, "Output path (default stdout)");
    audit->add_option("--format", format_name, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        const OutputFormat format = parse_format(format_name);
        Sink sink(output_path);

        if (solve->parsed()) {
            const RunConfig cfg = parse_config(slurp(config_path));
            write_rows(sink.stream(), run_solve(cfg), format);
            return 0;
        }

        if (sweep->parsed()) {
            RunConfig cfg;
            SweepSpec spec;
            if (!figure_name.empty()) {
                const auto fig = figure_preset(figure_name);
                if (!fig) throw config_error("--figure: unknown name '" + figure_name + "'");
                cfg = fig->config;
                spec = fig->sweep;
                if (!config_path.empty()) {
                    // config may still override mass and solver settings
                    const RunConfig overrides = parse_config(slurp(config_path));
                    cfg.mass = overrides.mass;
                    cfg.params.m = overrides.mass;
                    cfg.solver = overrides.solver;
                }
            } else {
                if (config_path.empty())
                    throw config_error("sweep: need --config or --figure");
                cfg = parse_config(slurp(config_path));
                if (!cfg.sweep) throw config_error("sweep: config has no sweep block");
                spec = *cfg.sweep;
            }
            write_rows(sink.stream(), run_sweep(cfg, spec), format);
            return 0;
        }

        const RunConfig cfg = parse_config(slurp(config_path));
        const auto rows = run_audit(cfg);
        write_audit(sink.stream(), rows, format);
        const bool any_failed =
            std::any_of(rows.begin(), rows.end(), [](const AuditRow& r) { return !r.passed; });
        return any_failed ? kExitAuditFailed : 0;
    } catch (const config_error& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& err) {
        std::cerr << "solver error: " << err.what() << '\n';
        return kExitSolverError;
    }
}
