#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirac1d/closedform.hpp"
#include "dirac1d/core.hpp"
#include "dirac1d/rootfind.hpp"

namespace dirac1d {

class config_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Method { greens, transfer, closedform };

const char* method_name(Method method);

/// Linear grid over the coupling g or the separation mR; the other parameter
/// is fixed by the RunConfig. mR starts at 0 are replaced by 1e-6 (coincident
/// centers are a validation error; the merged values appear as marker rows).
struct SweepSpec {
    enum class Axis { coupling, distance };

    Axis axis = Axis::coupling;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    std::vector<double> grid() const;
};

/// Everything one run needs: a preset (or explicit centers), the methods to
/// apply, the convention for the transfer/closed-form side, solver knobs.
struct RunConfig {
    std::optional<PresetKind> preset;
    PresetParams params;
    std::vector<DeltaCenter> centers;  // used when no preset is given
    double mass = 1.0;
    std::vector<Method> methods;
    DeltaConvention convention = DeltaConvention::CayleySelfAdjoint;
    SolverOptions solver;
    std::optional<SweepSpec> sweep;

    BoundStateProblem problem() const;
    std::string preset_label() const;
};

/// One output row; optional fields print empty in CSV.
struct ResultRow {
    std::string preset;
    std::optional<double> g;
    std::optional<double> mr1;
    std::optional<double> mr2;
    std::string method;
    std::string convention;
    std::string branch;
    std::optional<double> e_over_m;
    std::optional<double> residual;
    std::string status = "ok";
};

struct AuditRow {
    std::string check;
    std::string preset;
    std::string convention;
    double g = 0.0;
    std::optional<double> mr;
    std::optional<double> expected;
    std::optional<double> measured;
    std::optional<double> deviation;
    double tolerance = 0.0;
    bool passed = false;
};

RunConfig parse_config(const std::string& json_text);

/// One row per (method, root) for the configured problem.
std::vector<ResultRow> run_solve(const RunConfig& cfg);

/// Rows ordered by axis value, then method, then energy; per-point failures
/// become status rows and the sweep continues. Points are evaluated in
/// parallel and gathered in axis order.
std::vector<ResultRow> run_sweep(const RunConfig& cfg, const SweepSpec& sweep);

/// Bundled figure sweeps: panel (a) presets sweep
/// g over [0, pi] with 629 points at mR = 1, panel (b) sweeps mR over (0, 5]
/// with 500 points at g = 1.5.
struct FigurePreset {
    RunConfig config;
    SweepSpec sweep;
};

std::optional<FigurePreset> figure_preset(const std::string& name);

/// Limit-law audit for the configured preset: additivity (or the Cayley
/// merged values) at mR = 1e-6, far separation at mR = 20, dipole
/// annihilation, decoupled-level constancy.
std::vector<AuditRow> run_audit(const RunConfig& cfg);

enum class OutputFormat { csv, json };

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows, OutputFormat format);
void write_audit(std::ostream& out, const std::vector<AuditRow>& rows, OutputFormat format);

}  // namespace dirac1d
