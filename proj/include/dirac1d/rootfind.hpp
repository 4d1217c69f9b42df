#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dirac1d/core.hpp"

namespace dirac1d {

/// Knobs for the energy-gap root scan. tol_energy and edge_margin are
/// relative to the mass m; tol_residual and touching_threshold are relative
/// to the median |f| over the scan grid.
struct SolverOptions {
    int grid_points = 4001;
    double tol_energy = 1e-12;
    double tol_residual = 1e-10;
    int max_refinements = 3;
    double edge_margin = 1e-9;
    double touching_threshold = 1e-8;
    /// Algebraic upper bound on the root count when known (degree of the
    /// X-space polynomial). Gates grid refinement and the search for
    /// even-multiplicity roots that produce no sign change.
    std::optional<int> root_count_hint;
};

struct Bracket {
    enum class Kind { sign_change, touching_candidate };

    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
    Kind kind = Kind::sign_change;
};

/// One grid pass: nodes, values, brackets and the residual scale
/// (median of finite |f|) used by all relative tolerances.
struct ScanResult {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<Bracket> brackets;
    double scale = 1.0;
};

struct RootResult {
    double energy = 0.0;
    double residual = 0.0;
    EnergyRoot::Multiplicity multiplicity = EnergyRoot::Multiplicity::simple;
};

class solver_budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using RealFunction = std::function<double(double)>;

/// Uniform-grid evaluation of f on [lo, hi] with n points. Adjacent sign
/// changes become sign_change brackets; interior local minima of |f| below
/// touching_threshold*scale become touching_candidate brackets.
ScanResult scan_brackets(const RealFunction& f, double lo, double hi, int n,
                         const SolverOptions& opts);

/// Bisection for sign_change brackets (to tol_energy*m, tightened further
/// while the residual clears tol_residual*scale or the spacing floor is hit);
/// golden-section |f| minimization for touching candidates. Returns nothing
/// when the bracket turns out spurious (residual never clears tolerance).
std::optional<RootResult> refine_root(const RealFunction& f, const Bracket& bracket,
                                      const SolverOptions& opts, Mass m, double scale);

/// Scan + refine + dedup. Refinement halves the grid spacing while fewer
/// roots than root_count_hint are found, stopping early once two passes
/// agree; after that, the deepest remaining |f| dips are probed as touching
/// candidates (degenerate pairs split below grid resolution never produce a
/// sign change). Throws solver_budget_error when counts are still changing
/// at max_refinements or exceed the hint.
std::vector<RootResult> solve_all(const RealFunction& f, double lo, double hi,
                                  const SolverOptions& opts, Mass m);

}  // namespace dirac1d
