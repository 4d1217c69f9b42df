#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dirac1d {

/// Solvers never search closer to the gap edges than m*(1 - kEdgeMargin):
/// rho and 1/rho diverge at |E| = m and no bound level attains the edge.
inline constexpr double kEdgeMargin = 1e-9;

/// Fermion mass; sets the energy scale, positions carry units 1/m.
class Mass {
  public:
    explicit Mass(double value);
    double value() const noexcept { return value_; }

  private:
    double value_;
};

/// One point interaction g_i * delta(x - r_i). The stored strength is the
/// signed coupling of the potential itself; attractive presets with
/// user-facing coupling g > 0 store strength -g.
struct DeltaCenter {
    double position;  // units 1/m
    double strength;  // dimensionless
};

/// Mass plus an ordered list of delta centers. Validation drops zero-strength
/// centers (a zero-strength delta is the identity interaction), then requires
/// at least one center and strictly increasing positions.
class BoundStateProblem {
  public:
    BoundStateProblem(Mass mass, std::vector<DeltaCenter> centers);

    const Mass& mass() const noexcept { return mass_; }
    const std::vector<DeltaCenter>& centers() const noexcept { return centers_; }
    std::size_t size() const noexcept { return centers_.size(); }

  private:
    Mass mass_;
    std::vector<DeltaCenter> centers_;
};

/// How the delta limit of a finite-width interaction is taken; fixes the
/// rotation angle of the one-center connection matrix.
enum class DeltaConvention {
    SqueezedRectangle,  // Theta = g; satisfies strength additivity
    CayleySelfAdjoint,  // Theta = 2*arctan(g/2); reproduces the Green's-function spectra
};

/// rho = sqrt((m-E)/(m+E)); parameterizes the decaying exterior solutions.
double rho_of(double energy, Mass m);

/// kappa = sqrt(m^2 - E^2); the exterior decay rate.
double kappa_of(double energy, Mass m);

/// X = (E/kappa) * g / (1 - g^2/4). Singular at g = +-2.
double x_variable(double energy, Mass m, double g);

/// rho, kappa and E bundled for one energy in the gap.
struct GapVariables {
    double energy;
    double rho;
    double kappa;

    static GapVariables at(double energy, Mass m);
};

/// The three rho-power combinations entering the triple-delta reductions:
/// p1 = 1/rho - rho, p2 = 1/rho^2 + rho^2, p3 = rho^3 - 1/rho^3.
/// They equal 2E/kappa, 2(1 + 2E^2/kappa^2), -2[3E/kappa + 4(E/kappa)^3].
struct RhoPowers {
    double p1;
    double p2;
    double p3;
};

RhoPowers rho_power_identities(double energy, Mass m);

/// One located bound level with solver metadata.
struct EnergyRoot {
    enum class Multiplicity { simple, touching };

    double energy = 0.0;
    double residual = 0.0;
    Multiplicity multiplicity = Multiplicity::simple;
    std::string method_tag;
    std::string branch;
};

/// Sorted container of bound levels inside the gap. Insertion keeps energies
/// strictly increasing: a root closer than the dedup window to an existing
/// one replaces it only if its residual is smaller.
class EnergySpectrum {
  public:
    EnergySpectrum() = default;

    void insert(EnergyRoot root, double dedup_window);

    const std::vector<EnergyRoot>& roots() const noexcept { return roots_; }
    std::size_t size() const noexcept { return roots_.size(); }
    bool empty() const noexcept { return roots_.empty(); }

  private:
    std::vector<EnergyRoot> roots_;
};

namespace detail {
/// Throws std::domain_error unless |E| < m.
void require_in_gap(double energy, Mass m, const char* where);
}  // namespace detail

}  // namespace dirac1d
