#pragma once

#include <optional>
#include <string>

#include "dirac1d/core.hpp"
#include "dirac1d/rootfind.hpp"

namespace dirac1d {

/// The five configurations treated in closed form. All use the attractive
/// sign headers: user coupling g > 0 maps to stored strength -g, the middle
/// center of the alternating triple and the right center of the dipole
/// carry +g.
enum class PresetKind {
    SingleDelta,
    DoubleSymmetric,
    Dipole,
    TripleSamePolarity,
    TripleAlternating,
};

const char* preset_name(PresetKind kind);
std::optional<PresetKind> preset_from_name(const std::string& name);

/// Dimensionless preset parameters; positions are derived as mR/m.
/// mR2 is ignored for N <= 2; the symmetric triples use mR1 = mR2 when a
/// single separation is given.
struct PresetParams {
    double g = 0.0;
    double mR1 = 0.0;
    double mR2 = 0.0;
    double m = 1.0;
};

BoundStateProblem make_problem(PresetKind kind, const PresetParams& params);

/// Single-center level: E = m cos(Theta) sign(sin Theta) with the
/// convention's Theta(g); absent when sin Theta = 0 (no bound state).
/// For Cayley and g > 0 this is m(4-g^2)/(4+g^2).
std::optional<double> single_energy(double g, Mass m, DeltaConvention convention);

enum class PmBranch { plus, minus };

/// Symmetric double residual, one +- branch at a time. Cayley is the exact
/// (1-g^2/4)kappa - g[E +- m e^{-2Rk}]; Squeeze is the cos(g)-multiplied
/// kappa cos g - sin g [E +- m e^{-2Rk}], finite across the tan poles with
/// the same roots. The plus branch is the ground state.
double double_symmetric_residual(double energy, double g, double R, Mass m,
                                 DeltaConvention convention, PmBranch branch);

/// Both dipole levels from the implicit E = +-m sqrt(c0 + c1 e^{-4Rk(E)})
/// (c0 = 1-A, c1 = A; A = 16g^2/(g^2+4)^2 for Cayley, sin^2 g for Squeeze),
/// by damped fixed-point iteration with a bisection fallback. Levels inside
/// the edge margin are excluded (annihilation limit).
EnergySpectrum dipole_energies(double g, double R, Mass m, DeltaConvention convention,
                               const SolverOptions& opts = {});

/// Coefficients of the same-polarity triple cubic G3 Y^3 + G2 Y^2 + G1 Y + G0,
/// in the variable Y = X (Cayley, weight g^2/(1-g^2/4)^2, singular at g = +-2)
/// or Y = E tan(g)/kappa (Squeeze, weight tan^2 g).
struct CubicCoefficients {
    double G0;
    double G1;
    double G2;
    double G3;
};

CubicCoefficients triple_same_coeffs(double energy, double g, double R1, double R2, Mass m,
                                     DeltaConvention convention);

/// The cubic evaluated at its own variable; root set = bound levels.
double triple_same_residual(double energy, double g, double R1, double R2, Mass m,
                            DeltaConvention convention);

/// The two factors of the alternating-triple equation: factor1 is the
/// decoupled single-center condition (X - 1, resp. E tan g/kappa - 1),
/// factor2 the symmetric pair (X^2 - D, resp. Y^2 t1 t2 - D).
struct AlternatingFactors {
    double factor1;
    double factor2;
};

AlternatingFactors triple_alternating_residuals(double energy, double g, double R1, double R2,
                                                Mass m, DeltaConvention convention);

/// Level after n identical attractive centers merge at a point:
/// m cos(n Theta) sign(sin n Theta). Additive under Squeeze
/// (= single_energy(n g)); the Cayley values are non-additive
/// closed forms of the rotation angle.
std::optional<double> merged_limit_energy(int n_centers, double g, Mass m,
                                          DeltaConvention convention);

/// Spectrum of a preset from its closed-form equations (branch-tagged roots,
/// polynomial-cleared residuals where the verbatim forms have poles).
EnergySpectrum closedform_spectrum(PresetKind kind, const PresetParams& params,
                                   DeltaConvention convention, const SolverOptions& opts = {});

}  // namespace dirac1d
