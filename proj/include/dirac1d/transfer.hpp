#pragma once

#include <optional>

#include "dirac1d/core.hpp"
#include "dirac1d/matrix2.hpp"
#include "dirac1d/rootfind.hpp"

namespace dirac1d {

/// Rotation angle of the one-center connection matrix for user-facing
/// attractive coupling g (potential -g*delta).
double theta_of(double g, DeltaConvention convention);

/// Real, unit-determinant 2x2 matrix linking two-sided spinor boundary
/// values across one delta center; always of rotation form.
struct ConnectionMatrix {
    Matrix2 matrix;
    DeltaConvention convention;
    double theta;
};

ConnectionMatrix delta_connection(double g, DeltaConvention convention);

/// Rotation by an arbitrary angle, for callers supplying their own Theta(g)
/// map from the one-parameter self-adjoint family.
Matrix2 rotation_connection(double theta);

/// Constant-potential slab: height V (units m), width l (units 1/m).
struct RectangularSegment {
    double height;
    double width;
};

/// gamma^2 = (V - E)^2 - m^2; negative in the evanescent regime.
double segment_gamma_squared(const RectangularSegment& seg, double energy, Mass m);

/// eta = sqrt(m - E + V)/sqrt(m + E - V), real only when (V-E)^2 < m^2;
/// reduces to rho at V = 0.
std::optional<double> segment_eta(const RectangularSegment& seg, double energy, Mass m);

/// Propagator of the Majorana-representation Dirac equation across the slab:
/// exp(l * [[0, m-E+V], [m+E-V, 0]]). Trigonometric entries when
/// (V-E)^2 > m^2, hyperbolic otherwise; unit determinant either way.
Matrix2 segment_matrix(const RectangularSegment& seg, double energy, Mass m);

/// Free-space propagator over a gap of length L:
/// [[cosh w, rho sinh w], [sinh(w)/rho, cosh w]], w = L*kappa.
Matrix2 free_gap_matrix(double length, double energy, Mass m);

/// Transfer matrix with overflow control: true transfer = matrix * e^{log_scale},
/// max-entry magnitude of the stored matrix kept <= 1.
struct ScaledTransfer {
    Matrix2 matrix;
    double log_scale = 0.0;
};

/// Right-to-left product of one-center connections interleaved with free-gap
/// propagators, renormalized after each factor (cosh overflows past mR ~ 350).
ScaledTransfer total_transfer(const BoundStateProblem& problem, double energy,
                              DeltaConvention convention);

/// The bound-state condition lambda12/rho^2 + (lambda11+lambda22)/rho + lambda21
/// evaluated on an explicit matrix.
double bound_state_residual(const Matrix2& lambda, double energy, Mass m);

/// Same condition on the scaled total transfer of a problem; the common
/// e^{log_scale} factor cancels in root location.
double bound_state_residual(const BoundStateProblem& problem, double energy,
                            DeltaConvention convention);

EnergySpectrum transfer_spectrum(const BoundStateProblem& problem, const SolverOptions& opts,
                                 DeltaConvention convention);

/// Real unit-determinant check (the chi = 0 realization of the self-adjoint
/// family), within 1e-12.
bool is_valid_connection(const Matrix2& matrix);

}  // namespace dirac1d
