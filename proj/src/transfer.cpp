#include "dirac1d/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac1d {

double theta_of(double g, DeltaConvention convention) {
    switch (convention) {
        case DeltaConvention::SqueezedRectangle: return g;
        case DeltaConvention::CayleySelfAdjoint: return 2.0 * std::atan(g / 2.0);
    }
    throw std::logic_error("theta_of: unknown convention");
}

ConnectionMatrix delta_connection(double g, DeltaConvention convention) {
    if (!std::isfinite(g)) throw std::invalid_argument("delta_connection: g must be finite");
    const double theta = theta_of(g, convention);
    return {Matrix2::rotation(theta), convention, theta};
}

Matrix2 rotation_connection(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("rotation_connection: theta must be finite");
    return Matrix2::rotation(theta);
}

double segment_gamma_squared(const RectangularSegment& seg, double energy, Mass m) {
    const double d = seg.height - energy;
    return d * d - m.value() * m.value();
}

std::optional<double> segment_eta(const RectangularSegment& seg, double energy, Mass m) {
    const double a = m.value() - energy + seg.height;
    const double b = m.value() + energy - seg.height;
    if (a < 0.0 || b <= 0.0) return std::nullopt;
    return std::sqrt(a) / std::sqrt(b);
}

Matrix2 segment_matrix(const RectangularSegment& seg, double energy, Mass m) {
    if (!(seg.width >= 0.0))
        throw std::invalid_argument("segment_matrix: width must be >= 0");
    const double a = m.value() - energy + seg.height;
    const double b = m.value() + energy - seg.height;
    const double ab = a * b;  // = -gamma^2
    double c, s;
    if (ab > 0.0) {
        const double w = std::sqrt(ab) * seg.width;
        c = std::cosh(w);
        s = seg.width > 0.0 ? std::sinh(w) / std::sqrt(ab) : 0.0;
    } else if (ab < 0.0) {
        const double gamma = std::sqrt(-ab);
        const double w = gamma * seg.width;
        c = std::cos(w);
        s = std::sin(w) / gamma;
    } else {
        c = 1.0;
        s = seg.width;
    }
    return {c, a * s, b * s, c};
}

Matrix2 free_gap_matrix(double length, double energy, Mass m) {
    detail::require_in_gap(energy, m, "free_gap_matrix");
    if (!(length >= 0.0)) throw std::invalid_argument("free_gap_matrix: length must be >= 0");
    const double r = rho_of(energy, m);
    const double w = length * kappa_of(energy, m);
    const double ch = std::cosh(w);
    const double sh = std::sinh(w);
    return {ch, r * sh, sh / r, ch};
}

namespace {

void absorb(ScaledTransfer& t) {
    const double mag = t.matrix.max_abs();
    if (mag > 1.0) {
        t.matrix = t.matrix * (1.0 / mag);
        t.log_scale += std::log(mag);
    }
}

}  // namespace

ScaledTransfer total_transfer(const BoundStateProblem& problem, double energy,
                              DeltaConvention convention) {
    detail::require_in_gap(energy, problem.mass(), "total_transfer");
    const auto& centers = problem.centers();
    ScaledTransfer t{delta_connection(-centers.front().strength, convention).matrix, 0.0};
    absorb(t);
    for (std::size_t j = 1; j < centers.size(); ++j) {
        const double gap_length = centers[j].position - centers[j - 1].position;
        t.matrix = free_gap_matrix(gap_length, energy, problem.mass()) * t.matrix;
        absorb(t);
        t.matrix = delta_connection(-centers[j].strength, convention).matrix * t.matrix;
        absorb(t);
    }
    return t;
}

double bound_state_residual(const Matrix2& lambda, double energy, Mass m) {
    const double r = rho_of(energy, m);
    return lambda.a12 / (r * r) + (lambda.a11 + lambda.a22) / r + lambda.a21;
}

double bound_state_residual(const BoundStateProblem& problem, double energy,
                            DeltaConvention convention) {
    return bound_state_residual(total_transfer(problem, energy, convention).matrix, energy,
                                problem.mass());
}

EnergySpectrum transfer_spectrum(const BoundStateProblem& problem, const SolverOptions& opts,
                                 DeltaConvention convention) {
    SolverOptions local = opts;
    if (!local.root_count_hint)
        local.root_count_hint = static_cast<int>(problem.size());
    const double m = problem.mass().value();
    const double top = m * (1.0 - local.edge_margin);
    const auto roots = solve_all(
        [&](double e) { return bound_state_residual(problem, e, convention); }, -top, top,
        local, problem.mass());
    EnergySpectrum spectrum;
    for (const auto& r : roots)
        spectrum.insert({r.energy, r.residual, r.multiplicity, "transfer", ""},
                        10.0 * local.tol_energy * m);
    return spectrum;
}

bool is_valid_connection(const Matrix2& matrix) {
    return matrix.all_finite() && std::abs(matrix.det() - 1.0) <= 1e-12;
}

}  // namespace dirac1d
