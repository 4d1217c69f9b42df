#include "dirac1d/greens.hpp"

#include <cmath>

namespace dirac1d {

Matrix2 free_greens(double dx, double energy, Mass m) {
    detail::require_in_gap(energy, m, "free_greens");
    const double k = kappa_of(energy, m);
    const double s = dx > 0.0 ? 1.0 : (dx < 0.0 ? -1.0 : 0.0);
    const double damp = std::exp(-std::abs(dx) * k);
    return {0.5 * (energy - m.value()) / k * damp, -0.5 * s * damp,
            0.5 * s * damp, 0.5 * (energy + m.value()) / k * damp};
}

DeltaMatrix::DeltaMatrix(int n_centers)
    : n_centers_(n_centers),
      data_(static_cast<std::size_t>(4 * n_centers * n_centers), 0.0) {}

Matrix2 DeltaMatrix::block(int i, int j) const {
    return {at(2 * i, 2 * j), at(2 * i, 2 * j + 1), at(2 * i + 1, 2 * j),
            at(2 * i + 1, 2 * j + 1)};
}

void DeltaMatrix::set_block(int i, int j, const Matrix2& b) {
    at(2 * i, 2 * j) = b.a11;
    at(2 * i, 2 * j + 1) = b.a12;
    at(2 * i + 1, 2 * j) = b.a21;
    at(2 * i + 1, 2 * j + 1) = b.a22;
}

DeltaMatrix assemble_delta_matrix(const BoundStateProblem& problem, double energy) {
    detail::require_in_gap(energy, problem.mass(), "assemble_delta_matrix");
    const auto& centers = problem.centers();
    const int n = static_cast<int>(centers.size());
    DeltaMatrix delta(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix2 b = free_greens(centers[static_cast<std::size_t>(i)].position -
                                        centers[static_cast<std::size_t>(j)].position,
                                    energy, problem.mass());
            if (i == j) {
                const double inv_g = 1.0 / centers[static_cast<std::size_t>(j)].strength;
                b.a11 += inv_g;
                b.a22 += inv_g;
            }
            delta.set_block(i, j, b);
        }
    }
    return delta;
}

double lu_determinant(std::vector<double>& a, int n) {
    double det_sign = 1.0;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[static_cast<std::size_t>(col * n + col)]);
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(a[static_cast<std::size_t>(r * n + col)]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<std::size_t>(col * n + c)],
                          a[static_cast<std::size_t>(pivot * n + c)]);
            det_sign = -det_sign;
        }
        const double d = a[static_cast<std::size_t>(col * n + col)];
        det *= d;
        for (int r = col + 1; r < n; ++r) {
            const double factor = a[static_cast<std::size_t>(r * n + col)] / d;
            if (factor == 0.0) continue;
            for (int c = col + 1; c < n; ++c)
                a[static_cast<std::size_t>(r * n + c)] -=
                    factor * a[static_cast<std::size_t>(col * n + c)];
        }
    }
    return det_sign * det;
}

double delta_determinant(const BoundStateProblem& problem, double energy) {
    DeltaMatrix delta = assemble_delta_matrix(problem, energy);
    return lu_determinant(delta.data(), delta.dim());
}

EnergySpectrum greens_spectrum(const BoundStateProblem& problem, const SolverOptions& opts) {
    SolverOptions local = opts;
    if (!local.root_count_hint)
        local.root_count_hint = static_cast<int>(problem.size());
    const double m = problem.mass().value();
    const double top = m * (1.0 - local.edge_margin);
    const auto roots = solve_all([&](double e) { return delta_determinant(problem, e); },
                                 -top, top, local, problem.mass());
    EnergySpectrum spectrum;
    for (const auto& r : roots)
        spectrum.insert({r.energy, r.residual, r.multiplicity, "greens", ""},
                        10.0 * local.tol_energy * m);
    return spectrum;
}

}  // namespace dirac1d
