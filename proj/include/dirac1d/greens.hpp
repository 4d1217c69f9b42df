#pragma once

#include <vector>

#include "dirac1d/core.hpp"
#include "dirac1d/matrix2.hpp"
#include "dirac1d/rootfind.hpp"

namespace dirac1d {

/// Free Dirac Green's function at energy E in the gap, as the real 2x2 matrix
///   (1/2) [[ (E-m)/kappa, -sign(dx) ], [ sign(dx), (E+m)/kappa ]] e^{-|dx| kappa},
/// with sign(0) = 0. The diagonal entries are -rho/2 and 1/(2 rho).
Matrix2 free_greens(double dx, double energy, Mass m);

/// Real 2N x 2N matrix whose determinant roots are the bound levels:
/// block(i,j) = delta_ij / g_j * I + G0(r_i - r_j, E).
class DeltaMatrix {
  public:
    DeltaMatrix(int n_centers);

    int n_centers() const noexcept { return n_centers_; }
    int dim() const noexcept { return 2 * n_centers_; }

    double& at(int row, int col) { return data_[static_cast<std::size_t>(row * dim() + col)]; }
    double at(int row, int col) const {
        return data_[static_cast<std::size_t>(row * dim() + col)];
    }

    Matrix2 block(int i, int j) const;
    void set_block(int i, int j, const Matrix2& b);

    std::vector<double>& data() noexcept { return data_; }

  private:
    int n_centers_;
    std::vector<double> data_;
};

DeltaMatrix assemble_delta_matrix(const BoundStateProblem& problem, double energy);

/// det of a dense n x n matrix by LU with partial pivoting, sign recovered
/// from the pivot permutation parity. Destroys its input.
double lu_determinant(std::vector<double>& a, int n);

/// det Delta(E).
double delta_determinant(const BoundStateProblem& problem, double energy);

/// All zeros of det Delta inside the gap (margins per opts). The root-count
/// hint defaults to the number of centers.
EnergySpectrum greens_spectrum(const BoundStateProblem& problem, const SolverOptions& opts = {});

}  // namespace dirac1d
