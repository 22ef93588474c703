#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace gtau {

struct EigenDecomposition {
  std::vector<std::complex<double>> values;
  Eigen::MatrixXcd vectors;  // column k pairs with values[k]; unit 2-norm
};

/// Full complex spectrum of a real square matrix: balancing, Hessenberg
/// reduction and shifted QR (LAPACK dgeev). Output order is the solver's;
/// deterministic for fixed input. Throws std::invalid_argument for
/// non-finite entries and std::runtime_error on non-convergence.
std::vector<std::complex<double>> dense_eigs(const Eigen::MatrixXd& a);

/// Same, with right eigenvectors.
EigenDecomposition dense_eigs_with_vectors(const Eigen::MatrixXd& a);

}  // namespace gtau
