#include "gtau/dense_eigs.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace gtau {

namespace {

void require_square_finite(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("dense_eigs: matrix must be square");
  if (!a.allFinite()) throw std::invalid_argument("dense_eigs: matrix has non-finite entries");
}

void check_info(lapack_int info) {
  if (info < 0) throw std::logic_error("dense_eigs: dgeev rejected argument " + std::to_string(-info));
  if (info > 0) {
    throw std::runtime_error("dense_eigs: QR iteration failed to converge; eigenvalues " + std::to_string(info) +
                             " onward were not computed");
  }
}

}  // namespace

std::vector<std::complex<double>> dense_eigs(const Eigen::MatrixXd& a) {
  require_square_finite(a);
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (n == 0) return {};
  Eigen::MatrixXd work = a;
  std::vector<double> wr(n), wi(n);
  double dummy = 0.0;
  check_info(LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, wr.data(), wi.data(), &dummy, 1, &dummy,
                           1));
  std::vector<std::complex<double>> out(n);
  for (lapack_int i = 0; i < n; ++i) out[i] = {wr[i], wi[i]};
  return out;
}

EigenDecomposition dense_eigs_with_vectors(const Eigen::MatrixXd& a) {
  require_square_finite(a);
  const lapack_int n = static_cast<lapack_int>(a.rows());
  EigenDecomposition out;
  if (n == 0) return out;
  Eigen::MatrixXd work = a;
  Eigen::MatrixXd vr(n, n);
  std::vector<double> wr(n), wi(n);
  double dummy = 0.0;
  check_info(LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'V', n, work.data(), n, wr.data(), wi.data(), &dummy, 1,
                           vr.data(), n));
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Conjugate pairs share two real columns: v = vr(:,j) +/- i vr(:,j+1).
  for (lapack_int j = 0; j < n; ++j) {
    out.values[j] = {wr[j], wi[j]};
    if (wi[j] == 0.0) {
      out.vectors.col(j) = vr.col(j).cast<std::complex<double>>();
    } else if (j + 1 < n) {
      const std::complex<double> i1(0.0, 1.0);
      out.vectors.col(j) = vr.col(j).cast<std::complex<double>>() + i1 * vr.col(j + 1).cast<std::complex<double>>();
      out.vectors.col(j + 1) =
          vr.col(j).cast<std::complex<double>>() - i1 * vr.col(j + 1).cast<std::complex<double>>();
      out.values[j + 1] = {wr[j + 1], wi[j + 1]};
      ++j;
    }
  }
  for (lapack_int j = 0; j < n; ++j) out.vectors.col(j).normalize();
  return out;
}

}  // namespace gtau
