#pragma once

// Operator matrices for the parity-separated Gegenbauer Tau discretization of
// D^2 u = lambda u, u(+-1) = 0.
//
// The integration operator M is tridiagonal plus one top row. Its columns hold
// the double-antiderivative coefficients of each basis mode and its top row
// carries the boundary constants -K_n, so that
//   mu [p_0, ..., p_{m-1}] = [p_0, ..., p_{m-1}] M   (left eigenvectors)
//   c = lambda M c                                  (right eigenvectors).

#include "gtau/charpoly.hpp"
#include "gtau/orthopoly.hpp"

#include <Eigen/Dense>

#include <span>
#include <string_view>
#include <vector>

namespace gtau {

class TauMatrix {
 public:
  TauMatrix(int m, GegenbauerIndex idx, Parity parity, std::vector<double> first_row, std::vector<double> sub,
            std::vector<double> main, std::vector<double> super, double extra);

  int modes() const { return m_; }
  GegenbauerIndex index() const { return idx_; }
  Parity parity() const { return parity_; }

  /// M(0, j), j = 0 .. m-1.
  std::span<const double> first_row() const { return first_row_; }
  /// M(k+1, k), k = 0 .. m-2.
  std::span<const double> sub_diagonal() const { return sub_; }
  /// M(k, k), k = 0 .. m-1; entry 0 coincides with first_row()[0].
  std::span<const double> main_diagonal() const { return main_; }
  /// M(k, k+1), k = 0 .. m-2; entry 0 coincides with first_row()[1].
  std::span<const double> super_diagonal() const { return super_; }
  /// M(m, m-1), the single non-zero of the trailing row of the rectangular view.
  double extra_entry() const { return extra_; }

  /// Entry of the (m+1) x m rectangular view.
  double operator()(int i, int j) const;

  Eigen::MatrixXd square() const;
  Eigen::MatrixXd rectangular() const;

 private:
  int m_;
  GegenbauerIndex idx_;
  Parity parity_;
  std::vector<double> first_row_;
  std::vector<double> sub_;
  std::vector<double> main_;
  std::vector<double> super_;
  double extra_;
};

/// The (m+1) x m double-integration operator GI2 = M(0:m, 0:m-1). Throws
/// std::invalid_argument for m < 2.
TauMatrix build_gi2(int m, GegenbauerIndex idx, Parity parity);

/// g = M^+ f: the m+1 parity-family coefficients of the double antiderivative
/// of f = sum_l f_l G_{n(l)} that vanishes at x = +-1.
Eigen::VectorXd apply_double_integration(const Eigen::VectorXd& f, const TauMatrix& matrix);
Eigen::VectorXcd apply_double_integration(const Eigen::VectorXcd& f, const TauMatrix& matrix);

enum class PencilVariant { diff_elim_last, diff_elim_first, galerkin_basis, ierley_legendre, integration };

std::string_view to_string(PencilVariant v);
PencilVariant parse_pencil_variant(std::string_view text);

enum class MatrixStructure {
  full,
  identity,
  diagonal,
  tridiagonal,
  upper_triangular,
  first_row_plus_subdiagonal,
  tridiagonal_plus_first_row,
};

std::string_view to_string(MatrixStructure s);

/// Exact zero-pattern test.
bool has_structure(const Eigen::MatrixXd& a, MatrixStructure s);

/// A a = lambda B a.
struct GeneralizedPencil {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  PencilVariant variant;
  MatrixStructure a_structure;
  MatrixStructure b_structure;
};

/// Even-mode pencils of the differentiation-based formulations (and the
/// Legendre-Galerkin expansion in (1-x^2) G_{2l}^{(3/2)}), m x m. No
/// conditioning mitigation is applied. Throws std::invalid_argument for
/// m < 2, for variant == integration, and for ierley_legendre with gamma != 3/2.
GeneralizedPencil build_diff_pencil(int m, GegenbauerIndex idx, PencilVariant variant);

/// (I, M) for the square integration operator.
GeneralizedPencil build_integration_pencil(int m, GegenbauerIndex idx, Parity parity);

}  // namespace gtau
