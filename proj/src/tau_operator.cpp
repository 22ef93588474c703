#include "gtau/tau_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gtau {

TauMatrix::TauMatrix(int m, GegenbauerIndex idx, Parity parity, std::vector<double> first_row,
                     std::vector<double> sub, std::vector<double> main, std::vector<double> super, double extra)
    : m_(m),
      idx_(idx),
      parity_(parity),
      first_row_(std::move(first_row)),
      sub_(std::move(sub)),
      main_(std::move(main)),
      super_(std::move(super)),
      extra_(extra) {
  const auto um = static_cast<std::size_t>(m);
  if (m < 2 || first_row_.size() != um || main_.size() != um || sub_.size() != um - 1 || super_.size() != um - 1) {
    throw std::invalid_argument("TauMatrix: inconsistent band sizes");
  }
  auto all_finite = [](const std::vector<double>& v) {
    for (double x : v) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  };
  if (!all_finite(first_row_) || !all_finite(sub_) || !all_finite(main_) || !all_finite(super_) ||
      !std::isfinite(extra_)) {
    throw std::overflow_error("TauMatrix: non-finite entry");
  }
}

double TauMatrix::operator()(int i, int j) const {
  if (i < 0 || i > m_ || j < 0 || j >= m_) throw std::out_of_range("TauMatrix index");
  if (i == m_) return j == m_ - 1 ? extra_ : 0.0;
  if (i == 0) return first_row_[j];
  if (i == j) return main_[i];
  if (i == j + 1) return sub_[j];
  if (j == i + 1) return super_[i];
  return 0.0;
}

Eigen::MatrixXd TauMatrix::rectangular() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m_ + 1, m_);
  for (int j = 0; j < m_; ++j) out(0, j) = first_row_[j];
  for (int k = 1; k < m_; ++k) out(k, k) = main_[k];
  for (int k = 0; k + 1 < m_; ++k) out(k + 1, k) = sub_[k];
  for (int k = 1; k + 1 < m_; ++k) out(k, k + 1) = super_[k];
  out(m_, m_ - 1) = extra_;
  return out;
}

Eigen::MatrixXd TauMatrix::square() const { return rectangular().topRows(m_); }

TauMatrix build_gi2(int m, GegenbauerIndex idx, Parity parity) {
  if (m < 2) throw std::invalid_argument("build_gi2: m must be >= 2");
  const double g = idx.gamma();
  const auto ks = k_constants_by_recurrence(mode_degree(m - 1, parity), g);
  const auto um = static_cast<std::size_t>(m);
  std::vector<double> first_row(um), sub(um - 1), main(um), super(um - 1);
  double extra = 0.0;
  for (int j = 0; j < m; ++j) {
    const auto c = recurrence_column(j, g, parity, ks[mode_degree(j, parity)]);
    if (j + 1 < m) {
      sub[j] = c.sub;
    } else {
      extra = c.sub;
    }
    main[j] = c.main;
    if (j >= 1) super[j - 1] = c.super;
    first_row[j] = (j <= 1 ? (j == 0 ? c.main : c.super) : 0.0) + c.boundary;
  }
  main[0] = first_row[0];
  super[0] = first_row[1];
  return {m, idx, parity, std::move(first_row), std::move(sub), std::move(main), std::move(super), extra};
}

namespace {

template <class Vec>
Vec apply_gi2(const Vec& f, const TauMatrix& t) {
  const int m = t.modes();
  if (f.size() != m) {
    throw std::invalid_argument("apply_double_integration: expected " + std::to_string(m) + " coefficients, got " +
                                std::to_string(f.size()));
  }
  Vec g = Vec::Zero(m + 1);
  const auto row = t.first_row();
  const auto sub = t.sub_diagonal();
  const auto main = t.main_diagonal();
  const auto sup = t.super_diagonal();
  for (int j = 0; j < m; ++j) g(0) += row[j] * f(j);
  for (int k = 1; k < m; ++k) {
    g(k) += main[k] * f(k) + sub[k - 1] * f(k - 1);
    if (k + 1 < m) g(k) += sup[k] * f(k + 1);
  }
  g(m) = t.extra_entry() * f(m - 1);
  return g;
}

}  // namespace

Eigen::VectorXd apply_double_integration(const Eigen::VectorXd& f, const TauMatrix& matrix) {
  return apply_gi2(f, matrix);
}

Eigen::VectorXcd apply_double_integration(const Eigen::VectorXcd& f, const TauMatrix& matrix) {
  return apply_gi2(f, matrix);
}

std::string_view to_string(PencilVariant v) {
  switch (v) {
    case PencilVariant::diff_elim_last: return "diff-elim-last";
    case PencilVariant::diff_elim_first: return "diff-elim-first";
    case PencilVariant::galerkin_basis: return "galerkin-basis";
    case PencilVariant::ierley_legendre: return "ierley-legendre";
    case PencilVariant::integration: return "integration";
  }
  return "unknown";
}

PencilVariant parse_pencil_variant(std::string_view text) {
  for (auto v : {PencilVariant::diff_elim_last, PencilVariant::diff_elim_first, PencilVariant::galerkin_basis,
                 PencilVariant::ierley_legendre, PencilVariant::integration}) {
    if (text == to_string(v)) return v;
  }
  throw std::invalid_argument("unknown pencil variant '" + std::string(text) + "'");
}

std::string_view to_string(MatrixStructure s) {
  switch (s) {
    case MatrixStructure::full: return "full";
    case MatrixStructure::identity: return "identity";
    case MatrixStructure::diagonal: return "diagonal";
    case MatrixStructure::tridiagonal: return "tridiagonal";
    case MatrixStructure::upper_triangular: return "upper-triangular";
    case MatrixStructure::first_row_plus_subdiagonal: return "first-row-plus-subdiagonal";
    case MatrixStructure::tridiagonal_plus_first_row: return "tridiagonal-plus-first-row";
  }
  return "unknown";
}

bool has_structure(const Eigen::MatrixXd& a, MatrixStructure s) {
  if (a.rows() != a.cols()) return false;
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      bool allowed = true;
      switch (s) {
        case MatrixStructure::full: break;
        case MatrixStructure::identity:
          if (a(i, j) != (i == j ? 1.0 : 0.0)) return false;
          continue;
        case MatrixStructure::diagonal: allowed = i == j; break;
        case MatrixStructure::tridiagonal: allowed = std::abs(i - j) <= 1; break;
        case MatrixStructure::upper_triangular: allowed = i <= j; break;
        case MatrixStructure::first_row_plus_subdiagonal: allowed = i == 0 || i == j + 1; break;
        case MatrixStructure::tridiagonal_plus_first_row: allowed = i == 0 || std::abs(i - j) <= 1; break;
      }
      if (!allowed && a(i, j) != 0.0) return false;
    }
  }
  return true;
}

namespace {

struct EvenModeData {
  Eigen::VectorXd norms;     // h_{2k}, k = 0 .. m-1
  Eigen::VectorXd at_one;    // G_{2l}(1), l = 0 .. m
  Eigen::MatrixXd d2;        // m x (m+1): coefficient of G_{2k} in D^2 G_{2l}
  Eigen::MatrixXd wall;      // (m+1) x m: coefficients of (1-x^2) G_{2l} on G_{2k}
};

EvenModeData even_mode_data(int m, GegenbauerIndex idx) {
  EvenModeData d;
  d.norms.resize(m);
  for (int k = 0; k < m; ++k) d.norms(k) = gegenbauer_norm(2 * k, idx);
  d.at_one.resize(m + 1);
  for (int l = 0; l <= m; ++l) d.at_one(l) = gegenbauer_at_one(2 * l, idx);
  d.d2 = gegenbauer_second_derivative_matrix(m + 1, idx, Parity::even).topRows(m);
  const Eigen::MatrixXd x = gegenbauer_multiply_x_matrix(2 * m + 1, idx);
  const Eigen::MatrixXd x2 = x * x;
  d.wall.resize(m + 1, m);
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l < m; ++l) d.wall(k, l) = (k == l ? 1.0 : 0.0) - x2(2 * k, 2 * l);
  }
  return d;
}

void assert_structure(const GeneralizedPencil& p) {
  if (!has_structure(p.a, p.a_structure) || !has_structure(p.b, p.b_structure)) {
    throw std::logic_error(std::string("pencil ") + std::string(to_string(p.variant)) +
                           " violates its recorded structure");
  }
}

}  // namespace

GeneralizedPencil build_diff_pencil(int m, GegenbauerIndex idx, PencilVariant variant) {
  if (m < 2) throw std::invalid_argument("build_diff_pencil: m must be >= 2");
  if (variant == PencilVariant::integration) {
    throw std::invalid_argument("build_diff_pencil: use build_integration_pencil for the integration variant");
  }
  if (variant == PencilVariant::ierley_legendre && idx.gamma() != 1.5) {
    throw std::invalid_argument("build_diff_pencil: ierley-legendre requires gamma = 3/2");
  }
  const EvenModeData d = even_mode_data(m, idx);
  const Eigen::MatrixXd h = d.norms.asDiagonal();
  GeneralizedPencil p{Eigen::MatrixXd(), Eigen::MatrixXd(), variant, MatrixStructure::full, MatrixStructure::full};

  switch (variant) {
    case PencilVariant::diff_elim_last:
    case PencilVariant::diff_elim_first: {
      // Weighted residuals against G_{2k}, k < m: A_full = H D2, B_full = [H 0].
      const Eigen::MatrixXd a_full = h * d.d2;
      Eigen::MatrixXd b_full = Eigen::MatrixXd::Zero(m, m + 1);
      b_full.leftCols(m) = h;
      // a = C a~ eliminates one coefficient through sum_l a_l G_{2l}(1) = 0.
      Eigen::MatrixXd c = Eigen::MatrixXd::Zero(m + 1, m);
      if (variant == PencilVariant::diff_elim_last) {
        c.topRows(m).setIdentity();
        for (int l = 0; l < m; ++l) c(m, l) = -d.at_one(l) / d.at_one(m);
        p.a_structure = MatrixStructure::full;
        p.b_structure = MatrixStructure::diagonal;
      } else {
        c.bottomRows(m).setIdentity();
        for (int l = 0; l < m; ++l) c(0, l) = -d.at_one(l + 1) / d.at_one(0);
        p.a_structure = MatrixStructure::upper_triangular;
        p.b_structure = MatrixStructure::first_row_plus_subdiagonal;
      }
      p.a = a_full * c;
      p.b = b_full * c;
      break;
    }
    case PencilVariant::galerkin_basis: {
      // u = (1-x^2) sum_l b_l G_{2l}
      p.a = h * (d.d2 * d.wall);
      p.b = h * d.wall.topRows(m);
      p.a_structure = MatrixStructure::upper_triangular;
      p.b_structure = MatrixStructure::tridiagonal;
      break;
    }
    case PencilVariant::ierley_legendre: {
      // D^2 ((1-x^2) G_{2l}^{(3/2)}) = -(2l+1)(2l+2) G_{2l}^{(3/2)}
      p.a = Eigen::MatrixXd::Zero(m, m);
      for (int k = 0; k < m; ++k) p.a(k, k) = -(2.0 * k + 1.0) * (2.0 * k + 2.0) * d.norms(k);
      p.b = h * d.wall.topRows(m);
      p.a_structure = MatrixStructure::diagonal;
      p.b_structure = MatrixStructure::tridiagonal;
      break;
    }
    case PencilVariant::integration: break;
  }
  assert_structure(p);
  return p;
}

GeneralizedPencil build_integration_pencil(int m, GegenbauerIndex idx, Parity parity) {
  GeneralizedPencil p{Eigen::MatrixXd::Identity(m, m), build_gi2(m, idx, parity).square(),
                      PencilVariant::integration, MatrixStructure::identity,
                      MatrixStructure::tridiagonal_plus_first_row};
  assert_structure(p);
  return p;
}

}  // namespace gtau
