#pragma once

// Non-standard Gegenbauer polynomials G_n^{(gamma)} and Jacobi polynomials
// P_n^{(alpha,beta)}: values, endpoint derivatives, norms and the
// derivative connection matrices used by the Tau discretizations.
//
// G_0 = 1 and G_n = C_n^{(gamma)} / (2 gamma) for n >= 1, which stays finite
// at gamma = 0 (G_n^{(0)} = T_n / n).

#include <Eigen/Dense>

#include <stdexcept>
#include <string_view>

namespace gtau {

enum class Parity { even = 0, odd = 1 };

/// 0 for even, 1 for odd; mode l of a parity family has degree 2l + offset.
constexpr int parity_offset(Parity p) { return p == Parity::even ? 0 : 1; }
constexpr int mode_degree(int l, Parity p) { return 2 * l + parity_offset(p); }

Parity parse_parity(std::string_view text);
std::string_view to_string(Parity p);

class GegenbauerIndex {
 public:
  /// Throws std::domain_error unless gamma > -1/2.
  explicit GegenbauerIndex(double gamma);

  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

class JacobiIndex {
 public:
  /// Throws std::domain_error unless alpha > -1 and beta > -1.
  JacobiIndex(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  JacobiIndex swapped() const { return {beta_, alpha_}; }
  /// (alpha + 1, beta + 1): the index of D P_n.
  JacobiIndex shifted() const { return {alpha_ + 1.0, beta_ + 1.0}; }

 private:
  double alpha_;
  double beta_;
};

/// alpha = beta = gamma - 1/2.
JacobiIndex to_jacobi(GegenbauerIndex idx);

// ---------------------------------------------------------------------------
// Scalar kernels. T is double or an exact rational type (mpq_class).
// ---------------------------------------------------------------------------

/// Generalized binomial binom(top, k) = top (top-1) ... (top-k+1) / k!.
template <class T>
T binomial(const T& top, int k) {
  T result(1);
  for (int i = 1; i <= k; ++i) {
    result *= (top - T(k - i));
    result /= T(i);
  }
  return result;
}

template <class T>
T gegenbauer_value(int n, const T& gamma, const T& x) {
  if (n < 0) throw std::invalid_argument("gegenbauer_value: negative degree");
  if (n == 0) return T(1);
  if (n == 1) return x;
  T prev = x;
  T curr = (gamma + T(1)) * x * x - T(1) / T(2);
  for (int k = 2; k < n; ++k) {
    T next = (T(2) * (T(k) + gamma) * x * curr - (T(k - 1) + T(2) * gamma) * prev) / T(k + 1);
    prev = curr;
    curr = next;
  }
  return curr;
}

/// G_n(1) = binom(2 gamma + n - 1, n) / (2 gamma), with the 2 gamma factor
/// cancelled so the product is finite at gamma = 0.
template <class T>
T gegenbauer_value_at_one(int n, const T& gamma) {
  if (n < 0) throw std::invalid_argument("gegenbauer_value_at_one: negative degree");
  T result(1);
  for (int j = 1; j < n; ++j) {
    result *= (T(2) * gamma + T(j));
    result /= T(j + 1);
  }
  return result;
}

template <class T>
T jacobi_value(int n, const T& alpha, const T& beta, const T& x) {
  if (n < 0) throw std::invalid_argument("jacobi_value: negative degree");
  if (n == 0) return T(1);
  T prev(1);
  T curr = ((alpha + beta + T(2)) * x + (alpha - beta)) / T(2);
  const T ab = alpha + beta;
  for (int k = 1; k < n; ++k) {
    const T s = T(2 * k) + ab;
    T a1 = T(2 * (k + 1)) * (T(k + 1) + ab) * s;
    T a2 = (s + T(1)) * (alpha * alpha - beta * beta);
    T a3 = s * (s + T(1)) * (s + T(2));
    T a4 = T(2) * (T(k) + alpha) * (T(k) + beta) * (s + T(2));
    T next = ((a2 + a3 * x) * curr - a4 * prev) / a1;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// D^k P_n^{(alpha,beta)}(1) = 2^{-k} prod_{j=1..k}(n+alpha+beta+j) binom(n+alpha, n-k);
/// zero once k exceeds the degree.
template <class T>
T jacobi_derivative_at_one(int n, const T& alpha, const T& beta, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("jacobi_derivative_at_one: negative argument");
  if (k > n) return T(0);
  T factor(1);
  for (int j = 1; j <= k; ++j) {
    factor *= (T(n) + alpha + beta + T(j));
    factor /= T(2);
  }
  return factor * binomial<T>(T(n) + alpha, n - k);
}

// ---------------------------------------------------------------------------
// Floating-point API
// ---------------------------------------------------------------------------

/// G_n^{(gamma)}(x) by forward three-term recurrence. Throws
/// std::overflow_error if the recurrence leaves the double range.
double gegenbauer_eval(int n, GegenbauerIndex idx, double x);

double gegenbauer_at_one(int n, GegenbauerIndex idx);

/// h_n = int_{-1}^{1} (1-x^2)^{gamma-1/2} G_n^2 dx. Throws std::overflow_error
/// when the value is not representable; log_gegenbauer_norm never overflows.
double gegenbauer_norm(int n, GegenbauerIndex idx);
double log_gegenbauer_norm(int n, GegenbauerIndex idx);

double jacobi_eval(int n, JacobiIndex idx, double x);

double jacobi_deriv_at_one(int n, JacobiIndex idx, int k);

/// First-derivative connection over all degrees 0 .. 2m-1+offset(parity):
/// column j holds the G-coefficients of D G_j. Strictly upper triangular.
Eigen::MatrixXd gegenbauer_derivative_matrix(int m, GegenbauerIndex idx, Parity parity);

/// Second-derivative connection restricted to one parity family: an m x m
/// matrix whose column l holds the coefficients of D^2 G_{n(l)} on the modes
/// G_{n(0)}, ..., G_{n(m-1)}. Obtained by squaring the first-derivative
/// matrix; strictly upper triangular.
Eigen::MatrixXd gegenbauer_second_derivative_matrix(int m, GegenbauerIndex idx, Parity parity);

/// Multiplication by x over degrees 0 .. degrees-1 (column j = coefficients
/// of x G_j). The last column is truncated at degree `degrees-1`.
Eigen::MatrixXd gegenbauer_multiply_x_matrix(int degrees, GegenbauerIndex idx);

}  // namespace gtau
