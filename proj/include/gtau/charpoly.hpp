#pragma once

// Characteristic polynomials of the Tau discretizations in the reciprocal
// eigenvalue mu = 1/lambda.
//
//   p_m(mu) = sum_k mu^k D^{2k} G_{2m}(1),   q_m(mu) = sum_k mu^k D^{2k} G_{2m+1}(1)
//
// obey a three-term recurrence plus a constant K_n; the same coefficients
// populate the tridiagonal-plus-one-row operator built in tau_operator.hpp.

#include "gtau/orthopoly.hpp"
#include "gtau/polynomial.hpp"

#include <gmpxx.h>

#include <complex>
#include <span>
#include <vector>

namespace gtau {

using MuPolynomial = BasicPolynomial<double>;
using ExactMuPolynomial = BasicPolynomial<mpq_class>;

MuPolynomial to_double(const ExactMuPolynomial& p);

// ---------------------------------------------------------------------------
// K_n constants
// ---------------------------------------------------------------------------

template <class T>
T k_constant_closed_form(int n, const T& gamma) {
  if (n < 0) throw std::invalid_argument("k_constant: negative index");
  const T two_g = T(2) * gamma;
  switch (n) {
    case 0:
      return (two_g + T(1)) / (T(4) * (gamma + T(1)));
    case 1:
      return (two_g + T(1)) / (T(12) * (gamma + T(2)));
    case 2:
      return (T(2) * gamma * gamma + gamma - T(7)) * (T(1) + two_g) / (T(48) * (gamma + T(1)) * (gamma + T(2)));
    default: {
      const T denom = T(n) * T(n * n - 1) * T(n * n - 4);
      // binom(2g+n-3, n-3) with factors 2g+i formed directly; the generic
      // product cancels badly near 2g = -1.
      T binom(1);
      for (int i = 1; i <= n - 3; ++i) binom = binom * (two_g + T(i)) / T(i);
      return (two_g - T(1)) * (two_g - T(3)) / denom * binom;
    }
  }
}

/// K_0 .. K_{n_max}: the special forms for n <= 2, then two interleaved
/// chains K_{n+2} = (2g+n-1)(2g+n-2) / ((n+4)(n+3)) K_n seeded by
/// K_3 = (2g-1)(2g-3)/120 and K_4 = (4g^2-1)(2g-3)/720.
template <class T>
std::vector<T> k_constants_by_recurrence(int n_max, const T& gamma) {
  if (n_max < 0) return {};
  std::vector<T> k(static_cast<std::size_t>(n_max) + 1, T(0));
  for (int n = 0; n <= std::min(n_max, 2); ++n) k[n] = k_constant_closed_form(n, gamma);
  const T two_g = T(2) * gamma;
  if (n_max >= 3) k[3] = (two_g - T(1)) * (two_g - T(3)) / T(120);
  if (n_max >= 4) k[4] = (T(4) * gamma * gamma - T(1)) * (two_g - T(3)) / T(720);
  for (int n = 3; n + 2 <= n_max; ++n) {
    // Left-to-right order matches the reference listing bit for bit.
    k[n + 2] = k[n] * (two_g + T(n - 1)) * (two_g + T(n - 2)) / (T(n + 4) * T(n + 3));
  }
  return k;
}

struct KSequence {
  GegenbauerIndex gamma;
  std::vector<double> values;  // K_0 .. K_{n_max}
};

/// Closed form of K_n.
double k_constant(int n, GegenbauerIndex idx);
/// K_0 .. K_{n_max} generated by the two-step recurrence.
KSequence k_sequence(int n_max, GegenbauerIndex idx);

// ---------------------------------------------------------------------------
// Recurrence coefficients
// ---------------------------------------------------------------------------

/// Column j of the semi-infinite operator M in mu [p_0, p_1, ...] = [p_0, p_1, ...] M.
/// M(j+1, j) = sub, M(j, j) = main, M(j-1, j) = super, and boundary = -K_{n(j)}
/// is added to M(0, j).
template <class T>
struct RecurrenceColumn {
  T sub;
  T main;
  T super;
  T boundary;
};

template <class T>
RecurrenceColumn<T> recurrence_column(int j, const T& gamma, Parity parity, const T& k_n) {
  const int n = mode_degree(j, parity);
  const T g = gamma;
  RecurrenceColumn<T> c{T(0), T(0), T(0), -k_n};
  if (j == 0 && parity == Parity::even) {
    c.sub = T(1) / (T(2) * (g + T(1)));
    return c;
  }
  c.sub = T(1) / (T(4) * (g + T(n + 1)) * (g + T(n)));
  if (j == 0) return c;
  c.main = T(-1) / (T(2) * (g + T(n + 1)) * (g + T(n - 1)));
  if (!(j == 1 && parity == Parity::even)) c.super = T(1) / (T(4) * (g + T(n)) * (g + T(n - 1)));
  return c;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials
// ---------------------------------------------------------------------------

template <class T>
std::vector<BasicPolynomial<T>> charpoly_sequence_t(int m_max, const T& gamma, Parity parity) {
  if (m_max < 0) throw std::invalid_argument("charpoly_sequence: m_max must be >= 0");
  using Poly = BasicPolynomial<T>;
  const auto ks = k_constants_by_recurrence(mode_degree(m_max, parity), gamma);
  std::vector<Poly> seq;
  seq.reserve(static_cast<std::size_t>(m_max) + 1);
  seq.push_back(Poly::constant(T(1)));
  for (int j = 0; j < m_max; ++j) {
    const auto c = recurrence_column(j, gamma, parity, ks[mode_degree(j, parity)]);
    Poly rhs = seq[j].shifted(1) - c.main * seq[j] - c.boundary * seq[0];
    if (j >= 1) rhs = rhs - c.super * seq[j - 1];
    seq.push_back((T(1) / c.sub) * rhs);
  }
  return seq;
}

/// sum_{k} mu^k D^{2k} G_n(1), assembled term by term from the Jacobi
/// endpoint derivatives rescaled to the G normalization.
template <class T>
BasicPolynomial<T> charpoly_direct_t(int n, const T& gamma) {
  if (n < 0) throw std::invalid_argument("charpoly_direct: negative degree");
  const T a = gamma - T(1) / T(2);
  const T scale = gegenbauer_value_at_one(n, gamma) / jacobi_derivative_at_one(n, a, a, 0);
  std::vector<T> coeffs;
  for (int k = 0; 2 * k <= n; ++k) coeffs.push_back(scale * jacobi_derivative_at_one(n, a, a, 2 * k));
  return BasicPolynomial<T>(std::move(coeffs));
}

template <class T>
BasicPolynomial<T> omega_poly_t(int n, const T& alpha, const T& beta) {
  if (n < 0) throw std::invalid_argument("omega_poly: negative degree");
  std::vector<T> coeffs;
  for (int k = 0; 2 * k <= n; ++k) coeffs.push_back(jacobi_derivative_at_one(n, alpha, beta, 2 * k));
  return BasicPolynomial<T>(std::move(coeffs));
}

/// p_0 .. p_{m_max} (even) or q_0 .. q_{m_max} (odd) from the recurrence.
std::vector<MuPolynomial> charpoly_sequence(int m_max, GegenbauerIndex idx, Parity parity);
/// Rational arithmetic; gamma must be > -1/2.
std::vector<ExactMuPolynomial> charpoly_sequence_exact(int m_max, const mpq_class& gamma, Parity parity);

MuPolynomial charpoly_direct(int n, GegenbauerIndex idx);
ExactMuPolynomial charpoly_direct_exact(int n, const mpq_class& gamma);

/// Omega_n^{(alpha,beta)}(mu) = sum_k mu^k D^{2k} P_n^{(alpha,beta)}(1).
MuPolynomial omega_poly(int n, JacobiIndex idx);

/// Jacobi Tau characteristic polynomial (Dirichlet at both ends):
/// Omega_n^{(a,b)} Omega_{n-1}^{(b,a)} + Omega_n^{(b,a)} Omega_{n-1}^{(a,b)}.
MuPolynomial jacobi_char_poly(int n, JacobiIndex idx);

/// u(-1) = 0, Du(1) = 0:
/// k_{n-1} Omega_n^{(b,a)} Omega_{n-2}^{(a+1,b+1)} + k_n Omega_{n-1}^{(b,a)} Omega_{n-1}^{(a+1,b+1)},
/// with k_n = (n + a + b + 1) / 2.
MuPolynomial mixed_char_poly(int n, JacobiIndex idx);

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

/// All complex roots via eigenvalues of the balanced companion matrix, sorted
/// by real part then imaginary part. Throws std::invalid_argument for the zero
/// polynomial or a constant.
std::vector<std::complex<double>> poly_roots(const MuPolynomial& p);

/// Roots of an exact polynomial by Aberth iteration in 100-digit arithmetic,
/// seeded from the double companion roots, then rounded to double. Monomial
/// coefficients of the characteristic polynomials are ill-conditioned enough
/// that rounding them to double can move real roots off the axis. Throws
/// std::runtime_error if the iteration does not converge.
std::vector<std::complex<double>> poly_roots_exact(const ExactMuPolynomial& p);

inline constexpr double kRealRootTolerance = 1e-9;
inline constexpr double kDistinctRootTolerance = 1e-8;

struct RootClassification {
  bool all_real = true;
  bool all_negative = true;
  bool distinct = true;
  double max_imag_ratio = 0.0;        // max |Im r| / max(1, |r|)
  double max_real = 0.0;              // max Re r (stability margin)
  double min_relative_gap = 0.0;      // min |r_{i+1}-r_i| / max(|r_i|, |r_{i+1}|), +inf when < 2 roots
  std::vector<double> real_parts;     // ascending
};

/// A root counts as real when |Im r| <= real_tol * max(1, |r|); roots are
/// distinct when consecutive relative gaps exceed gap_tol.
RootClassification classify_roots(std::span<const std::complex<double>> roots,
                                  double real_tol = kRealRootTolerance,
                                  double gap_tol = kDistinctRootTolerance);

}  // namespace gtau
