#include "gtau/charpoly.hpp"

#include "gtau/dense_eigs.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace gtau {

namespace {

void require_exact_gamma(const mpq_class& gamma) {
  if (!(gamma > mpq_class(-1, 2))) throw std::domain_error("Gegenbauer index requires gamma > -1/2");
}

}  // namespace

MuPolynomial to_double(const ExactMuPolynomial& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.get_d());
  return MuPolynomial(std::move(c));
}

double k_constant(int n, GegenbauerIndex idx) { return k_constant_closed_form(n, idx.gamma()); }

KSequence k_sequence(int n_max, GegenbauerIndex idx) {
  return {idx, k_constants_by_recurrence(n_max, idx.gamma())};
}

std::vector<MuPolynomial> charpoly_sequence(int m_max, GegenbauerIndex idx, Parity parity) {
  return charpoly_sequence_t(m_max, idx.gamma(), parity);
}

std::vector<ExactMuPolynomial> charpoly_sequence_exact(int m_max, const mpq_class& gamma, Parity parity) {
  require_exact_gamma(gamma);
  return charpoly_sequence_t(m_max, gamma, parity);
}

MuPolynomial charpoly_direct(int n, GegenbauerIndex idx) { return charpoly_direct_t(n, idx.gamma()); }

ExactMuPolynomial charpoly_direct_exact(int n, const mpq_class& gamma) {
  require_exact_gamma(gamma);
  return charpoly_direct_t(n, gamma);
}

MuPolynomial omega_poly(int n, JacobiIndex idx) { return omega_poly_t(n, idx.alpha(), idx.beta()); }

MuPolynomial jacobi_char_poly(int n, JacobiIndex idx) {
  if (n < 2) throw std::invalid_argument("jacobi_char_poly: n must be >= 2");
  const JacobiIndex flipped = idx.swapped();
  return omega_poly(n, idx) * omega_poly(n - 1, flipped) + omega_poly(n, flipped) * omega_poly(n - 1, idx);
}

MuPolynomial mixed_char_poly(int n, JacobiIndex idx) {
  if (n < 2) throw std::invalid_argument("mixed_char_poly: n must be >= 2");
  const JacobiIndex flipped = idx.swapped();
  const JacobiIndex up = idx.shifted();
  auto k = [&](int j) { return 0.5 * (j + idx.alpha() + idx.beta() + 1.0); };
  return k(n - 1) * (omega_poly(n, flipped) * omega_poly(n - 2, up)) +
         k(n) * (omega_poly(n - 1, flipped) * omega_poly(n - 1, up));
}

std::vector<std::complex<double>> poly_roots(const MuPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("poly_roots: polynomial must have degree >= 1");
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p[i] / p.leading();
  auto roots = dense_eigs(companion);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

namespace {

using HighReal = boost::multiprecision::cpp_bin_float_100;
using HighComplex = boost::multiprecision::cpp_complex_100;

HighReal to_high(const mpq_class& q) {
  return HighReal(q.get_num().get_str()) / HighReal(q.get_den().get_str());
}

}  // namespace

std::vector<std::complex<double>> poly_roots_exact(const ExactMuPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("poly_roots_exact: zero polynomial");
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("poly_roots_exact: polynomial must have degree >= 1");
  std::vector<HighReal> c(d + 1);
  const HighReal lead = to_high(p.leading());
  for (int i = 0; i <= d; ++i) c[i] = to_high(p[i]) / lead;

  // Asymmetric perturbation of the double roots: conjugate-symmetric seeds
  // could never split into two distinct real roots.
  const auto seeds = poly_roots(to_double(p));
  std::vector<HighComplex> z(d);
  for (int k = 0; k < d; ++k) {
    const double angle = 0.7 + 1.3 * k;
    const std::complex<double> s = seeds[k] * (1.0 + 1e-3 * std::polar(1.0, angle));
    z[k] = HighComplex(HighReal(s.real()), HighReal(s.imag()));
  }
  const HighReal tol("1e-60");
  bool converged = false;
  for (int iter = 0; iter < 1000 && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < d; ++k) {
      HighComplex value = HighComplex(c[d]);
      HighComplex slope = HighComplex(0);
      for (int i = d - 1; i >= 0; --i) {
        slope = slope * z[k] + value;
        value = value * z[k] + HighComplex(c[i]);
      }
      if (value == HighComplex(0)) continue;
      const HighComplex ratio = value / slope;
      HighComplex repulsion = HighComplex(0);
      for (int j = 0; j < d; ++j) {
        if (j != k) repulsion += HighComplex(1) / (z[k] - z[j]);
      }
      const HighComplex step = ratio / (HighComplex(1) - ratio * repulsion);
      z[k] -= step;
      if (abs(step) > tol * abs(z[k])) converged = false;
    }
  }
  if (!converged) throw std::runtime_error("poly_roots_exact: Aberth iteration did not converge");
  std::vector<std::complex<double>> roots;
  roots.reserve(d);
  for (const auto& r : z) {
    roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

RootClassification classify_roots(std::span<const std::complex<double>> roots, double real_tol, double gap_tol) {
  RootClassification out;
  out.max_real = -std::numeric_limits<double>::infinity();
  out.min_relative_gap = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) {
    const double ratio = std::abs(r.imag()) / std::max(1.0, std::abs(r));
    out.max_imag_ratio = std::max(out.max_imag_ratio, ratio);
    if (ratio > real_tol) out.all_real = false;
    if (!(r.real() < 0.0)) out.all_negative = false;
    out.max_real = std::max(out.max_real, r.real());
    out.real_parts.push_back(r.real());
  }
  std::sort(out.real_parts.begin(), out.real_parts.end());
  for (std::size_t i = 1; i < out.real_parts.size(); ++i) {
    const double a = out.real_parts[i - 1];
    const double b = out.real_parts[i];
    const double scale = std::max(std::abs(a), std::abs(b));
    const double gap = scale > 0.0 ? (b - a) / scale : 0.0;
    out.min_relative_gap = std::min(out.min_relative_gap, gap);
  }
  if (out.min_relative_gap <= gap_tol) out.distinct = false;
  // Non-real roots come in conjugate pairs with equal real parts; they are
  // never distinct on the real line.
  if (!out.all_real) out.distinct = false;
  return out;
}

}  // namespace gtau
