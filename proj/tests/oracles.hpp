#pragma once
// Independent reference computations for the test suites. Nothing here calls
// into gtau; each routine is a textbook construction.

#include <Eigen/Dense>
#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

inline double legendre(int n, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

inline double cheb_t(int n, double x) {
  if (n == 0) return 1.0;
  double t0 = 1.0, t1 = x;
  for (int k = 1; k < n; ++k) {
    const double t2 = 2 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

inline double cheb_u(int n, double x) {
  if (n == 0) return 1.0;
  double u0 = 1.0, u1 = 2 * x;
  for (int k = 1; k < n; ++k) {
    const double u2 = 2 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

/// Classical Gegenbauer C_n^{(g)} rescaled by 1/(2g); T_n/n at g = 0.
inline double gegenbauer_classical(int n, double g, double x) {
  if (n == 0) return 1.0;
  if (g == 0.0) return cheb_t(n, x) / n;
  double c0 = 1.0, c1 = 2 * g * x;
  for (int k = 1; k < n; ++k) {
    const double c2 = (2 * x * (k + g) * c1 - (k + 2 * g - 1) * c0) / (k + 1);
    c0 = c1;
    c1 = c2;
  }
  return c1 / (2 * g);
}

inline double binom(double top, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (top - i) / (i + 1);
  return r;
}

/// P_n^{(a,b)}(x) = sum_s binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}.
inline double jacobi_sum(int n, double a, double b, double x) {
  double acc = 0.0;
  for (int s = 0; s <= n; ++s) {
    acc += binom(n + a, n - s) * binom(n + b, s) * std::pow((x - 1) / 2, s) * std::pow((x + 1) / 2, n - s);
  }
  return acc;
}

using Poly = std::vector<double>;  // ascending powers of x

inline Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

inline Poly poly_pow(const Poly& p, int k) {
  Poly r{1.0};
  for (int i = 0; i < k; ++i) r = poly_mul(r, p);
  return r;
}

inline Poly poly_diff(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = i * p[i];
  return r;
}

inline double poly_eval(const Poly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Monomial coefficients of P_n^{(a,b)} from the binomial sum.
inline Poly jacobi_monomial(int n, double a, double b) {
  Poly r(n + 1, 0.0);
  const Poly xm{-0.5, 0.5}, xp{0.5, 0.5};
  for (int s = 0; s <= n; ++s) {
    const Poly term = poly_mul(poly_pow(xm, s), poly_pow(xp, n - s));
    const double c = binom(n + a, n - s) * binom(n + b, s);
    for (std::size_t i = 0; i < term.size(); ++i) r[i] += c * term[i];
  }
  return r;
}

/// Coefficients in mu of sum_k mu^k D^{2k} P(x0) for a polynomial P in x.
inline std::vector<double> even_derivative_series(Poly p, double x0) {
  std::vector<double> out;
  while (true) {
    out.push_back(poly_eval(p, x0));
    p = poly_diff(poly_diff(p));
    if (p.size() == 1 && p[0] == 0.0) break;
  }
  return out;
}

inline std::vector<double> mu_mul(const std::vector<double>& p, const std::vector<double>& q) { return poly_mul(p, q); }

/// Jacobi Tau characteristic polynomial through the 2x2 boundary determinant.
/// u = -mu sum_k mu^k D^{2k} (t0 P_n + t1 P_{n-1}); u(1) = u(-1) = 0 has a
/// non-trivial (t0, t1) iff the determinant vanishes. The sign (-1)^{n-1}
/// makes the leading coefficient positive.
inline std::vector<double> jacobi_tau_determinant(int n, double a, double b) {
  const Poly pn = jacobi_monomial(n, a, b), pm = jacobi_monomial(n - 1, a, b);
  const auto a11 = even_derivative_series(pn, 1.0), a12 = even_derivative_series(pm, 1.0);
  const auto a21 = even_derivative_series(pn, -1.0), a22 = even_derivative_series(pm, -1.0);
  auto d1 = mu_mul(a11, a22), d2 = mu_mul(a12, a21);
  d1.resize(std::max(d1.size(), d2.size()), 0.0);
  for (std::size_t i = 0; i < d2.size(); ++i) d1[i] -= d2[i];
  const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
  for (auto& c : d1) c *= sign;
  while (d1.size() > 1 && d1.back() == 0.0) d1.pop_back();
  return d1;
}

/// Fornberg weights for the k-th derivative at z from nodes x.
inline std::vector<double> fd_weights(double z, const std::vector<double>& x, int k) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(k + 1, 0.0));
  double c1 = 1.0, c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, k);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s) c[i][s] = c1 * (s * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int s = mn; s >= 1; --s) c[j][s] = (c4 * c[j][s] - s * c[j][s - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][k];
  return w;
}

inline double fd_derivative(const std::function<double(double)>& f, double z, int k, double h, int half_width) {
  std::vector<double> nodes;
  for (int i = -half_width; i <= half_width; ++i) nodes.push_back(z + i * h);
  const auto w = fd_weights(z, nodes, k);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += w[i] * f(nodes[i]);
  return acc;
}

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule for (1-x^2)^{g-1/2} by Golub-Welsch on the monic Jacobi matrix.
inline Quadrature gauss_gegenbauer(int n, double g) {
  const double a = g - 0.5;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double beta;
    if (k == 1) {
      beta = 1.0 / (3.0 + 2 * a);
    } else {
      beta = k * (k + 2 * a) / ((2 * k + 2 * a + 1) * (2 * k + 2 * a - 1));
    }
    j(k, k - 1) = j(k - 1, k) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  const double mu0 = std::exp((2 * a + 1) * std::log(2.0) + 2 * std::lgamma(a + 1) - std::lgamma(2 * a + 2));
  Quadrature q;
  for (int i = 0; i < n; ++i) {
    q.nodes.push_back(es.eigenvalues()(i));
    q.weights.push_back(mu0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i));
  }
  return q;
}

inline Quadrature gauss_chebyshev(int n) {
  Quadrature q;
  for (int j = 1; j <= n; ++j) {
    q.nodes.push_back(std::cos((2 * j - 1) * std::numbers::pi / (2 * n)));
    q.weights.push_back(std::numbers::pi / n);
  }
  return q;
}

/// Real roots of f on [lo, hi]: sign changes on a uniform scan, refined by
/// bisection until the bracket is below tol.
inline std::vector<double> bisect_roots(const std::function<double(double)>& f, double lo, double hi, int samples,
                                        double tol) {
  std::vector<double> roots;
  double x0 = lo, f0 = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x1 = lo + (hi - lo) * i / samples;
    const double f1 = f(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if ((f0 < 0) != (f1 < 0) && f1 != 0.0) {
      double a = x0, b = x1, fa = f0;
      while (b - a > tol * std::max(1.0, std::abs(a))) {
        const double c = 0.5 * (a + b);
        const double fc = f(c);
        if ((fc < 0) == (fa < 0)) {
          a = c;
          fa = fc;
        } else {
          b = c;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

/// Line-by-line port of the published buildGI2(MG, g, ip) listing. Vectors
/// keep the listing's 1-based names via explicit offsets. The listing leaves
/// K3 undefined when MG = 2, which only matters for ip = 1; it is computed
/// unconditionally here.
inline Eigen::MatrixXd build_gi2_listing(int MG, double g, int ip) {
  const int len = MG - 1;
  std::vector<double> n(len), dm(len), d0(len), dp(len);
  for (int i = 0; i < len; ++i) {
    n[i] = 2 * (i + 1) + ip;
    dm[i] = 1.0 / (4 * (g + n[i] + 1) * (g + n[i]));
    d0[i] = -1.0 / (2 * (g + n[i] + 1) * (g + n[i] - 1));
    dp[i] = 1.0 / (4 * (g + n[i]) * (g + n[i] - 1));
  }
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(len, len);
  for (int i = 0; i < len; ++i) T(i, i) = d0[i];
  for (int i = 0; i + 1 < len; ++i) {
    T(i + 1, i) = dm[i];      // diag(dm(1:MG-2),-1)
    T(i, i + 1) = dp[i + 1];  // diag(dp(2:MG-1),1)
  }
  const double K3 = (2 * g - 1) * (3 - 2 * g) / 120;
  std::vector<double> Kn(std::max(MG - 2, 0), 0.0);
  if (MG > 2) {
    Kn[0] = ip == 0 ? (4 * g * g - 1) * (3 - 2 * g) / 720 : K3 * (2 * g + 2) * (2 * g + 1) / 42;
    for (int m = 2; m <= MG - 2; ++m) {
      const double nn = 2 * m + ip;
      Kn[m - 1] = Kn[m - 2] * (2 * g + nn - 1) * (2 * g + nn - 2) / ((nn + 4) * (nn + 3));
    }
  }
  double M00, M01, M10;
  if (ip == 0) {
    M00 = -(2 * g + 1) / (4 * g + 4);
    M01 = (7 - g - 2 * g * g) * (1 + 2 * g) / (48 * (2 + g) * (1 + g));
    M10 = 1 / (2 * g + 2);
  } else {
    M00 = -(2 * g + 1) / (12 * g + 24);
    M01 = 1 / (4 * (g + 3) * (g + 2)) + K3;
    M10 = 1 / (4 * (g + 1) * (g + 2));
  }
  Eigen::MatrixXd GI2 = Eigen::MatrixXd::Zero(MG + 1, MG);
  GI2(0, 0) = M00;
  GI2(0, 1) = M01;
  for (int i = 0; i < MG - 2; ++i) GI2(0, 2 + i) = Kn[i];
  GI2(1, 0) = M10;
  GI2.block(1, 1, len, len) = T;
  GI2(MG, MG - 1) = dm[len - 1];
  return GI2;
}

// Relative left-eigenvector residual |row M - mu row| / (|row| |M|) for the
// row [p_0(mu), ..., p_{m-1}(mu)], with mu the root of p_m nearest mu0.
// The root is polished by Newton's method in 256-bit floats and the whole
// residual is formed at that precision, so rounding mu to double does not
// leak p_m(mu) into the last column. coeffs[k] holds p_k, constant first.
inline double left_eigen_residual(const Eigen::MatrixXd& M, const std::vector<std::vector<mpq_class>>& coeffs,
                                  double mu0) {
  const unsigned bits = 256;
  const int m = static_cast<int>(M.rows());
  auto horner = [&](const std::vector<mpq_class>& c, const mpf_class& x, mpf_class& d) {
    mpf_class v(0, bits);
    d = mpf_class(0, bits);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      d = d * x + v;
      v = v * x + mpf_class(*it, bits);
    }
    return v;
  };
  mpf_class mu(mu0, bits), d(0, bits);
  for (int it = 0; it < 60; ++it) {
    const mpf_class step = horner(coeffs[m], mu, d) / d;
    mu -= step;
    if (abs(step) <= abs(mu) * 1e-70) break;
  }
  std::vector<mpf_class> row;
  for (int k = 0; k < m; ++k) row.push_back(horner(coeffs[k], mu, d));
  mpf_class rnorm2(0, bits), res2(0, bits);
  for (int k = 0; k < m; ++k) rnorm2 += row[k] * row[k];
  for (int j = 0; j < m; ++j) {
    mpf_class acc(0, bits);
    for (int i = 0; i < m; ++i) acc += row[i] * mpf_class(M(i, j), bits);
    acc -= mu * row[j];
    res2 += acc * acc;
  }
  return std::sqrt(res2.get_d()) / (std::sqrt(rnorm2.get_d()) * M.norm());
}

}  // namespace oracle
