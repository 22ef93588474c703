#include "gtau/orthopoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gtau {

namespace {

double finite_or_throw(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::overflow_error(std::string(what) + ": result not representable in double precision");
  }
  return value;
}

}  // namespace

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

GegenbauerIndex::GegenbauerIndex(double gamma) : gamma_(gamma) {
  if (!(gamma > -0.5) || !std::isfinite(gamma)) {
    throw std::domain_error("Gegenbauer index requires gamma > -1/2, got " + std::to_string(gamma));
  }
}

JacobiIndex::JacobiIndex(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::domain_error("Jacobi index requires alpha, beta > -1, got (" + std::to_string(alpha) +
                            ", " + std::to_string(beta) + ")");
  }
}

JacobiIndex to_jacobi(GegenbauerIndex idx) { return {idx.gamma() - 0.5, idx.gamma() - 0.5}; }

double gegenbauer_eval(int n, GegenbauerIndex idx, double x) {
  return finite_or_throw(gegenbauer_value(n, idx.gamma(), x), "gegenbauer_eval");
}

double gegenbauer_at_one(int n, GegenbauerIndex idx) {
  return finite_or_throw(gegenbauer_value_at_one(n, idx.gamma()), "gegenbauer_at_one");
}

double log_gegenbauer_norm(int n, GegenbauerIndex idx) {
  if (n < 0) throw std::invalid_argument("gegenbauer_norm: negative degree");
  const double g = idx.gamma();
  if (n == 0) {
    // int (1-x^2)^{g-1/2} dx = sqrt(pi) Gamma(g+1/2) / Gamma(g+1)
    return 0.5 * std::log(std::numbers::pi) + std::lgamma(g + 0.5) - std::lgamma(g + 1.0);
  }
  // pi 2^{-1-2g} Gamma(n+2g) / ((n+g) n! Gamma(g+1)^2); the gamma^2 Gamma(g)^2
  // of the textbook form is folded into Gamma(g+1)^2.
  return std::log(std::numbers::pi) - (1.0 + 2.0 * g) * std::numbers::ln2 + std::lgamma(n + 2.0 * g) -
         std::log(n + g) - std::lgamma(n + 1.0) - 2.0 * std::lgamma(g + 1.0);
}

double gegenbauer_norm(int n, GegenbauerIndex idx) {
  return finite_or_throw(std::exp(log_gegenbauer_norm(n, idx)), "gegenbauer_norm");
}

double jacobi_eval(int n, JacobiIndex idx, double x) {
  return finite_or_throw(jacobi_value(n, idx.alpha(), idx.beta(), x), "jacobi_eval");
}

double jacobi_deriv_at_one(int n, JacobiIndex idx, int k) {
  return finite_or_throw(jacobi_derivative_at_one(n, idx.alpha(), idx.beta(), k), "jacobi_deriv_at_one");
}

Eigen::MatrixXd gegenbauer_derivative_matrix(int m, GegenbauerIndex idx, Parity parity) {
  if (m < 1) throw std::invalid_argument("gegenbauer_derivative_matrix: m must be >= 1");
  const int degrees = 2 * m - 1 + parity_offset(parity);
  const double g = idx.gamma();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(degrees, degrees);
  // D G_1 = G_0; D G_{n+1} = 2 (n + gamma) G_n + D G_{n-1} for n >= 1.
  if (degrees > 1) d(0, 1) = 1.0;
  for (int j = 2; j < degrees; ++j) {
    d.col(j) = d.col(j - 2);
    d(j - 1, j) += 2.0 * (j - 1 + g);
  }
  return d;
}

Eigen::MatrixXd gegenbauer_second_derivative_matrix(int m, GegenbauerIndex idx, Parity parity) {
  const Eigen::MatrixXd d = gegenbauer_derivative_matrix(m, idx, parity);
  const Eigen::MatrixXd d2 = d * d;
  Eigen::MatrixXd out(m, m);
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) out(k, l) = d2(mode_degree(k, parity), mode_degree(l, parity));
  }
  return out;
}

Eigen::MatrixXd gegenbauer_multiply_x_matrix(int degrees, GegenbauerIndex idx) {
  if (degrees < 1) throw std::invalid_argument("gegenbauer_multiply_x_matrix: degrees must be >= 1");
  const double g = idx.gamma();
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(degrees, degrees);
  auto put = [&](int row, int col, double v) {
    if (row < degrees) x(row, col) = v;
  };
  // x G_0 = G_1
  put(1, 0, 1.0);
  // x G_1 = G_2 / (gamma+1) + G_0 / (2 (gamma+1))
  if (degrees > 1) {
    put(2, 1, 1.0 / (g + 1.0));
    put(0, 1, 0.5 / (g + 1.0));
  }
  // x G_n = [(n+1) G_{n+1} + (n-1+2 gamma) G_{n-1}] / (2 (n+gamma)), n >= 2
  for (int n = 2; n < degrees; ++n) {
    put(n + 1, n, (n + 1.0) / (2.0 * (n + g)));
    put(n - 1, n, (n - 1.0 + 2.0 * g) / (2.0 * (n + g)));
  }
  return x;
}

}  // namespace gtau
