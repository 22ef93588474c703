#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtau/orthopoly.hpp"
#include "oracles.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace gtau;
using doctest::Approx;

namespace {

std::vector<double> random_grid(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> xs{-1.0, 0.0, 1.0};
  for (int i = 0; i < count; ++i) xs.push_back(u(rng));
  return xs;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("index validation") {
  CHECK_THROWS_AS(GegenbauerIndex(-0.5), std::domain_error);
  CHECK_THROWS_AS(GegenbauerIndex(-1.0), std::domain_error);
  CHECK_NOTHROW(GegenbauerIndex(-0.49));
  CHECK_THROWS_AS(JacobiIndex(-1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(JacobiIndex(0.0, -1.5), std::domain_error);
  CHECK(parse_parity("odd") == Parity::odd);
  CHECK_THROWS(parse_parity("both"));
}

TEST_CASE("gegenbauer_eval examples") {
  CHECK(gegenbauer_eval(2, GegenbauerIndex(1.0), 1.0) == Approx(1.5));
  CHECK(gegenbauer_eval(3, GegenbauerIndex(0.0), 0.5) == Approx(-1.0 / 3.0));
  for (double x : random_grid(7, 10)) {
    CHECK(gegenbauer_eval(5, GegenbauerIndex(0.5), x) == Approx(oracle::legendre(5, x)).epsilon(1e-13));
  }
  CHECK(gegenbauer_eval(0, GegenbauerIndex(2.0), 0.3) == 1.0);
  CHECK(gegenbauer_eval(1, GegenbauerIndex(2.0), 0.3) == 0.3);
}

TEST_CASE("special-case identities against classical recurrences") {
  const auto xs = random_grid(11, 40);
  for (int n = 1; n <= 30; ++n) {
    for (double x : xs) {
      const double t = oracle::cheb_t(n, x) / n;
      CHECK(std::abs(gegenbauer_eval(n, GegenbauerIndex(0.0), x) - t) <= 1e-12 * std::max(1.0, std::abs(t)));
      const double p = oracle::legendre(n, x);
      CHECK(std::abs(gegenbauer_eval(n, GegenbauerIndex(0.5), x) - p) <= 1e-12 * std::max(1.0, std::abs(p)));
      const double u = oracle::cheb_u(n, x) / 2;
      CHECK(std::abs(gegenbauer_eval(n, GegenbauerIndex(1.0), x) - u) <= 1e-12 * std::max(1.0, std::abs(u)));
    }
  }
}

TEST_CASE("classical Gegenbauer normalization for general index") {
  for (double g : {-0.3, 0.25, 1.7, 2.5}) {
    for (int n = 0; n <= 20; ++n) {
      for (double x : {-0.9, -0.2, 0.4, 1.0}) {
        const double ref = oracle::gegenbauer_classical(n, g, x);
        CHECK(rel(gegenbauer_eval(n, GegenbauerIndex(g), x), ref) <= 1e-11);
      }
    }
  }
}

TEST_CASE("gegenbauer_at_one") {
  CHECK(gegenbauer_at_one(0, GegenbauerIndex(0.7)) == 1.0);
  CHECK(gegenbauer_at_one(2, GegenbauerIndex(1.0)) == Approx(1.5));
  CHECK(gegenbauer_at_one(7, GegenbauerIndex(0.5)) == Approx(1.0));
  for (double g : {-0.49, 0.0, 0.5, 1.0, 1.5, 2.5}) {
    for (int n = 0; n <= 50; ++n) {
      const double a = gegenbauer_at_one(n, GegenbauerIndex(g));
      const double b = gegenbauer_eval(n, GegenbauerIndex(g), 1.0);
      CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
  }
}

TEST_CASE("parity symmetry") {
  for (double g : {-0.49, 0.0, 0.5, 1.3, 2.5}) {
    for (int n = 0; n <= 30; ++n) {
      for (double x : random_grid(3, 8)) {
        const double a = gegenbauer_eval(n, GegenbauerIndex(g), x);
        const double b = gegenbauer_eval(n, GegenbauerIndex(g), -x);
        CHECK(std::abs(b - (n % 2 ? -a : a)) <= 1e-13 * std::max(1.0, std::abs(a)));
      }
    }
  }
}

TEST_CASE("gegenbauer_norm") {
  CHECK(gegenbauer_norm(1, GegenbauerIndex(0.5)) == Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(gegenbauer_norm(0, GegenbauerIndex(0.5)) == Approx(2.0).epsilon(1e-14));

  const auto q = oracle::gauss_chebyshev(64);
  double h3 = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const double t = oracle::cheb_t(3, q.nodes[i]) / 3;
    h3 += q.weights[i] * t * t;
  }
  CHECK(h3 == Approx(std::numbers::pi / 18).epsilon(1e-14));
  CHECK(gegenbauer_norm(3, GegenbauerIndex(0.0)) == Approx(h3).epsilon(1e-13));

  CHECK(std::log(gegenbauer_norm(12, GegenbauerIndex(1.5))) ==
        Approx(log_gegenbauer_norm(12, GegenbauerIndex(1.5))).epsilon(1e-12));
  CHECK(std::isfinite(log_gegenbauer_norm(5000, GegenbauerIndex(2.5))));
}

TEST_CASE("orthogonality by Gauss quadrature") {
  for (double g : {-0.25, 0.0, 0.5, 1.0, 2.0}) {
    const auto q = oracle::gauss_gegenbauer(32, g);
    const GegenbauerIndex idx(g);
    for (int a = 0; a <= 20; ++a) {
      const double ha = gegenbauer_norm(a, idx);
      for (int b = 0; b <= a; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
          s += q.weights[i] * gegenbauer_eval(a, idx, q.nodes[i]) * gegenbauer_eval(b, idx, q.nodes[i]);
        }
        const double scale = std::sqrt(ha * gegenbauer_norm(b, idx));
        if (a == b) {
          CHECK(std::abs(s - ha) <= 1e-10 * ha);
        } else {
          CHECK(std::abs(s) <= 1e-10 * scale);
        }
      }
    }
  }
}

TEST_CASE("jacobi_eval") {
  CHECK(jacobi_eval(0, JacobiIndex(0.3, -0.7), 0.4) == 1.0);
  CHECK(jacobi_eval(2, JacobiIndex(0.0, 0.0), 1.0) == Approx(1.0));
  CHECK(jacobi_eval(4, JacobiIndex(-0.5, 0.5), 0.3) ==
        Approx(oracle::jacobi_sum(4, -0.5, 0.5, 0.3)).epsilon(1e-13));
  for (double a : {-0.9, -0.3, 0.0, 1.0, 2.5}) {
    for (double b : {-0.6, 0.0, 0.8}) {
      for (int n = 0; n <= 15; ++n) {
        for (double x : {-1.0, -0.4, 0.1, 0.77, 1.0}) {
          CHECK(rel(jacobi_eval(n, JacobiIndex(a, b), x), oracle::jacobi_sum(n, a, b, x)) <= 1e-11);
        }
      }
    }
  }
}

TEST_CASE("jacobi_deriv_at_one") {
  CHECK(jacobi_deriv_at_one(2, JacobiIndex(0, 0), 2) == Approx(3.0));
  CHECK(jacobi_deriv_at_one(1, JacobiIndex(0, 0), 1) == Approx(1.0));
  CHECK(jacobi_deriv_at_one(3, JacobiIndex(0.2, 0.1), 4) == 0.0);

  const JacobiIndex idx(0.3, -0.2);
  auto f = [&](double x) { return jacobi_eval(5, idx, x); };
  const double fd = oracle::fd_derivative(f, 1.0, 3, 0.05, 4);
  CHECK(std::abs(jacobi_deriv_at_one(5, idx, 3) - fd) <= 1e-6 * std::abs(fd));

  // Monomial expansion differentiated exactly.
  for (double a : {-0.5, 0.0, 0.7}) {
    for (double b : {-0.8, 0.4}) {
      for (int n = 0; n <= 10; ++n) {
        auto p = oracle::jacobi_monomial(n, a, b);
        for (int k = 0; k <= n; ++k) {
          CHECK(rel(jacobi_deriv_at_one(n, JacobiIndex(a, b), k), oracle::poly_eval(p, 1.0)) <= 1e-10);
          p = oracle::poly_diff(p);
        }
      }
    }
  }
}

TEST_CASE("exact rational evaluation agrees with double recurrence") {
  const mpq_class g(3, 4), x(1, 3);
  for (int n = 0; n <= 40; ++n) {
    const double exact = gegenbauer_value<mpq_class>(n, g, x).get_d();
    CHECK(rel(gegenbauer_eval(n, GegenbauerIndex(0.75), 1.0 / 3.0), exact) <= 1e-13);
  }
  CHECK(gegenbauer_value_at_one<mpq_class>(2, mpq_class(1)) == mpq_class(3, 2));
  CHECK(gegenbauer_value<mpq_class>(3, mpq_class(0), mpq_class(1, 2)) == mpq_class(-1, 3));
}

TEST_CASE("derivative connection matrices") {
  const GegenbauerIndex idx(0.8);
  const double g = idx.gamma();
  const auto d2e = gegenbauer_second_derivative_matrix(6, idx, Parity::even);
  CHECK(d2e(0, 1) == Approx(2 * (g + 1)));
  CHECK(d2e.col(1).tail(5).norm() == 0.0);
  const auto d2o = gegenbauer_second_derivative_matrix(6, idx, Parity::odd);
  CHECK(d2o.col(0).norm() == 0.0);
  CHECK(d2o(0, 1) == Approx(4 * (g + 1) * (g + 2)));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      CHECK(d2e(i, j) == 0.0);
      CHECK(d2o(i, j) == 0.0);
    }
  }
}

TEST_CASE("second derivative reproduces the inverse three-term map") {
  for (double g : {-0.25, 0.0, 0.5, 1.0, 2.2}) {
    const GegenbauerIndex idx(g);
    const Eigen::MatrixXd d = gegenbauer_derivative_matrix(17, idx, Parity::odd);
    const Eigen::MatrixXd d2 = d * d;
    REQUIRE(d2.rows() >= 33);
    for (int n = 0; n <= 30; ++n) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(d2.rows());
      if (n == 0) {
        e(2) = 1 / (2 * (g + 1));
      } else if (n == 1) {
        e(3) = 1 / (4 * (g + 1) * (g + 2));
      } else {
        e(n + 2) = 1 / (4 * (g + n + 1) * (g + n));
        e(n) = -1 / (2 * (g + n + 1) * (g + n - 1));
        e(n - 2) = 1 / (4 * (g + n) * (g + n - 1));
      }
      const Eigen::VectorXd r = d2 * e;
      Eigen::VectorXd expect = Eigen::VectorXd::Zero(d2.rows());
      expect(n) = 1.0;
      CHECK((r - expect).lpNorm<Eigen::Infinity>() <= 1e-11);
    }
  }
}

TEST_CASE("derivative matrix against values") {
  // Column j of D holds coefficients of D G_j; compare at sample points with
  // finite differences of the evaluated polynomial.
  const GegenbauerIndex idx(1.25);
  const Eigen::MatrixXd d = gegenbauer_derivative_matrix(5, idx, Parity::even);
  for (int j = 0; j < d.cols(); ++j) {
    for (double x : {-0.6, 0.1, 0.9}) {
      double s = 0.0;
      for (int i = 0; i < d.rows(); ++i) s += d(i, j) * gegenbauer_eval(i, idx, x);
      auto f = [&](double t) { return gegenbauer_eval(j, idx, t); };
      CHECK(s == Approx(oracle::fd_derivative(f, x, 1, 1e-2, 6)).epsilon(1e-8).scale(1.0));
    }
  }
}
