#include "gtau/spectra.hpp"

#include "gtau/dense_eigs.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gtau {

std::string_view to_string(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::dirichlet: return "dirichlet";
    case BoundaryCondition::neumann: return "neumann";
    case BoundaryCondition::mixed: return "mixed";
  }
  return "unknown";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  if (text == "dirichlet") return BoundaryCondition::dirichlet;
  if (text == "neumann") return BoundaryCondition::neumann;
  if (text == "mixed") return BoundaryCondition::mixed;
  throw std::invalid_argument("unknown boundary condition '" + std::string(text) + "'");
}

namespace {

bool eigen_order(const std::complex<double>& a, const std::complex<double>& b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (ma != mb) return ma < mb;
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<int> sorted_order(const std::vector<std::complex<double>>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return eigen_order(values[a], values[b]); });
  return order;
}

std::vector<std::complex<double>> reciprocals(const std::vector<std::complex<double>>& mus) {
  std::vector<std::complex<double>> out;
  out.reserve(mus.size());
  for (const auto& mu : mus) {
    if (mu == 0.0) throw std::runtime_error("integration matrix has a zero eigenvalue");
    out.push_back(1.0 / mu);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> Spectrum::lambdas() const {
  std::vector<std::complex<double>> out;
  out.reserve(modes.size());
  for (const auto& mode : modes) out.push_back(mode.lambda);
  return out;
}

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (const auto& mode : modes) r = std::max(r, std::abs(mode.lambda));
  return r;
}

int Spectrum::non_real_count(double tol) const {
  int count = 0;
  for (const auto& mode : modes) {
    if (std::abs(mode.lambda.imag()) > tol * std::abs(mode.lambda)) ++count;
  }
  return count;
}

Spectrum make_spectrum(const std::vector<std::complex<double>>& lambdas, std::string source, double real_tolerance) {
  Spectrum s;
  s.source = std::move(source);
  s.real_tolerance = real_tolerance;
  s.modes.reserve(lambdas.size());
  for (int k : sorted_order(lambdas)) {
    const auto lam = lambdas[k];
    SpectrumMode mode;
    mode.lambda = lam;
    mode.mu = lam == 0.0 ? std::complex<double>(std::numeric_limits<double>::infinity(), 0.0) : 1.0 / lam;
    mode.real = std::abs(lam.imag()) <= real_tolerance * std::abs(lam);
    mode.negative = lam.real() < 0.0;
    s.modes.push_back(mode);
  }
  return s;
}

Spectrum tau_spectrum(int m, GegenbauerIndex idx, Parity parity, BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::dirichlet: {
      const auto mus = dense_eigs(build_gi2(m, idx, parity).square());
      return make_spectrum(reciprocals(mus), "integration");
    }
    case BoundaryCondition::neumann: {
      const Parity flipped = parity == Parity::even ? Parity::odd : Parity::even;
      auto lambdas = reciprocals(dense_eigs(build_gi2(m, GegenbauerIndex(idx.gamma() + 1.0), flipped).square()));
      if (parity == Parity::even) lambdas.emplace_back(0.0, 0.0);
      return make_spectrum(lambdas, "integration-neumann");
    }
    case BoundaryCondition::mixed:
      break;
  }
  throw std::invalid_argument("tau_spectrum: mixed boundary conditions have no parity-separated operator; use "
                              "mixed_char_poly");
}

namespace {

// X = B^{-1} A using the recorded structure of B.
Eigen::MatrixXd solve_with_structure(const GeneralizedPencil& p) {
  const Eigen::Index n = p.b.rows();
  const double eps = std::numeric_limits<double>::epsilon();
  auto singular = [&]() {
    return std::runtime_error("pencil_spectrum: B is singular for variant " + std::string(to_string(p.variant)));
  };
  switch (p.b_structure) {
    case MatrixStructure::identity:
      return p.a;
    case MatrixStructure::diagonal: {
      const Eigen::VectorXd d = p.b.diagonal();
      const double scale = d.cwiseAbs().maxCoeff();
      if (!(scale > 0.0) || d.cwiseAbs().minCoeff() <= n * eps * scale) throw singular();
      return d.cwiseInverse().asDiagonal() * p.a;
    }
    case MatrixStructure::tridiagonal: {
      const auto nn = static_cast<lapack_int>(n);
      std::vector<double> dl(n > 0 ? n - 1 : 0), dm(n), du(n > 0 ? n - 1 : 0);
      for (Eigen::Index i = 0; i < n; ++i) dm[i] = p.b(i, i);
      for (Eigen::Index i = 0; i + 1 < n; ++i) {
        dl[i] = p.b(i + 1, i);
        du[i] = p.b(i, i + 1);
      }
      Eigen::MatrixXd x = p.a;
      const lapack_int info =
          LAPACKE_dgtsv(LAPACK_COL_MAJOR, nn, nn, dl.data(), dm.data(), du.data(), x.data(), nn);
      if (info != 0) throw singular();
      return x;
    }
    default: {
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(p.b);
      if (!(lu.rcond() > n * eps)) throw singular();
      return lu.solve(p.a);
    }
  }
}

}  // namespace

Spectrum pencil_spectrum(const GeneralizedPencil& pencil) {
  if (pencil.a.rows() != pencil.a.cols() || pencil.b.rows() != pencil.b.cols() ||
      pencil.a.rows() != pencil.b.rows()) {
    throw std::invalid_argument("pencil_spectrum: A and B must be square of equal size");
  }
  const std::string source(to_string(pencil.variant));
  if (pencil.variant == PencilVariant::integration) {
    // A a = lambda M a  <=>  M a = (1/lambda) a when A = I.
    if (pencil.a_structure != MatrixStructure::identity) {
      throw std::invalid_argument("pencil_spectrum: integration pencil requires A = I");
    }
    const auto mus = dense_eigs(pencil.b);
    for (const auto& mu : mus) {
      if (mu == 0.0) throw std::runtime_error("pencil_spectrum: M is singular for variant integration");
    }
    return make_spectrum(reciprocals(mus), source);
  }
  return make_spectrum(dense_eigs(solve_with_structure(pencil)), source);
}

std::vector<double> exact_spectrum(int k_max, Parity parity) {
  if (k_max < 1) throw std::invalid_argument("exact_spectrum: k_max must be >= 1");
  constexpr double pi = std::numbers::pi;
  std::vector<double> out;
  out.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    const double w = parity == Parity::even ? (2.0 * k - 1.0) * pi / 2.0 : k * pi;
    out.push_back(-w * w);
  }
  return out;
}

std::vector<double> exact_spectrum(int k_max, Parity parity, BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::dirichlet: return exact_spectrum(k_max, parity);
    case BoundaryCondition::neumann: {
      if (k_max < 1) throw std::invalid_argument("exact_spectrum: k_max must be >= 1");
      if (parity == Parity::odd) return exact_spectrum(k_max, Parity::even);
      std::vector<double> out{0.0};
      const auto rest = exact_spectrum(k_max - 1 > 0 ? k_max - 1 : 1, Parity::odd);
      out.insert(out.end(), rest.begin(), rest.begin() + (k_max - 1));
      return out;
    }
    case BoundaryCondition::mixed: break;
  }
  throw std::invalid_argument("exact_spectrum: mixed boundary conditions are not parity-separated");
}

EigenPair eigenfunction(int j, int m, GegenbauerIndex idx, Parity parity) {
  const TauMatrix gi2 = build_gi2(m, idx, parity);
  const EigenDecomposition dec = dense_eigs_with_vectors(gi2.square());
  const auto lambdas = reciprocals(dec.values);
  if (j < 0 || j >= m) throw std::out_of_range("eigenfunction: mode index out of range");
  const int k = sorted_order(lambdas)[j];

  EigenPair pair;
  pair.lambda = lambdas[k];
  Eigen::VectorXcd c = dec.vectors.col(k);
  Eigen::VectorXcd u = apply_double_integration(c, gi2);
  Eigen::Index at = 0;
  u.cwiseAbs().maxCoeff(&at);
  const std::complex<double> scale = u(at);
  pair.c_coeffs = c / scale;
  pair.u_coeffs = u / scale;
  return pair;
}

std::complex<double> evaluate_expansion(const Eigen::VectorXcd& coeffs, GegenbauerIndex idx, Parity parity,
                                        double x) {
  std::complex<double> sum = 0.0;
  for (Eigen::Index l = 0; l < coeffs.size(); ++l) {
    sum += coeffs(l) * gegenbauer_eval(mode_degree(static_cast<int>(l), parity), idx, x);
  }
  return sum;
}

}  // namespace gtau
