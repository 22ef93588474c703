#pragma once

#include "gtau/orthopoly.hpp"
#include "gtau/tau_operator.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace gtau {

enum class BoundaryCondition { dirichlet, neumann, mixed };

std::string_view to_string(BoundaryCondition bc);
BoundaryCondition parse_boundary_condition(std::string_view text);

struct SpectrumMode {
  std::complex<double> lambda;
  std::complex<double> mu;  // 1 / lambda; infinite for the Neumann constant mode
  bool real = false;
  bool negative = false;
};

/// Eigenvalues sorted by ascending |lambda| (ties: real part, then imaginary part).
struct Spectrum {
  std::vector<SpectrumMode> modes;
  std::string source;
  double real_tolerance = 1e-6;

  std::size_t size() const { return modes.size(); }
  std::vector<std::complex<double>> lambdas() const;
  /// Largest |lambda|.
  double spectral_radius() const;
  /// Number of modes with |Im lambda| > tol * |lambda|.
  int non_real_count(double tol) const;
};

/// Builds a sorted, classified spectrum from raw eigenvalues.
Spectrum make_spectrum(const std::vector<std::complex<double>>& lambdas, std::string source,
                       double real_tolerance = 1e-6);

/// Dirichlet: lambda = 1/mu over the eigenvalues mu of the square integration
/// matrix. Neumann: the Dirichlet spectrum at gamma + 1 for the opposite parity
/// (D u is odd when u is even), plus lambda = 0 for the even constant mode.
Spectrum tau_spectrum(int m, GegenbauerIndex idx, Parity parity,
                      BoundaryCondition bc = BoundaryCondition::dirichlet);

/// A a = lambda B a, reduced with B's recorded structure. The integration
/// pencil (I, M) returns 1/mu. Throws std::runtime_error naming the variant
/// when B (or M) is numerically singular.
Spectrum pencil_spectrum(const GeneralizedPencil& pencil);

/// First k_max exact eigenvalues of u'' = lambda u, u(+-1) = 0, for one parity.
std::vector<double> exact_spectrum(int k_max, Parity parity);

/// Neumann: 0, -pi^2, -4 pi^2, ... (even) and -(2k-1)^2 pi^2 / 4 (odd).
std::vector<double> exact_spectrum(int k_max, Parity parity, BoundaryCondition bc);

struct EigenPair {
  std::complex<double> lambda;
  Eigen::VectorXcd c_coeffs;  // coefficients of D^2 u on G_{n(0)} .. G_{n(m-1)}
  Eigen::VectorXcd u_coeffs;  // coefficients of u on G_{n(0)} .. G_{n(m)}, unit max modulus
};

/// j-th mode (0-based, in tau_spectrum order) of the Dirichlet problem.
EigenPair eigenfunction(int j, int m, GegenbauerIndex idx, Parity parity);

/// sum_l coeffs_l G_{n(l)}(x).
std::complex<double> evaluate_expansion(const Eigen::VectorXcd& coeffs, GegenbauerIndex idx, Parity parity, double x);

}  // namespace gtau
