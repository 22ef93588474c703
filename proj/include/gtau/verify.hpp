#pragma once

#include "gtau/charpoly.hpp"
#include "gtau/orthopoly.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gtau {

using Json = nlohmann::ordered_json;

/// Real polynomial in z (stability checks) shares the coefficient container.
using ZPolynomial = BasicPolynomial<double>;

enum class Inequality { less, greater };

/// passed <=> margin < tolerance (less) or margin > tolerance (greater).
struct VerificationReport {
  std::string check_name;
  Json parameters = Json::object();
  bool passed = false;
  double margin = 0.0;
  double tolerance = 0.0;
  Inequality direction = Inequality::less;
  std::string detail;

  Json to_json() const;
};

VerificationReport make_report(std::string name, Json parameters, double margin, double tolerance,
                               Inequality direction, std::string detail = {});

inline constexpr double kStabilityTolerance = 1e-9;
inline constexpr double kPairGapTolerance = 1e-8;

/// 1 + max_i |p_i / p_d|: every root lies within this radius.
double cauchy_bound(const ZPolynomial& p);

/// Hurwitz test: margin = max Re(root), passed iff margin < -tol_rel * cauchy_bound(p).
/// Throws std::invalid_argument for the zero polynomial or a constant.
VerificationReport check_stable(const ZPolynomial& p, double tol_rel = kStabilityTolerance);

/// Positive-pair test on precomputed roots. Roots of om1 and om2 must be real
/// (|Im| <= real_tol * max(1, |r|)); the merged sequence must alternate with the
/// largest root belonging to om1 and all roots negative. margin is the smallest
/// relative gap of the merged sequence (including the gap from the largest root
/// to 0); it is -1 when a root is non-real or the leading signs differ.
VerificationReport check_root_pair(std::span<const std::complex<double>> roots1, double lead1,
                                   std::span<const std::complex<double>> roots2, double lead2,
                                   double gap_tol = kPairGapTolerance, double real_tol = kRealRootTolerance);

/// deg(om2) must be deg(om1) or deg(om1) - 1, else std::invalid_argument.
VerificationReport check_positive_pair(const MuPolynomial& om1, const MuPolynomial& om2,
                                       double gap_tol = kPairGapTolerance, double real_tol = kRealRootTolerance);

/// p(z) = om1(z^2) + z om2(z^2).
ZPolynomial hb_compose(const MuPolynomial& om1, const MuPolynomial& om2);

/// Even and odd parts: p(z) = om1(z^2) + z om2(z^2).
std::pair<MuPolynomial, MuPolynomial> hb_decompose(const ZPolynomial& p);

enum class PhiVariant { base, plus, plus_mu2 };

std::string_view to_string(PhiVariant v);
PhiVariant parse_phi_variant(std::string_view text);

/// sum_{k=0}^{n} D^k P_n(1) mu^k, plus A * (sum_{k<n} D^k P_{n-1}(1) mu^k) for
/// `plus` and A * mu^2 * (same) for `plus_mu2`. Any n >= 1 is accepted for the
/// base variant, n >= 2 for the others.
ZPolynomial phi_poly(int n, JacobiIndex idx, double a, PhiVariant variant);

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

struct SuiteOptions {
  std::vector<double> gamma_grid{-0.49, -0.25, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5};
  int poly_max_modes = 20;
  std::vector<int> matrix_modes{50, 200};
  double matrix_real_tol = 1e-6;
  double matrix_gap_tol = 1e-10;
  std::uint64_t seed = 20240611;
  int hb_cases = 200;
};

/// Gegenbauer characteristic polynomials from exact coefficients and
/// poly_roots_exact, m = 1 .. max_modes:
/// real/negative/distinct p_m, q_m and the positive pairs (q_m, p_m), (p_m, q_{m-1}).
std::vector<VerificationReport> gegenbauer_poly_checks(double gamma, int max_modes);

/// Same ranges through eigenvalues of the integration matrix, orders m-1 and m.
std::vector<VerificationReport> gegenbauer_matrix_interlacing_checks(double gamma, int max_modes);

/// Reality, negativity and gaps of the integration spectrum at one size.
VerificationReport gegenbauer_matrix_check(double gamma, int m, Parity parity, double real_tol, double gap_tol);

/// Expects at least one conjugate pair with |Im lambda| > tol |lambda|.
VerificationReport sharpness_check(double gamma, int m, Parity parity, double tol = 1e-3);

/// B_n roots real/negative/distinct, n = 2 .. n_max.
std::vector<VerificationReport> jacobi_range_checks(JacobiIndex idx, int n_max);
std::vector<VerificationReport> mixed_range_checks(JacobiIndex idx, int n_max);

/// Roots of B_n^{(g-1/2, g-1/2)} equal the union of the matching p/q roots.
VerificationReport symmetric_factorization_check(double gamma, int n);

/// Stability of phi_poly over a (alpha, beta, A) grid for n = n_min .. n_max.
std::vector<VerificationReport> phi_scan(PhiVariant variant, std::span<const double> alphas,
                                         std::span<const double> betas, std::span<const double> a_values, int n_min,
                                         int n_max);

/// Randomized agreement between check_stable(hb_compose(.)) and check_positive_pair.
VerificationReport hb_equivalence_check(std::uint64_t seed, int cases);

/// Real roots of random combinations a om1 + b om2 of verified positive pairs.
VerificationReport linear_combination_check(std::uint64_t seed, int pairs, int combos);

/// H = om1 th2 + om2 th1 for two positive pairs has real/negative/distinct roots.
VerificationReport product_sum_check(std::uint64_t seed, int cases);

enum class Suite { theorems, jacobi, phi, hermite_biehler, all };

std::string_view to_string(Suite s);
Suite parse_suite(std::string_view text);

std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions& options);

}  // namespace gtau
