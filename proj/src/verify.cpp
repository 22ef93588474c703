#include "gtau/verify.hpp"

#include "gtau/dense_eigs.hpp"
#include "gtau/spectra.hpp"
#include "gtau/tau_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace gtau {

Json VerificationReport::to_json() const {
  Json j;
  j["check"] = check_name;
  j["parameters"] = parameters;
  j["passed"] = passed;
  j["margin"] = margin;
  j["tolerance"] = tolerance;
  j["direction"] = direction == Inequality::less ? "margin < tolerance" : "margin > tolerance";
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

VerificationReport make_report(std::string name, Json parameters, double margin, double tolerance,
                               Inequality direction, std::string detail) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.parameters = std::move(parameters);
  r.margin = margin;
  r.tolerance = tolerance;
  r.direction = direction;
  r.passed = direction == Inequality::less ? margin < tolerance : margin > tolerance;
  r.detail = std::move(detail);
  return r;
}

double cauchy_bound(const ZPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
  double worst = 0.0;
  for (int i = 0; i < p.degree(); ++i) worst = std::max(worst, std::abs(p[i] / p.leading()));
  return 1.0 + worst;
}

VerificationReport check_stable(const ZPolynomial& p, double tol_rel) {
  if (p.is_zero()) throw std::invalid_argument("check_stable: zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("check_stable: degree must be >= 1");
  const auto roots = poly_roots(p);
  double max_re = -std::numeric_limits<double>::infinity();
  for (const auto& r : roots) max_re = std::max(max_re, r.real());
  const double tol = tol_rel * cauchy_bound(p);
  return make_report("stable", Json{{"degree", p.degree()}}, max_re, -tol, Inequality::less);
}

namespace {

struct RealRoots {
  bool real = true;
  std::vector<double> values;  // ascending
};

RealRoots real_roots(std::span<const std::complex<double>> roots, double real_tol) {
  RealRoots out;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) > real_tol * std::max(1.0, std::abs(r))) out.real = false;
    out.values.push_back(r.real());
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? (b - a) / scale : 0.0;
}

// Smallest relative gap of an ascending sequence followed by 0; 1 when empty.
double chain_margin(const std::vector<double>& seq) {
  double margin = 1.0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) margin = std::min(margin, relative_gap(seq[i], seq[i + 1]));
  if (!seq.empty()) margin = std::min(margin, relative_gap(seq.back(), 0.0));
  return margin;
}

std::vector<std::complex<double>> roots_or_empty(const MuPolynomial& p) {
  if (p.degree() < 1) return {};
  return poly_roots(p);
}

// Reality, negativity and distinctness of one root set.
VerificationReport root_set_report(std::string name, Json params, std::span<const std::complex<double>> roots,
                                   double gap_tol, double real_tol) {
  const RealRoots rr = real_roots(roots, real_tol);
  if (!rr.real) {
    return make_report(std::move(name), std::move(params), -1.0, gap_tol, Inequality::greater, "non-real roots");
  }
  return make_report(std::move(name), std::move(params), chain_margin(rr.values), gap_tol, Inequality::greater);
}

}  // namespace

VerificationReport check_root_pair(std::span<const std::complex<double>> roots1, double lead1,
                                   std::span<const std::complex<double>> roots2, double lead2, double gap_tol,
                                   double real_tol) {
  Json params{{"degree1", roots1.size()}, {"degree2", roots2.size()}};
  const RealRoots r1 = real_roots(roots1, real_tol);
  const RealRoots r2 = real_roots(roots2, real_tol);
  if (!r1.real || !r2.real) {
    return make_report("positive_pair", params, -1.0, gap_tol, Inequality::greater, "non-real roots");
  }
  if ((lead1 > 0.0) != (lead2 > 0.0)) {
    return make_report("positive_pair", params, -1.0, gap_tol, Inequality::greater, "leading signs differ");
  }
  const std::size_t n = r1.values.size();
  const std::size_t n2 = r2.values.size();
  if (n2 + 1 != n && n2 != n) {
    return make_report("positive_pair", params, -1.0, gap_tol, Inequality::greater, "degree mismatch");
  }
  // mu_1 < mu'_1 < ... < mu_n  or  mu'_1 < mu_1 < ... < mu'_n < mu_n.
  std::vector<double> seq;
  std::size_t i = 0, k = 0;
  const bool second_first = n2 == n;
  while (i < n || k < n2) {
    const bool take_second = second_first ? (k == i) : (k < i);
    if (take_second) {
      seq.push_back(r2.values[k++]);
    } else {
      seq.push_back(r1.values[i++]);
    }
  }
  return make_report("positive_pair", params, chain_margin(seq), gap_tol, Inequality::greater);
}

VerificationReport check_positive_pair(const MuPolynomial& om1, const MuPolynomial& om2, double gap_tol,
                                       double real_tol) {
  if (om1.is_zero() || om2.is_zero()) throw std::invalid_argument("check_positive_pair: zero polynomial");
  const int n = om1.degree();
  if (om2.degree() != n && om2.degree() != n - 1) {
    throw std::invalid_argument("check_positive_pair: deg(om2) must be deg(om1) or deg(om1) - 1");
  }
  const auto r1 = roots_or_empty(om1);
  const auto r2 = roots_or_empty(om2);
  return check_root_pair(r1, om1.leading(), r2, om2.leading(), gap_tol, real_tol);
}

ZPolynomial hb_compose(const MuPolynomial& om1, const MuPolynomial& om2) {
  const int d = std::max(2 * om1.degree(), 2 * om2.degree() + 1);
  std::vector<double> c(static_cast<std::size_t>(std::max(d + 1, 0)), 0.0);
  for (int k = 0; k <= om1.degree(); ++k) c[2 * k] = om1[k];
  for (int k = 0; k <= om2.degree(); ++k) c[2 * k + 1] = om2[k];
  return ZPolynomial(std::move(c));
}

std::pair<MuPolynomial, MuPolynomial> hb_decompose(const ZPolynomial& p) {
  std::vector<double> even, odd;
  for (int k = 0; k <= p.degree(); ++k) (k % 2 == 0 ? even : odd).push_back(p[k]);
  return {MuPolynomial(std::move(even)), MuPolynomial(std::move(odd))};
}

std::string_view to_string(PhiVariant v) {
  switch (v) {
    case PhiVariant::base: return "base";
    case PhiVariant::plus: return "plus";
    case PhiVariant::plus_mu2: return "plus_mu2";
  }
  return "unknown";
}

PhiVariant parse_phi_variant(std::string_view text) {
  if (text == "base") return PhiVariant::base;
  if (text == "plus") return PhiVariant::plus;
  if (text == "plus_mu2") return PhiVariant::plus_mu2;
  throw std::invalid_argument("unknown phi variant '" + std::string(text) + "'");
}

ZPolynomial phi_poly(int n, JacobiIndex idx, double a, PhiVariant variant) {
  if (n < 1 || (variant != PhiVariant::base && n < 2)) throw std::invalid_argument("phi_poly: degree too small");
  if (!(a >= 0.0)) throw std::invalid_argument("phi_poly: A must be >= 0");
  auto all_derivatives = [&](int deg) {
    std::vector<double> c;
    for (int k = 0; k <= deg; ++k) c.push_back(jacobi_deriv_at_one(deg, idx, k));
    return ZPolynomial(std::move(c));
  };
  const ZPolynomial base = all_derivatives(n);
  switch (variant) {
    case PhiVariant::base: return base;
    case PhiVariant::plus: return base + a * all_derivatives(n - 1);
    case PhiVariant::plus_mu2: return base + a * all_derivatives(n - 1).shifted(2);
  }
  throw std::invalid_argument("phi_poly: invalid variant");
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

std::vector<VerificationReport> gegenbauer_poly_checks(double gamma, int max_modes) {
  // The grid value itself (a binary fraction) is the exact rational index.
  const mpq_class g(GegenbauerIndex(gamma).gamma());
  const auto p = charpoly_sequence_exact(max_modes, g, Parity::even);
  const auto q = charpoly_sequence_exact(max_modes, g, Parity::odd);
  auto exact_roots = [](const ExactMuPolynomial& poly) -> std::vector<std::complex<double>> {
    if (poly.degree() < 1) return {};
    return poly_roots_exact(poly);
  };
  std::vector<VerificationReport> out;
  for (int m = 1; m <= max_modes; ++m) {
    const auto rp = exact_roots(p[m]);
    const auto rq = exact_roots(q[m]);
    const Json params{{"gamma", gamma}, {"m", m}};
    auto with = [&](const char* key, const char* value) {
      Json j = params;
      j[key] = value;
      return j;
    };
    out.push_back(root_set_report("thm36_poly_roots", with("family", "p"), rp, kDistinctRootTolerance,
                                  kRealRootTolerance));
    out.push_back(root_set_report("thm36_poly_roots", with("family", "q"), rq, kDistinctRootTolerance,
                                  kRealRootTolerance));
    auto pair1 = check_root_pair(rq, sgn(q[m].leading()), rp, sgn(p[m].leading()));
    pair1.check_name = "thm36_poly_pair";
    pair1.parameters = with("pair", "q_m,p_m");
    out.push_back(pair1);
    const auto rq_prev = exact_roots(q[m - 1]);
    auto pair2 = check_root_pair(rp, sgn(p[m].leading()), rq_prev, sgn(q[m - 1].leading()));
    pair2.check_name = "thm36_poly_pair";
    pair2.parameters = with("pair", "p_m,q_m-1");
    out.push_back(pair2);
  }
  return out;
}

std::vector<VerificationReport> gegenbauer_matrix_interlacing_checks(double gamma, int max_modes) {
  const GegenbauerIndex idx(gamma);
  auto mus = [&](int m, Parity parity) -> std::vector<std::complex<double>> {
    if (m == 0) return {};
    if (m == 1) {
      // 1 x 1: the single entry -K_{n(0)} of the first row.
      const auto c = charpoly_sequence(1, idx, parity)[1];
      return {std::complex<double>(-c[0] / c[1], 0.0)};
    }
    return dense_eigs(build_gi2(m, idx, parity).square());
  };
  // Leading coefficients D^{2m} G_n(1) are positive for gamma > -1/2.
  std::vector<VerificationReport> out;
  auto prev_q = mus(0, Parity::odd);
  for (int m = 1; m <= max_modes; ++m) {
    const auto ep = mus(m, Parity::even);
    const auto eq = mus(m, Parity::odd);
    auto pair1 = check_root_pair(eq, 1.0, ep, 1.0);
    pair1.check_name = "thm36_matrix_interlacing";
    pair1.parameters = Json{{"gamma", gamma}, {"m", m}, {"pair", "q_m,p_m"}};
    out.push_back(pair1);
    auto pair2 = check_root_pair(ep, 1.0, prev_q, 1.0);
    pair2.check_name = "thm36_matrix_interlacing";
    pair2.parameters = Json{{"gamma", gamma}, {"m", m}, {"pair", "p_m,q_m-1"}};
    out.push_back(pair2);
    prev_q = eq;
  }
  return out;
}

VerificationReport gegenbauer_matrix_check(double gamma, int m, Parity parity, double real_tol, double gap_tol) {
  const Spectrum s = tau_spectrum(m, GegenbauerIndex(gamma), parity);
  Json params{{"gamma", gamma}, {"m", m}, {"parity", to_string(parity)}, {"real_tol", real_tol}};
  double max_ratio = 0.0;
  double max_re = -std::numeric_limits<double>::infinity();
  std::vector<double> re;
  for (const auto& mode : s.modes) {
    max_ratio = std::max(max_ratio, std::abs(mode.lambda.imag()) / std::abs(mode.lambda));
    max_re = std::max(max_re, mode.lambda.real());
    re.push_back(mode.lambda.real());
  }
  params["max_imag_ratio"] = max_ratio;
  params["max_real"] = max_re;
  if (max_ratio > real_tol) {
    return make_report("thm36_matrix_spectrum", params, -1.0, gap_tol, Inequality::greater, "non-real eigenvalues");
  }
  std::sort(re.begin(), re.end());
  return make_report("thm36_matrix_spectrum", params, chain_margin(re), gap_tol, Inequality::greater);
}

VerificationReport sharpness_check(double gamma, int m, Parity parity, double tol) {
  const Spectrum s = tau_spectrum(m, GegenbauerIndex(gamma), parity);
  double max_ratio = 0.0;
  for (const auto& mode : s.modes) {
    max_ratio = std::max(max_ratio, std::abs(mode.lambda.imag()) / std::abs(mode.lambda));
  }
  Json params{{"gamma", gamma}, {"m", m}, {"parity", to_string(parity)}, {"complex_modes", s.non_real_count(tol)}};
  return make_report("sharpness_complex_pair", params, max_ratio, tol, Inequality::greater);
}

std::vector<VerificationReport> jacobi_range_checks(JacobiIndex idx, int n_max) {
  std::vector<VerificationReport> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto roots = poly_roots(jacobi_char_poly(n, idx));
    out.push_back(root_set_report("thm39_jacobi_roots",
                                  Json{{"alpha", idx.alpha()}, {"beta", idx.beta()}, {"n", n}}, roots,
                                  kDistinctRootTolerance, kRealRootTolerance));
  }
  return out;
}

std::vector<VerificationReport> mixed_range_checks(JacobiIndex idx, int n_max) {
  std::vector<VerificationReport> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto roots = poly_roots(mixed_char_poly(n, idx));
    out.push_back(root_set_report("mixed_bc_roots", Json{{"alpha", idx.alpha()}, {"beta", idx.beta()}, {"n", n}},
                                  roots, kDistinctRootTolerance, kRealRootTolerance));
  }
  return out;
}

VerificationReport symmetric_factorization_check(double gamma, int n) {
  const GegenbauerIndex idx(gamma);
  const int half = n / 2;
  const auto p = charpoly_sequence(half, idx, Parity::even);
  const auto q = charpoly_sequence(half, idx, Parity::odd);
  // n = 2h: p_h and q_{h-1}; n = 2h+1: q_h and p_h.
  std::vector<std::complex<double>> parts;
  auto append = [&](const MuPolynomial& poly) {
    const auto r = roots_or_empty(poly);
    parts.insert(parts.end(), r.begin(), r.end());
  };
  if (n % 2 == 0) {
    append(p[half]);
    append(q[half - 1]);
  } else {
    append(q[half]);
    append(p[half]);
  }
  const auto whole = poly_roots(jacobi_char_poly(n, to_jacobi(idx)));
  Json params{{"gamma", gamma}, {"n", n}};
  if (whole.size() != parts.size()) {
    return make_report("symmetric_factorization", params, 1.0, 1e-9, Inequality::less, "degree mismatch");
  }
  auto by_real = [](const auto& a, const auto& b) { return a.real() < b.real(); };
  std::sort(parts.begin(), parts.end(), by_real);
  auto sorted_whole = whole;
  std::sort(sorted_whole.begin(), sorted_whole.end(), by_real);
  double worst = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    worst = std::max(worst, std::abs(parts[i] - sorted_whole[i]) / std::max(1.0, std::abs(parts[i])));
  }
  return make_report("symmetric_factorization", params, worst, 1e-9, Inequality::less);
}

std::vector<VerificationReport> phi_scan(PhiVariant variant, std::span<const double> alphas,
                                         std::span<const double> betas, std::span<const double> a_values, int n_min,
                                         int n_max) {
  std::vector<VerificationReport> out;
  for (double alpha : alphas) {
    for (double beta : betas) {
      for (double a : a_values) {
        // Worst max Re(root) / Cauchy bound over n.
        double worst = -std::numeric_limits<double>::infinity();
        int worst_n = n_min;
        for (int n = n_min; n <= n_max; ++n) {
          const ZPolynomial phi = phi_poly(n, JacobiIndex(alpha, beta), a, variant);
          const auto r = check_stable(phi);
          const double scaled = r.margin / cauchy_bound(phi);
          if (scaled > worst) {
            worst = scaled;
            worst_n = n;
          }
        }
        Json params{{"variant", to_string(variant)}, {"alpha", alpha}, {"beta", beta}, {"A", a},
                    {"n_min", n_min},           {"n_max", n_max},  {"worst_n", worst_n}};
        out.push_back(make_report("phi_stability", params, worst, -kStabilityTolerance, Inequality::less));
      }
    }
  }
  return out;
}

namespace {

MuPolynomial from_roots(const std::vector<std::complex<double>>& roots, double lead) {
  // Conjugate pairs must be adjacent.
  MuPolynomial p = MuPolynomial::constant(lead);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto r = roots[i];
    if (r.imag() != 0.0) {
      p = p * MuPolynomial(std::vector<double>{std::norm(r), -2.0 * r.real(), 1.0});
      ++i;
    } else {
      p = p * MuPolynomial(std::vector<double>{-r.real(), 1.0});
    }
  }
  return p;
}

struct RandomPair {
  std::vector<std::complex<double>> roots1, roots2;
  double lead1 = 1.0, lead2 = 1.0;
  MuPolynomial om1() const { return from_roots(roots1, lead1); }
  MuPolynomial om2() const { return from_roots(roots2, lead2); }
};

// Interlacing negative roots with separation of at least 20% between neighbours.
RandomPair random_positive_pair(std::mt19937_64& rng, int n, bool equal_degree) {
  std::uniform_real_distribution<double> start(0.2, 1.0), step(0.2, 1.0), lead(0.5, 2.0);
  const int count = equal_degree ? 2 * n : 2 * n - 1;
  std::vector<double> seq;  // descending towards -infinity
  double r = -start(rng);
  for (int i = 0; i < count; ++i) {
    seq.push_back(r);
    r *= 1.0 + step(rng);
  }
  std::reverse(seq.begin(), seq.end());  // ascending
  RandomPair pair;
  // Largest root belongs to om1; alternate downwards.
  for (int i = count - 1, owner = 1; i >= 0; --i, owner = 3 - owner) {
    (owner == 1 ? pair.roots1 : pair.roots2).emplace_back(seq[i], 0.0);
  }
  std::reverse(pair.roots1.begin(), pair.roots1.end());
  std::reverse(pair.roots2.begin(), pair.roots2.end());
  const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
  pair.lead1 = sign * lead(rng);
  pair.lead2 = sign * lead(rng);
  return pair;
}

RandomPair random_pair_shape(std::mt19937_64& rng) {
  const bool equal_degree = std::bernoulli_distribution(0.5)(rng);
  // deg p(z) <= 8.
  const int n = equal_degree ? std::uniform_int_distribution<int>(1, 3)(rng)
                             : std::uniform_int_distribution<int>(1, 4)(rng);
  return random_positive_pair(rng, n, equal_degree);
}

// Breaks the pair in one of four ways; false when the shape does not allow it.
bool perturb(std::mt19937_64& rng, RandomPair& pair) {
  const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
  switch (kind) {
    case 0: {  // exchange two neighbouring roots between the polynomials
      if (pair.roots2.empty()) return false;
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, pair.roots2.size() - 1)(rng);
      std::swap(pair.roots1[std::min(k, pair.roots1.size() - 1)], pair.roots2[k]);
      return true;
    }
    case 1:  // opposite leading signs
      pair.lead2 = -pair.lead2;
      return true;
    case 2:  // positive root
      pair.roots1.back() = {std::uniform_real_distribution<double>(0.1, 1.0)(rng), 0.0};
      return true;
    case 3: {  // complex pair in om1
      if (pair.roots1.size() < 2) return false;
      const double mid = 0.5 * (pair.roots1[0].real() + pair.roots1[1].real());
      pair.roots1[0] = {mid, 0.5 * std::abs(mid)};
      pair.roots1[1] = {mid, -0.5 * std::abs(mid)};
      return true;
    }
  }
  return false;
}

}  // namespace

VerificationReport hb_equivalence_check(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  int disagreements = 0;
  int positives = 0;
  int label_mismatch = 0;
  for (int c = 0; c < cases; ++c) {
    RandomPair pair = random_pair_shape(rng);
    bool expected = true;
    if (c % 2 == 1) {
      while (!perturb(rng, pair)) {
      }
      expected = false;
    }
    const MuPolynomial om1 = pair.om1();
    const MuPolynomial om2 = pair.om2();
    const bool stable = check_stable(hb_compose(om1, om2)).passed;
    const bool positive = check_positive_pair(om1, om2).passed;
    if (stable != positive) ++disagreements;
    if (positive != expected) ++label_mismatch;
    if (positive) ++positives;
  }
  Json params{{"seed", seed}, {"cases", cases}, {"positive_pairs", positives}, {"label_mismatches", label_mismatch}};
  return make_report("hermite_biehler_equivalence", params, disagreements, 1.0, Inequality::less);
}

VerificationReport linear_combination_check(std::uint64_t seed, int pairs, int combos) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  double worst = 0.0;
  for (int c = 0; c < pairs; ++c) {
    const RandomPair pair = random_pair_shape(rng);
    const MuPolynomial om1 = pair.om1();
    const MuPolynomial om2 = pair.om2();
    for (int k = 0; k < combos; ++k) {
      const MuPolynomial mix = coef(rng) * om1 + coef(rng) * om2;
      if (mix.degree() < 1) continue;
      for (const auto& r : poly_roots(mix)) worst = std::max(worst, std::abs(r.imag()) / std::max(1.0, std::abs(r)));
    }
  }
  Json params{{"seed", seed}, {"pairs", pairs}, {"combinations", combos}};
  return make_report("positive_pair_linear_combination", params, worst, kRealRootTolerance, Inequality::less);
}

VerificationReport product_sum_check(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  double worst = 1.0;
  for (int c = 0; c < cases; ++c) {
    const RandomPair a = random_pair_shape(rng);
    const RandomPair b = random_pair_shape(rng);
    const MuPolynomial h = a.om1() * b.om2() + a.om2() * b.om1();
    if (h.degree() < 1) continue;
    const auto roots = poly_roots(h);
    const RealRoots rr = real_roots(roots, kRealRootTolerance);
    worst = std::min(worst, rr.real ? chain_margin(rr.values) : -1.0);
  }
  Json params{{"seed", seed}, {"cases", cases}};
  return make_report("positive_pair_product_sum", params, worst, kDistinctRootTolerance, Inequality::greater);
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::theorems: return "theorems";
    case Suite::jacobi: return "jacobi";
    case Suite::phi: return "phi";
    case Suite::hermite_biehler: return "hermite-biehler";
    case Suite::all: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view text) {
  for (auto s : {Suite::theorems, Suite::jacobi, Suite::phi, Suite::hermite_biehler, Suite::all}) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

namespace {

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

const std::vector<double> kNonPositiveBox{-0.9, -0.5, 0.0};
const std::vector<double> kPositiveBox{0.1, 0.5, 1.0};

}  // namespace

std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::theorems) {
    for (double g : o.gamma_grid) {
      append(out, gegenbauer_poly_checks(g, o.poly_max_modes));
      append(out, gegenbauer_matrix_interlacing_checks(g, o.poly_max_modes));
      for (int n = 2; n <= 15; ++n) out.push_back(symmetric_factorization_check(g, n));
      for (int m : o.matrix_modes) {
        for (Parity p : {Parity::even, Parity::odd}) {
          out.push_back(gegenbauer_matrix_check(g, m, p, o.matrix_real_tol, o.matrix_gap_tol));
        }
      }
    }
    for (double g : {2.6, 3.0}) out.push_back(sharpness_check(g, 200, Parity::odd));
  }
  if (all || suite == Suite::jacobi) {
    for (const auto* box : {&kNonPositiveBox, &kPositiveBox}) {
      for (double a : *box) {
        for (double b : *box) append(out, jacobi_range_checks(JacobiIndex(a, b), 15));
      }
    }
    for (double a : kNonPositiveBox) {
      for (double b : kNonPositiveBox) append(out, mixed_range_checks(JacobiIndex(a, b), 15));
    }
  }
  if (all || suite == Suite::phi) {
    const std::vector<double> alphas{-0.9, -0.5, 0.0, 0.5, 1.0};
    const std::vector<double> alphas_nonpos{-0.9, -0.5, 0.0};
    const std::vector<double> betas{-0.9, 0.0, 1.0, 3.0};
    const std::vector<double> a_grid{0.1, 1.0, 10.0};
    const std::vector<double> zero{0.0};
    append(out, phi_scan(PhiVariant::base, alphas, betas, zero, 2, 12));
    append(out, phi_scan(PhiVariant::plus, alphas_nonpos, betas, a_grid, 3, 12));
    append(out, phi_scan(PhiVariant::plus_mu2, alphas, betas, a_grid, 3, 12));
  }
  if (all || suite == Suite::hermite_biehler) {
    out.push_back(hb_equivalence_check(o.seed, o.hb_cases));
    out.push_back(linear_combination_check(o.seed + 1, 20, 50));
    out.push_back(product_sum_check(o.seed + 2, 50));
  }
  return out;
}

}  // namespace gtau
