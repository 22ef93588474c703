#include "gtau/sweeps.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace gtau {

namespace {

// Runs f(0) .. f(n-1) in waves of hardware_concurrency tasks; results keep index order.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t begin = 0; begin < n; begin += width) {
    std::vector<std::future<R>> wave;
    for (std::size_t i = begin; i < std::min(n, begin + width); ++i) wave.push_back(std::async(std::launch::async, f, i));
    for (auto& fut : wave) out.push_back(fut.get());
  }
  return out;
}

double relative_error(std::complex<double> lambda, double exact) {
  const double diff = std::abs(lambda - exact);
  return exact != 0.0 ? diff / std::abs(exact) : diff;
}

}  // namespace

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y, std::string label) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("fit_loglog: need at least three points");
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("fit_loglog: data must be positive");
    lx[i] = std::log10(x[i]);
    ly[i] = std::log10(y[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  SlopeFit fit;
  fit.label = std::move(label);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    rss += r * r;
  }
  const double se = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  const boost::math::students_t dist(static_cast<double>(n - 2));
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  fit.ci_low = fit.slope - t * se;
  fit.ci_high = fit.slope + t * se;
  fit.points = static_cast<int>(n);
  fit.x_min = *std::min_element(x.begin(), x.end());
  fit.x_max = *std::max_element(x.begin(), x.end());
  return fit;
}

std::vector<double> SweepResult::column(const std::string& key) const {
  const auto it = std::find(value_keys.begin(), value_keys.end(), key);
  if (it == value_keys.end()) throw std::invalid_argument("SweepResult: no column '" + key + "'");
  const auto k = static_cast<std::size_t>(it - value_keys.begin());
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& row : values) out.push_back(row[k]);
  return out;
}

SweepResult spectrum_error_report(const Spectrum& spectrum, Parity parity, BoundaryCondition bc, double threshold) {
  const int count = static_cast<int>(spectrum.size());
  if (count < 1) throw std::invalid_argument("spectrum_error_report: empty spectrum");
  const auto exact = exact_spectrum(count, parity, bc);
  SweepResult r;
  r.name = "spectrum_error";
  r.grid_keys = {"k"};
  r.value_keys = {"lambda_re", "lambda_im", "lambda_exact", "rel_err"};
  int below = 0;
  for (int k = 0; k < count; ++k) {
    const auto lam = spectrum.modes[k].lambda;
    const double err = relative_error(lam, exact[k]);
    if (err < threshold) ++below;
    r.grid.push_back(nlohmann::ordered_json::array({k + 1}));
    r.values.push_back({lam.real(), lam.imag(), exact[k], err});
  }
  r.meta["source"] = spectrum.source;
  r.meta["parity"] = to_string(parity);
  r.meta["bc"] = to_string(bc);
  r.meta["threshold"] = threshold;
  r.meta["fraction_below_threshold"] = static_cast<double>(below) / count;
  r.meta["max_abs_lambda"] = spectrum.spectral_radius();
  r.meta["real_tolerance"] = spectrum.real_tolerance;
  return r;
}

SweepResult spectrum_error_report(int m, GegenbauerIndex idx, Parity parity, BoundaryCondition bc,
                                  double threshold) {
  SweepResult r = spectrum_error_report(tau_spectrum(m, idx, parity, bc), parity, bc, threshold);
  r.meta["gamma"] = idx.gamma();
  r.meta["m"] = m;
  r.meta["variant"] = "integration";
  return r;
}

std::vector<int> default_conditioning_grid() {
  return {16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512, 768, 1024};
}

SweepResult conditioning_sweep(GegenbauerIndex idx, const std::vector<int>& m_grid,
                               const std::vector<PencilVariant>& variants, ConditioningOptions options) {
  if (!std::is_sorted(m_grid.begin(), m_grid.end())) {
    throw std::invalid_argument("conditioning_sweep: m grid must be ascending");
  }
  struct Task {
    PencilVariant variant;
    int m;
  };
  std::vector<Task> tasks;
  for (PencilVariant v : variants) {
    for (int m : m_grid) tasks.push_back({v, m});
  }
  const double exact = -std::numbers::pi * std::numbers::pi / 4.0;
  const auto lambdas = parallel_map(tasks.size(), [&](std::size_t i) {
    const Task& t = tasks[i];
    const GeneralizedPencil pencil = t.variant == PencilVariant::integration
                                         ? build_integration_pencil(t.m, idx, Parity::even)
                                         : build_diff_pencil(t.m, idx, t.variant);
    return pencil_spectrum(pencil).modes.front().lambda;
  });

  SweepResult r;
  r.name = "conditioning";
  r.grid_keys = {"variant", "m"};
  r.value_keys = {"rel_err", "lambda_re", "lambda_im"};
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    r.grid.push_back(nlohmann::ordered_json::array({std::string(to_string(tasks[i].variant)), tasks[i].m}));
    r.values.push_back({relative_error(lambdas[i], exact), lambdas[i].real(), lambdas[i].imag()});
  }
  for (PencilVariant v : variants) {
    if (v == PencilVariant::integration || v == PencilVariant::ierley_legendre) continue;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].variant == v && tasks[i].m >= options.tail_start && r.values[i][0] > 0.0) {
        xs.push_back(tasks[i].m);
        ys.push_back(r.values[i][0]);
      }
    }
    if (xs.size() >= 3) r.fits.push_back(fit_loglog(xs, ys, std::string(to_string(v))));
  }
  r.meta["gamma"] = idx.gamma();
  r.meta["parity"] = "even";
  r.meta["lambda_exact"] = exact;
  r.meta["tail_start"] = options.tail_start;
  return r;
}

SweepResult gamma_scan(int m, const std::vector<double>& gamma_grid, Parity parity, double tol) {
  for (double g : gamma_grid) {
    if (!(g > -0.5)) throw std::invalid_argument("gamma_scan: gamma must be > -1/2");
  }
  const auto spectra = parallel_map(gamma_grid.size(),
                                    [&](std::size_t i) { return tau_spectrum(m, GegenbauerIndex(gamma_grid[i]), parity); });
  SweepResult r;
  r.name = "gamma_scan";
  r.grid_keys = {"gamma"};
  r.value_keys = {"complex_modes", "complex_pairs", "max_imag_ratio", "max_abs_lambda"};
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    const Spectrum& s = spectra[i];
    double ratio = 0.0;
    for (const auto& mode : s.modes) ratio = std::max(ratio, std::abs(mode.lambda.imag()) / std::abs(mode.lambda));
    const int complex_modes = s.non_real_count(tol);
    r.grid.push_back(nlohmann::ordered_json::array({gamma_grid[i]}));
    r.values.push_back({static_cast<double>(complex_modes), static_cast<double>(complex_modes / 2), ratio,
                        s.spectral_radius()});
  }
  r.meta["m"] = m;
  r.meta["parity"] = to_string(parity);
  r.meta["tol_real"] = tol;
  return r;
}

}  // namespace gtau
