#include "gtau/cli.hpp"

#include "gtau/charpoly.hpp"
#include "gtau/report_io.hpp"
#include "gtau/spectra.hpp"
#include "gtau/sweeps.hpp"
#include "gtau/tau_operator.hpp"
#include "gtau/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace gtau {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int modes = 0;
  std::string gamma = "0";
  double alpha = 0.0;
  double beta = 0.0;
  std::string parity = "even";
  std::string bc = "dirichlet";
  std::string variant;
  std::string format = "csv";
  std::string out;
  double tol_real = 1e-6;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string view = "rect";
  bool exact = false;
  bool roots = false;
  std::string suite = "theorems";
  std::string gamma_grid = "default";
  std::string m_grid = "default";
  std::string variants = "default";
  int tail_start = ConditioningOptions{}.tail_start;
  double threshold = kPrecisionThreshold;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

mpq_class parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw UsageError("not a rational: '" + text + "'");
    q.canonicalize();
    return q;
  }
  return mpq_class(parse_real(text));
}

double gamma_value(const Options& o) {
  if (o.gamma.find('/') != std::string::npos) return parse_rational(o.gamma).get_d();
  return parse_real(o.gamma);
}

template <class Fn>
auto usage_guard(Fn fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

Json base_meta(const std::string& command) { return Json{{"command", command}}; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("unsupported --format '" + o.format + "' for this command");
}

// ---------------------------------------------------------------------------

int cmd_gi2(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json", "coo"});
  const double g = gamma_value(o);
  const Parity parity = usage_guard([&] { return parse_parity(o.parity); });
  const TauMatrix t = usage_guard([&] { return build_gi2(o.modes, GegenbauerIndex(g), parity); });
  if (o.view != "rect" && o.view != "square") throw UsageError("--view must be rect or square");
  const Eigen::MatrixXd a = o.view == "rect" ? t.rectangular() : t.square();
  if (o.format == "csv") {
    write_matrix_csv(out, a);
  } else if (o.format == "coo") {
    write_matrix_coordinate(out, a);
  } else {
    Json meta = base_meta("gi2");
    meta["m"] = o.modes;
    meta["gamma"] = g;
    meta["parity"] = to_string(parity);
    meta["view"] = o.view;
    meta["rows"] = a.rows();
    meta["cols"] = a.cols();
    write_json(out, meta, matrix_to_json(a));
  }
  return kExitOk;
}

int cmd_eig(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json"});
  const double g = gamma_value(o);
  const Parity parity = usage_guard([&] { return parse_parity(o.parity); });
  const BoundaryCondition bc = usage_guard([&] { return parse_boundary_condition(o.bc); });
  const PencilVariant variant =
      o.variant.empty() ? PencilVariant::integration : usage_guard([&] { return parse_pencil_variant(o.variant); });
  if (bc == BoundaryCondition::mixed) throw UsageError("eig: mixed boundary conditions are available via charpoly");
  const GegenbauerIndex idx = usage_guard([&] { return GegenbauerIndex(g); });
  Spectrum s;
  if (variant == PencilVariant::integration) {
    s = usage_guard([&] { return tau_spectrum(o.modes, idx, parity, bc); });
  } else {
    if (parity != Parity::even || bc != BoundaryCondition::dirichlet) {
      throw UsageError("eig: differentiation pencils cover even Dirichlet modes only");
    }
    s = usage_guard([&] { return pencil_spectrum(build_diff_pencil(o.modes, idx, variant)); });
  }
  s = make_spectrum(s.lambdas(), s.source, o.tol_real);
  SweepResult r = spectrum_error_report(s, parity, bc, o.threshold);
  if (o.format == "csv") {
    write_sweep_csv(out, r);
  } else {
    Json meta = base_meta("eig");
    meta["gamma"] = g;
    meta["m"] = o.modes;
    meta["parity"] = to_string(parity);
    meta["bc"] = to_string(bc);
    meta["variant"] = to_string(variant);
    meta["tolerances"] = Json{{"real", o.tol_real}, {"precision_threshold", o.threshold}};
    meta["fraction_below_threshold"] = r.meta["fraction_below_threshold"];
    meta["max_abs_lambda"] = r.meta["max_abs_lambda"];
    Json data = sweep_data_json(r);
    for (std::size_t k = 0; k < s.modes.size(); ++k) {
      data[k]["real"] = s.modes[k].real;
      data[k]["negative"] = s.modes[k].negative;
    }
    write_json(out, meta, data);
  }
  return kExitOk;
}

Json roots_json(const MuPolynomial& p) {
  Json arr = Json::array();
  if (p.degree() < 1) return arr;
  for (const auto& r : poly_roots(p)) arr.push_back(Json::array({r.real(), r.imag()}));
  return arr;
}

int cmd_charpoly(const Options& o, std::ostream& out, bool jacobi) {
  require_format(o, {"csv", "json"});
  const BoundaryCondition bc = usage_guard([&] { return parse_boundary_condition(o.bc); });
  Json meta = base_meta("charpoly");
  std::vector<std::pair<int, Json>> polys;  // (label, coefficient array)
  std::vector<MuPolynomial> floats;
  if (jacobi) {
    if (o.exact) throw UsageError("charpoly: --exact applies to Gegenbauer sequences only");
    const JacobiIndex idx = usage_guard([&] { return JacobiIndex(o.alpha, o.beta); });
    MuPolynomial p;
    if (bc == BoundaryCondition::dirichlet) {
      p = usage_guard([&] { return jacobi_char_poly(o.modes, idx); });
    } else if (bc == BoundaryCondition::mixed) {
      p = usage_guard([&] { return mixed_char_poly(o.modes, idx); });
    } else {
      throw UsageError("charpoly: Jacobi path supports --bc dirichlet or mixed");
    }
    meta["family"] = bc == BoundaryCondition::dirichlet ? "jacobi" : "jacobi-mixed";
    meta["alpha"] = o.alpha;
    meta["beta"] = o.beta;
    meta["n"] = o.modes;
    polys.emplace_back(o.modes, polynomial_to_json(p));
    floats.push_back(p);
  } else {
    if (bc != BoundaryCondition::dirichlet) throw UsageError("charpoly: Gegenbauer sequences use --bc dirichlet");
    const Parity parity = usage_guard([&] { return parse_parity(o.parity); });
    meta["family"] = parity == Parity::even ? "p" : "q";
    meta["parity"] = to_string(parity);
    meta["m_max"] = o.modes;
    if (o.exact) {
      const mpq_class g = parse_rational(o.gamma);
      const auto seq = usage_guard([&] { return charpoly_sequence_exact(o.modes, g, parity); });
      meta["gamma"] = g.get_str();
      meta["arithmetic"] = "rational";
      for (std::size_t m = 0; m < seq.size(); ++m) {
        polys.emplace_back(static_cast<int>(m), polynomial_to_json(seq[m]));
        floats.push_back(to_double(seq[m]));
      }
    } else {
      const double g = gamma_value(o);
      const auto seq = usage_guard([&] { return charpoly_sequence(o.modes, GegenbauerIndex(g), parity); });
      meta["gamma"] = g;
      meta["arithmetic"] = "double";
      for (std::size_t m = 0; m < seq.size(); ++m) {
        polys.emplace_back(static_cast<int>(m), polynomial_to_json(seq[m]));
        floats.push_back(seq[m]);
      }
    }
  }
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [label, coeffs] : polys) {
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const auto& c = coeffs[k];
        rows.push_back({std::to_string(label), std::to_string(k),
                        c.is_string() ? c.get<std::string>() : format_double(c.get<double>())});
      }
    }
    write_csv(out, {jacobi ? "n" : "m", "power", "coefficient"}, rows);
  } else {
    Json data = Json::array();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      Json entry{{jacobi ? "n" : "m", polys[i].first}, {"coefficients", polys[i].second}};
      if (o.roots) entry["roots"] = roots_json(floats[i]);
      data.push_back(entry);
    }
    write_json(out, meta, data);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json"});
  const Suite suite = usage_guard([&] { return parse_suite(o.suite); });
  SuiteOptions so;
  so.seed = o.seed;
  if (o.gamma_grid != "default") so.gamma_grid = parse_real_list(o.gamma_grid);
  for (double g : so.gamma_grid) {
    if (!(g > -0.5)) throw UsageError("gamma grid values must be > -1/2");
  }
  const auto reports = run_suite(suite, so);
  int failed = 0;
  for (const auto& r : reports) failed += !r.passed;
  if (o.format == "csv") {
    write_reports_csv(out, reports);
  } else {
    Json meta = base_meta("verify");
    meta["suite"] = to_string(suite);
    meta["seed"] = so.seed;
    meta["gamma_grid"] = so.gamma_grid;
    meta["checks"] = reports.size();
    meta["failed"] = failed;
    write_reports_json(out, meta, reports);
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

void emit_sweep(const Options& o, std::ostream& out, SweepResult r, const std::string& command) {
  r.meta["command"] = command;
  if (o.format == "csv") {
    write_sweep_csv(out, r);
  } else {
    write_sweep_json(out, r);
  }
}

int cmd_sweep_error(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json"});
  const double g = gamma_value(o);
  const Parity parity = usage_guard([&] { return parse_parity(o.parity); });
  const BoundaryCondition bc = usage_guard([&] { return parse_boundary_condition(o.bc); });
  auto r = usage_guard([&] { return spectrum_error_report(o.modes, GegenbauerIndex(g), parity, bc, o.threshold); });
  emit_sweep(o, out, std::move(r), "sweep-error");
  return kExitOk;
}

int cmd_sweep_conditioning(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json"});
  const double g = gamma_value(o);
  std::vector<int> grid = default_conditioning_grid();
  if (o.m_grid != "default") {
    grid.clear();
    for (double v : parse_real_list(o.m_grid)) grid.push_back(static_cast<int>(v));
  }
  std::vector<PencilVariant> variants{PencilVariant::diff_elim_last, PencilVariant::diff_elim_first,
                                      PencilVariant::galerkin_basis, PencilVariant::integration};
  if (o.variants != "default") {
    variants.clear();
    for (const auto& v : split(o.variants, ',')) variants.push_back(usage_guard([&] { return parse_pencil_variant(v); }));
  }
  ConditioningOptions co;
  co.tail_start = o.tail_start;
  auto r = usage_guard([&] { return conditioning_sweep(GegenbauerIndex(g), grid, variants, co); });
  emit_sweep(o, out, std::move(r), "sweep-conditioning");
  return kExitOk;
}

int cmd_sweep_gamma(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json"});
  const Parity parity = usage_guard([&] { return parse_parity(o.parity); });
  std::vector<double> grid;
  if (o.gamma_grid == "default") {
    for (int i = 0; i <= 10; ++i) grid.push_back(2.0 + 0.1 * i);
  } else {
    grid = parse_real_list(o.gamma_grid);
  }
  auto r = usage_guard([&] { return gamma_scan(o.modes, grid, parity, o.tol_real); });
  emit_sweep(o, out, std::move(r), "sweep-gamma");
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gegenbauer and Jacobi Tau spectra and theorem checks", "gtau"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv | json");
    sub->add_option("--out", o.out, "output file (default: standard output)");
  };
  auto add_gamma = [&](CLI::App* sub) { sub->add_option("--gamma", o.gamma, "Gegenbauer index (> -1/2)"); };
  auto add_parity = [&](CLI::App* sub) { sub->add_option("--parity", o.parity, "even | odd"); };

  auto* gi2 = app.add_subcommand("gi2", "double-integration operator matrix");
  gi2->add_option("--modes", o.modes, "mode count m >= 2")->required();
  add_gamma(gi2);
  add_parity(gi2);
  gi2->add_option("--view", o.view, "rect ((m+1) x m) | square (m x m)");
  gi2->add_option("--format", o.format, "csv | json | coo");
  gi2->add_option("--out", o.out, "output file (default: standard output)");

  auto* eig = app.add_subcommand("eig", "spectrum with errors against the exact eigenvalues");
  eig->add_option("--modes", o.modes, "mode count")->required();
  add_gamma(eig);
  add_parity(eig);
  eig->add_option("--bc", o.bc, "dirichlet | neumann");
  eig->add_option("--variant", o.variant, "integration | diff-elim-last | diff-elim-first | galerkin-basis | "
                                          "ierley-legendre");
  eig->add_option("--tol-real", o.tol_real, "reality tolerance relative to |lambda|");
  eig->add_option("--threshold", o.threshold, "precision threshold for the accuracy fraction");
  add_out(eig);

  auto* cp = app.add_subcommand("charpoly", "characteristic polynomials in mu = 1/lambda");
  cp->add_option("--modes", o.modes, "m_max (Gegenbauer) or degree n (Jacobi)")->required();
  add_gamma(cp);
  add_parity(cp);
  auto* alpha = cp->add_option("--alpha", o.alpha, "Jacobi alpha (> -1)");
  auto* beta = cp->add_option("--beta", o.beta, "Jacobi beta (> -1)");
  cp->add_option("--bc", o.bc, "dirichlet | mixed (Jacobi)");
  cp->add_flag("--exact", o.exact, "rational arithmetic (gamma as p/q or a decimal)");
  cp->add_flag("--roots", o.roots, "include roots in JSON output");
  add_out(cp);

  auto* ver = app.add_subcommand("verify", "theorem checks");
  ver->add_option("--suite", o.suite, "theorems | jacobi | phi | hermite-biehler | all");
  ver->add_option("--gamma-grid", o.gamma_grid, "default or comma-separated gamma values");
  ver->add_option("--seed", o.seed, "seed for randomized checks");
  add_out(ver);

  auto* se = app.add_subcommand("sweep-error", "per-mode relative errors of the integration spectrum");
  se->add_option("--modes", o.modes, "mode count")->required();
  add_gamma(se);
  add_parity(se);
  se->add_option("--bc", o.bc, "dirichlet | neumann");
  se->add_option("--threshold", o.threshold, "precision threshold for the accuracy fraction");
  add_out(se);

  auto* sc = app.add_subcommand("sweep-conditioning", "first even eigenvalue error against m per formulation");
  add_gamma(sc);
  sc->add_option("--m-grid", o.m_grid, "default or comma-separated ascending mode counts");
  sc->add_option("--variants", o.variants, "default or comma-separated variant tags");
  sc->add_option("--variant", o.variants, "alias of --variants");
  sc->add_option("--tail-start", o.tail_start, "smallest m entering the slope fit");
  add_out(sc);

  auto* sg = app.add_subcommand("sweep-gamma", "non-real eigenvalue counts against gamma");
  sg->add_option("--modes", o.modes, "mode count")->required();
  add_parity(sg);
  sg->add_option("--gamma-grid", o.gamma_grid, "default (2.0:0.1:3.0) or comma-separated values");
  sg->add_option("--tol-real", o.tol_real, "reality tolerance relative to |lambda|");
  add_out(sg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (gi2->parsed()) code = cmd_gi2(o, buffer);
    if (eig->parsed()) code = cmd_eig(o, buffer);
    if (cp->parsed()) code = cmd_charpoly(o, buffer, alpha->count() > 0 || beta->count() > 0);
    if (ver->parsed()) code = cmd_verify(o, buffer);
    if (se->parsed()) code = cmd_sweep_error(o, buffer);
    if (sc->parsed()) code = cmd_sweep_conditioning(o, buffer);
    if (sg->parsed()) code = cmd_sweep_gamma(o, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << o.out << "' for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace gtau
