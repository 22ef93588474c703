#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtau/report_io.hpp"
#include "gtau/sweeps.hpp"

#include <cmath>
#include <sstream>

using namespace gtau;
using doctest::Approx;

TEST_CASE("log-log fit") {
  std::vector<double> x{10, 20, 40, 80, 160}, y;
  for (double v : x) y.push_back(3e-12 * std::pow(v, 4));
  auto f = fit_loglog(x, y, "exact");
  CHECK(f.slope == Approx(4.0).epsilon(1e-12));
  CHECK(f.intercept == Approx(std::log10(3e-12)).epsilon(1e-12));
  CHECK(f.ci_low <= f.slope);
  CHECK(f.ci_high >= f.slope);
  CHECK(f.ci_high - f.ci_low < 1e-8);
  CHECK(f.points == 5);
  CHECK(f.x_min == 10);
  CHECK(f.x_max == 160);

  // Five points, three residual degrees of freedom: t_{0.975,3} = 3.182446305284263.
  const std::vector<double> lx{0, 1, 2, 3, 4}, ly{0.1, 1.9, 4.2, 5.8, 8.1};
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    xs.push_back(std::pow(10.0, lx[i]));
    ys.push_back(std::pow(10.0, ly[i]));
  }
  f = fit_loglog(xs, ys);
  double sxx = 0, sxy = 0, mx = 2.0, my = 0;
  for (double v : ly) my += v / 5;
  for (std::size_t i = 0; i < 5; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double b = sxy / sxx, a = my - b * mx;
  double sse = 0;
  for (std::size_t i = 0; i < 5; ++i) sse += std::pow(ly[i] - a - b * lx[i], 2);
  const double se = std::sqrt(sse / 3 / sxx);
  CHECK(f.slope == Approx(b).epsilon(1e-12));
  CHECK(f.ci_low == Approx(b - 3.182446305284263 * se).epsilon(1e-10));
  CHECK(f.ci_high == Approx(b + 3.182446305284263 * se).epsilon(1e-10));

  CHECK_THROWS_AS(fit_loglog({1, 2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(fit_loglog({1, 2, 3}, {1, 0, 2}), std::invalid_argument);
}

TEST_CASE("spectrum error report") {
  const auto r = spectrum_error_report(10, GegenbauerIndex(0.5), Parity::odd);
  CHECK(r.grid.size() == r.values.size());
  CHECK(r.grid.size() == 10);
  CHECK(r.grid_keys == std::vector<std::string>{"k"});
  CHECK(r.value_keys == std::vector<std::string>{"lambda_re", "lambda_im", "lambda_exact", "rel_err"});
  CHECK(r.column("rel_err")[0] < 1e-12);
  CHECK(r.meta["fraction_below_threshold"].get<double>() > 0.0);
  CHECK(r.meta["fraction_below_threshold"].get<double>() <= 1.0);
  CHECK(r.meta["max_abs_lambda"].get<double>() == Approx(-r.column("lambda_re").back()));
  CHECK_THROWS(r.column("nope"));
}

TEST_CASE("conditioning sweep shape") {
  const auto r = conditioning_sweep(GegenbauerIndex(0.0), {16, 24, 32, 48, 64},
                                    {PencilVariant::diff_elim_last, PencilVariant::integration});
  CHECK(r.grid.size() == 10);
  CHECK(r.grid.size() == r.values.size());
  CHECK(r.fits.size() == 1);
  CHECK(r.fits[0].label == "diff-elim-last");
  CHECK(r.fits[0].points == 3);
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    if (r.grid[i][0] == "integration") CHECK(r.values[i][0] < 1e-12);
  }
  CHECK_THROWS_AS(conditioning_sweep(GegenbauerIndex(0.0), {32, 16, 64}, {PencilVariant::integration}),
                  std::invalid_argument);
  CHECK(default_conditioning_grid().back() == 1024);
}

TEST_CASE("gamma scan") {
  const auto r = gamma_scan(200, {2.5, 3.0}, Parity::odd);
  REQUIRE(r.grid.size() == 2);
  const auto pairs = r.column("complex_pairs");
  CHECK(pairs[0] == 0.0);
  CHECK(pairs[1] >= 1.0);
  CHECK(gamma_scan(50, {0.5}, Parity::even).column("complex_pairs")[0] == 0.0);
  CHECK_THROWS(gamma_scan(20, {-0.6}, Parity::even));
}

TEST_CASE("csv and json writers") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.0) == "-2");
  std::ostringstream csv;
  write_csv(csv, {"a", "b"}, {{"1", "2"}, {"3", "4"}});
  CHECK(csv.str() == "a,b\n1,2\n3,4\n");

  Eigen::MatrixXd m(2, 2);
  m << 1.5, 0, 0, -0.25;
  std::ostringstream mc;
  write_matrix_csv(mc, m);
  CHECK(mc.str() == "c0,c1\n1.5,0\n0,-0.25\n");
  std::ostringstream coo;
  write_matrix_coordinate(coo, m);
  CHECK(coo.str() == "2 2 2\n0 0 1.5\n1 1 -0.25\n");

  std::ostringstream js;
  write_json(js, Json{{"k", 1}}, matrix_to_json(m));
  const Json doc = Json::parse(js.str());
  CHECK(doc.size() == 2);
  CHECK(doc["meta"]["k"] == 1);
  CHECK(doc["data"][1][1] == -0.25);

  const ExactMuPolynomial p({mpq_class(1, 4), mpq_class(20)});
  CHECK(polynomial_to_json(p) == Json::array({"1/4", "20"}));
  CHECK(polynomial_to_json(MuPolynomial({0.5, 2.0})) == Json::array({0.5, 2.0}));
}

TEST_CASE("sweep and report writers") {
  SweepResult r;
  r.name = "demo";
  r.grid_keys = {"variant", "m"};
  r.value_keys = {"rel_err"};
  r.grid = {Json::array({"integration", 16}), Json::array({"integration", 32})};
  r.values = {{1e-16}, {2e-16}};
  r.fits.push_back(SlopeFit{"x", 4.0, -12.0, 3.5, 4.5, 3, 16, 32});
  std::ostringstream csv;
  write_sweep_csv(csv, r);
  CHECK(csv.str() == "variant,m,rel_err\nintegration,16,9.9999999999999998e-17\nintegration,32,2e-16\n");
  std::ostringstream js;
  write_sweep_json(js, r);
  const Json doc = Json::parse(js.str());
  CHECK(doc["meta"]["name"] == "demo");
  CHECK(doc["meta"]["fits"][0]["slope"] == 4.0);
  CHECK(doc["data"][1]["m"] == 32);

  std::vector<VerificationReport> reps{make_report("c", Json{{"g", 0.5}}, -1, 0, Inequality::less)};
  std::ostringstream rc;
  write_reports_csv(rc, reps);
  CHECK(rc.str() == "check,parameters,passed,margin,tolerance,direction\nc,\"{\"\"g\"\":0.5}\",true,-1,0,lt\n");
}
