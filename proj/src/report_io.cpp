#include "gtau/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace gtau {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& a) {
  std::vector<std::string> header;
  for (Eigen::Index j = 0; j < a.cols(); ++j) header.push_back("c" + std::to_string(j));
  std::vector<std::vector<std::string>> rows;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(format_double(a(i, j)));
    rows.push_back(std::move(row));
  }
  write_csv(out, header, rows);
}

void write_matrix_coordinate(std::ostream& out, const Eigen::MatrixXd& a) {
  Eigen::Index nnz = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) nnz += a(i, j) != 0.0;
  }
  out << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n';
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0) out << i << ' ' << j << ' ' << format_double(a(i, j)) << '\n';
    }
  }
}

void write_json(std::ostream& out, const Json& meta, const Json& data) {
  Json doc;
  doc["meta"] = meta;
  doc["data"] = data;
  out << doc.dump(2) << '\n';
}

Json matrix_to_json(const Eigen::MatrixXd& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json polynomial_to_json(const MuPolynomial& p) {
  Json c = Json::array();
  for (double v : p.coeffs()) c.push_back(v);
  return c;
}

Json polynomial_to_json(const ExactMuPolynomial& p) {
  Json c = Json::array();
  for (const auto& v : p.coeffs()) c.push_back(v.get_str());
  return c;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
  std::vector<std::string> header = r.grid_keys;
  header.insert(header.end(), r.value_keys.begin(), r.value_keys.end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    std::vector<std::string> row;
    for (const auto& g : r.grid[i]) row.push_back(cell(g));
    for (double v : r.values[i]) row.push_back(format_double(v));
    rows.push_back(std::move(row));
  }
  write_csv(out, header, rows);
}

Json fit_to_json(const SlopeFit& f) {
  return Json{{"label", f.label},   {"slope", f.slope},     {"intercept", f.intercept}, {"ci95_low", f.ci_low},
              {"ci95_high", f.ci_high}, {"points", f.points}, {"m_min", f.x_min},         {"m_max", f.x_max}};
}

Json sweep_data_json(const SweepResult& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    Json row;
    for (std::size_t k = 0; k < r.grid_keys.size(); ++k) row[r.grid_keys[k]] = r.grid[i][k];
    for (std::size_t k = 0; k < r.value_keys.size(); ++k) row[r.value_keys[k]] = r.values[i][k];
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_json(std::ostream& out, const SweepResult& r) {
  Json meta = r.meta;
  meta["name"] = r.name;
  if (!r.fits.empty()) {
    Json fits = Json::array();
    for (const auto& f : r.fits) fits.push_back(fit_to_json(f));
    meta["fits"] = fits;
  }
  write_json(out, meta, sweep_data_json(r));
}

void write_reports_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    rows.push_back({r.check_name, r.parameters.dump(), r.passed ? "true" : "false", format_double(r.margin),
                    format_double(r.tolerance), r.direction == Inequality::less ? "lt" : "gt"});
  }
  // Parameters are JSON objects; quote them for CSV.
  for (auto& row : rows) {
    std::string q = "\"";
    for (char ch : row[1]) {
      if (ch == '"') q += '"';
      q += ch;
    }
    row[1] = q + "\"";
  }
  write_csv(out, {"check", "parameters", "passed", "margin", "tolerance", "direction"}, rows);
}

void write_reports_json(std::ostream& out, const Json& meta, const std::vector<VerificationReport>& reports) {
  Json data = Json::array();
  for (const auto& r : reports) data.push_back(r.to_json());
  write_json(out, meta, data);
}

}  // namespace gtau
