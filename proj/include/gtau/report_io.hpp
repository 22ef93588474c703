#pragma once

#include "gtau/charpoly.hpp"
#include "gtau/sweeps.hpp"
#include "gtau/verify.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace gtau {

/// %.17g.
std::string format_double(double v);

/// Comma-separated, one header row, LF line endings.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Row-major dense CSV with header c0, c1, ...
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& a);

/// "rows cols nnz" then one "i j value" line per non-zero (0-based, row-major).
void write_matrix_coordinate(std::ostream& out, const Eigen::MatrixXd& a);

/// {"meta": ..., "data": ...} followed by a newline.
void write_json(std::ostream& out, const Json& meta, const Json& data);

Json matrix_to_json(const Eigen::MatrixXd& a);

/// Ascending coefficient array.
Json polynomial_to_json(const MuPolynomial& p);
Json polynomial_to_json(const ExactMuPolynomial& p);  // "num/den" strings

void write_sweep_csv(std::ostream& out, const SweepResult& r);
void write_sweep_json(std::ostream& out, const SweepResult& r);
Json sweep_data_json(const SweepResult& r);
Json fit_to_json(const SlopeFit& f);

void write_reports_csv(std::ostream& out, const std::vector<VerificationReport>& reports);
void write_reports_json(std::ostream& out, const Json& meta, const std::vector<VerificationReport>& reports);

}  // namespace gtau
