// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_CLI_REPORT_HPP
#define CFPOLAR_CLI_REPORT_HPP

#include "cfpolar/cli/job.hpp"
#include "cfpolar/tensor.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cfpolar::cli
{

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct ReportError
{
  std::string code;
  std::string message;
};

/// Outcome of one command. JSON is canonical; CSV and pretty are views of the same tree.
struct Report
{
  std::string command;
  nlohmann::json result = nlohmann::json::object();
  nlohmann::json residuals = nlohmann::json::object();
  std::string route;
  std::vector<std::string> warnings;
  std::optional<ReportError> error;
  int exit_code = kExitSuccess;
};

nlohmann::json matrix_json(const Matrix& m);
nlohmann::json matrix_json(const SymTensor& s);

/// {"value", "tol", "pass"}: every reported residual carries the tolerance it is judged against.
nlohmann::json residual_json(double value, double tol);

/// Adds a residual entry and records whether it passed.
void add_residual(Report& report, const std::string& name, double value, double tol);

/// True when every entry in report.residuals passed.
bool residuals_pass(const Report& report);

nlohmann::json to_json(const Report& report);
std::string render(const Report& report, Format format);

}  // namespace cfpolar::cli

#endif
