// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace cfpolar::cli
{

namespace
{
  bool is_numeric_array(const nlohmann::json& j)
  {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& v : j)
      if (!v.is_number() && !v.is_boolean()) return false;
    return true;
  }

  bool is_matrix(const nlohmann::json& j)
  {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& row : j)
      if (!is_numeric_array(row)) return false;
    return true;
  }

  std::string scalar_text(const nlohmann::json& v)
  {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float())
    {
      std::ostringstream out;
      out << std::setprecision(17) << v.get<double>();
      return out.str();
    }
    return v.dump();
  }

  std::string csv_field(const std::string& s)
  {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s)
    {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  }

  void flatten_csv(const nlohmann::json& j, const std::string& path, std::ostringstream& out)
  {
    if (is_matrix(j))
    {
      for (std::size_t i = 0; i < j.size(); ++i)
      {
        out << csv_field(path + "[" + std::to_string(i) + "]");
        for (const auto& v : j[i]) out << ',' << scalar_text(v);
        out << '\n';
      }
    }
    else if (is_numeric_array(j))
    {
      out << csv_field(path);
      for (const auto& v : j) out << ',' << scalar_text(v);
      out << '\n';
    }
    else if (j.is_object())
    {
      for (const auto& [key, value] : j.items()) flatten_csv(value, path.empty() ? key : path + "." + key, out);
    }
    else if (j.is_array())
    {
      for (std::size_t i = 0; i < j.size(); ++i) flatten_csv(j[i], path + "[" + std::to_string(i) + "]", out);
    }
    else
      out << csv_field(path) << ',' << csv_field(scalar_text(j)) << '\n';
  }

  void pretty_value(const nlohmann::json& j, const std::string& key, int indent, std::ostringstream& out)
  {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (is_matrix(j))
    {
      out << pad << key << ":\n";
      for (const auto& row : j)
      {
        out << pad << "  ";
        for (const auto& v : row) out << std::setw(24) << std::setprecision(15) << v.get<double>();
        out << '\n';
      }
    }
    else if (j.is_object() && j.contains("value") && j.contains("tol") && j.contains("pass"))
    {
      out << pad << key << ": " << std::setprecision(3) << std::scientific << j["value"].get<double>() << " (tol "
          << j["tol"].get<double>() << ") " << (j["pass"].get<bool>() ? "ok" : "FAIL") << std::defaultfloat << '\n';
    }
    else if (j.is_object())
    {
      out << pad << key << ":\n";
      for (const auto& [k, v] : j.items()) pretty_value(v, k, indent + 2, out);
    }
    else if (j.is_array() && !is_numeric_array(j))
    {
      out << pad << key << ":\n";
      for (std::size_t i = 0; i < j.size(); ++i) pretty_value(j[i], "[" + std::to_string(i) + "]", indent + 2, out);
    }
    else if (j.is_array())
    {
      out << pad << key << ":";
      for (const auto& v : j) out << ' ' << std::setprecision(15) << scalar_text(v);
      out << '\n';
    }
    else
      out << pad << key << ": " << scalar_text(j) << '\n';
  }
}  // namespace

nlohmann::json matrix_json(const Matrix& m)
{
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i)
  {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json matrix_json(const SymTensor& s) { return matrix_json(s.full()); }

nlohmann::json residual_json(double value, double tol)
{
  return {{"value", value}, {"tol", tol}, {"pass", value <= tol}};
}

void add_residual(Report& report, const std::string& name, double value, double tol)
{
  report.residuals[name] = residual_json(value, tol);
}

bool residuals_pass(const Report& report)
{
  for (const auto& [key, value] : report.residuals.items())
    if (value.contains("pass") && !value["pass"].get<bool>()) return false;
  return true;
}

nlohmann::json to_json(const Report& report)
{
  nlohmann::json out{{"command", report.command},
      {"result", report.result},
      {"residuals", report.residuals},
      {"route", report.route},
      {"warnings", report.warnings}};
  if (report.error) out["error"] = {{"code", report.error->code}, {"message", report.error->message}};
  return out;
}

std::string render(const Report& report, Format format)
{
  const nlohmann::json j = to_json(report);
  std::ostringstream out;
  switch (format)
  {
    case Format::json: out << j.dump(2) << '\n'; break;
    case Format::csv:
      out << "field,value\n";
      flatten_csv(j, "", out);
      break;
    case Format::pretty:
      out << "command: " << report.command << '\n';
      if (!report.route.empty()) out << "route: " << report.route << '\n';
      if (report.error) out << "error: " << report.error->code << ": " << report.error->message << '\n';
      if (!report.result.empty()) pretty_value(report.result, "result", 0, out);
      if (!report.residuals.empty()) pretty_value(report.residuals, "residuals", 0, out);
      for (const auto& w : report.warnings) out << "warning: " << w << '\n';
      break;
  }
  return out.str();
}

}  // namespace cfpolar::cli
