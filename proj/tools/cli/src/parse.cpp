// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/cli/parse.hpp"

#include "cfpolar/error.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

namespace cfpolar::cli
{

namespace
{
  [[noreturn]] void parse_failure(std::size_t line, std::size_t column, const std::string& what)
  {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }

  void check_dim(int n, std::optional<int> expected)
  {
    require_supported_dim(n);
    if (expected && *expected != n)
      throw Error(ErrorCode::dim_mismatch, "input is " + std::to_string(n) + "x" + std::to_string(n) + " but --dim is " +
                                               std::to_string(*expected));
  }

  /// 1-based line and column of a byte offset.
  std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset)
  {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k)
    {
      if (text[k] == '\n')
      {
        ++line;
        column = 1;
      }
      else
        ++column;
    }
    return {line, column};
  }

  Matrix from_rows(const std::vector<std::vector<double>>& rows, std::optional<int> expected)
  {
    const int n = static_cast<int>(rows.size());
    check_dim(n, expected);
    Matrix m(n);
    for (int i = 0; i < n; ++i)
    {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != n)
        throw Error(ErrorCode::dim_mismatch, "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                                 " entries, expected " + std::to_string(n));
      for (int j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
    }
    return m;
  }

  Matrix parse_json(std::string_view text, std::optional<int> expected)
  {
    nlohmann::json doc;
    try
    {
      doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
      const auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
      parse_failure(line, column, "malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
      parse_failure(1, 1, "expected an object with a \"rows\" array");

    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < doc["rows"].size(); ++i)
    {
      const auto& row = doc["rows"][i];
      if (!row.is_array()) parse_failure(1, 1, "rows[" + std::to_string(i) + "] is not an array");
      std::vector<double> values;
      for (std::size_t j = 0; j < row.size(); ++j)
      {
        if (!row[j].is_number()) parse_failure(1, 1, "rows[" + std::to_string(i) + "][" + std::to_string(j) + "] is not a number");
        values.push_back(row[j].get<double>());
      }
      rows.push_back(std::move(values));
    }
    if (doc.contains("dim"))
    {
      if (!doc["dim"].is_number_integer()) parse_failure(1, 1, "\"dim\" must be an integer");
      const int declared = doc["dim"].get<int>();
      require_supported_dim(declared);
      if (declared != static_cast<int>(rows.size()))
        throw Error(ErrorCode::dim_mismatch, "\"dim\" is " + std::to_string(declared) + " but there are " +
                                                 std::to_string(rows.size()) + " rows");
    }
    return from_rows(rows, expected);
  }

  std::string_view trim(std::string_view s, std::size_t& lead)
  {
    lead = 0;
    while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
    std::size_t end = s.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(lead, end - lead);
  }

  Matrix parse_csv(std::string_view text, std::optional<int> expected)
  {
    std::vector<std::vector<double>> rows;
    std::size_t line = 1;
    std::size_t line_start = 0;
    std::size_t start = 0;
    while (start <= text.size())
    {
      std::size_t stop = text.find_first_of("\n;", start);
      if (stop == std::string_view::npos) stop = text.size();
      std::string_view raw = text.substr(start, stop - start);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

      std::size_t lead = 0;
      if (!trim(raw, lead).empty())
      {
        std::vector<double> values;
        std::size_t field_start = 0;
        while (true)
        {
          const std::size_t comma = raw.find(',', field_start);
          const std::string_view field = raw.substr(field_start, comma == std::string_view::npos ? raw.npos : comma - field_start);
          const std::string_view token = trim(field, lead);
          const std::size_t column = start + field_start + lead - line_start + 1;
          double v = 0.0;
          const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
          if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            parse_failure(line, column, "expected a number, found \"" + std::string(token) + "\"");
          values.push_back(v);
          if (comma == std::string_view::npos) break;
          field_start = comma + 1;
        }
        rows.push_back(std::move(values));
      }
      start = stop + 1;
      if (stop < text.size() && text[stop] == '\n')
      {
        ++line;
        line_start = start;
      }
    }
    if (rows.empty()) parse_failure(1, 1, "no matrix rows found");
    return from_rows(rows, expected);
  }
}  // namespace

Matrix parse_matrix(std::string_view text, std::optional<int> expected_dim)
{
  std::size_t lead = 0;
  const std::string_view body = trim(text, lead);
  if (!body.empty() && body.front() == '{') return parse_json(text, expected_dim);
  return parse_csv(text, expected_dim);
}

SymmetrizedInput symmetrize(const Matrix& a)
{
  SymmetrizedInput out{a.symmetric_part(), a.max_asymmetry(), false};
  out.warn = out.symmetrization_delta > kSilentAsymmetry * a.frobenius_norm();
  if (!is_positive_definite(out.c)) throw Error(ErrorCode::not_positive_definite, "C is not positive definite");
  return out;
}

std::string read_input(const std::string& path, std::istream& stdin_stream)
{
  if (path == "-") return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::parse_error, "cannot open input file " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace cfpolar::cli
