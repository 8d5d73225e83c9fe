// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_CLI_JOB_HPP
#define CFPOLAR_CLI_JOB_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cfpolar::cli
{

enum class Command
{
  invariants,
  sqrt,
  invsqrt,
  polar,
  roots,
  selftest,
  bench
};

enum class InputKind
{
  C,
  F
};

enum class Format
{
  json,
  csv,
  pretty
};

std::string_view command_name(Command command);
std::optional<Command> parse_command(std::string_view text);
std::optional<InputKind> parse_kind(std::string_view text);
std::optional<Format> parse_format(std::string_view text);

/// Misuse of the tool itself (flag combinations, ranges); reported as a validation error.
class UsageError : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec
{
  Command command = Command::invariants;
  /// "-" reads standard input.
  std::string input_path = "-";
  /// Inline matrix text (rows separated by ';' or newlines); takes precedence over input_path.
  std::optional<std::string> inline_matrix;
  std::optional<InputKind> kind;
  std::optional<int> dim;
  std::optional<double> tol;
  Format format = Format::json;
  std::string output_path = "-";
  std::uint64_t seed = 20240611;
  /// Upper bound on the condition number of C for generated batches.
  double cond = 1e6;
  int batch = 1000;
};

/// polar reads F; every other command reads C unless told otherwise.
InputKind effective_kind(const JobSpec& job);

/// Residual tolerance: the override if given, else 1e-9 for dim <= 4 and 1e-7 above.
double effective_tolerance(const JobSpec& job, int dim);

bool needs_matrix(Command command);

/// Throws UsageError on out-of-range flags or incompatible combinations.
void validate(const JobSpec& job);

}  // namespace cfpolar::cli

#endif
