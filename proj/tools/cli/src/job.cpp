// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/cli/job.hpp"

#include "cfpolar/tensor.hpp"

#include <array>
#include <utility>

namespace cfpolar::cli
{

namespace
{
  constexpr std::array<std::pair<std::string_view, Command>, 7> kCommands{{
      {"invariants", Command::invariants},
      {"sqrt", Command::sqrt},
      {"invsqrt", Command::invsqrt},
      {"polar", Command::polar},
      {"roots", Command::roots},
      {"selftest", Command::selftest},
      {"bench", Command::bench},
  }};
}  // namespace

std::string_view command_name(Command command)
{
  for (const auto& [name, value] : kCommands)
    if (value == command) return name;
  return "unknown";
}

std::optional<Command> parse_command(std::string_view text)
{
  for (const auto& [name, value] : kCommands)
    if (name == text) return value;
  return std::nullopt;
}

std::optional<InputKind> parse_kind(std::string_view text)
{
  if (text == "C") return InputKind::C;
  if (text == "F") return InputKind::F;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view text)
{
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "pretty") return Format::pretty;
  return std::nullopt;
}

InputKind effective_kind(const JobSpec& job)
{
  if (job.kind) return *job.kind;
  return job.command == Command::polar ? InputKind::F : InputKind::C;
}

double effective_tolerance(const JobSpec& job, int dim)
{
  if (job.tol) return *job.tol;
  return dim <= 4 ? 1e-9 : 1e-7;
}

bool needs_matrix(Command command)
{
  return command != Command::selftest && command != Command::bench;
}

void validate(const JobSpec& job)
{
  if (job.dim && (*job.dim < kMinDim || *job.dim > kMaxDim))
    throw UsageError("--dim must be between 2 and 6");
  if (job.tol && !(*job.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!(job.cond >= 1.0)) throw UsageError("--cond must be at least 1");
  if (job.batch < 1) throw UsageError("--n must be at least 1");
  if (job.command == Command::polar && effective_kind(job) != InputKind::F)
    throw UsageError("polar decomposes a deformation gradient: use --kind F");
}

}  // namespace cfpolar::cli
