// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace cfpolar::cli;

int main(int argc, char** argv)
{
  CLI::App app{"Eigendecomposition-free square root, inverse square root and polar decomposition for dimensions 2 to 6"};
  app.option_defaults()->always_capture_default();

  JobSpec job;
  const std::map<std::string, Command> commands{{"invariants", Command::invariants}, {"sqrt", Command::sqrt},
      {"invsqrt", Command::invsqrt}, {"polar", Command::polar}, {"roots", Command::roots},
      {"selftest", Command::selftest}, {"bench", Command::bench}};
  const std::map<std::string, InputKind> kinds{{"C", InputKind::C}, {"F", InputKind::F}};
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};

  app.add_option("command", job.command, "invariants | sqrt | invsqrt | polar | roots | selftest | bench")
      ->required()
      ->transform(CLI::CheckedTransformer(commands).description(""))
      ->option_text("COMMAND");
  app.add_option("--dim", job.dim, "expected dimension (2..6); for bench, the dimension to time");
  app.add_option("--kind", job.kind, "input is C (SPD) or F (deformation gradient)")
      ->transform(CLI::CheckedTransformer(kinds).description(""))
      ->option_text("C|F");
  app.add_option("--in", job.input_path, "input file, '-' for standard input");
  app.add_option("--matrix", job.inline_matrix, "inline matrix, rows separated by ';'");
  app.add_option("--out", job.output_path, "output file, '-' for standard output");
  app.add_option("--format", job.format, "output format")->transform(CLI::CheckedTransformer(formats).description(""))
      ->option_text("json|csv|pretty");
  app.add_option("--tol", job.tol, "residual tolerance (default 1e-9 for dim <= 4, 1e-7 above)");
  app.add_option("--seed", job.seed, "seed for generated batches");
  app.add_option("--cond", job.cond, "condition-number bound of C for generated batches");
  app.add_option("--n", job.batch, "batch size for bench");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return kExitValidation;
  }

  const Report report = run(job, std::cin);
  const std::string text = render(report, job.format);
  if (job.output_path == "-")
    std::cout << text;
  else
  {
    std::ofstream out(job.output_path);
    if (!(out << text))
    {
      std::cerr << "cannot write " << job.output_path << '\n';
      return kExitValidation;
    }
  }
  if (report.error) std::cerr << report.error->code << ": " << report.error->message << '\n';
  return report.exit_code;
}
