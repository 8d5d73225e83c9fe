// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_CLI_COMMANDS_HPP
#define CFPOLAR_CLI_COMMANDS_HPP

#include "cfpolar/cli/job.hpp"
#include "cfpolar/cli/report.hpp"

#include <istream>

namespace cfpolar::cli
{

/**
 * Runs one job to a report. Never throws: input and usage problems become exit code 2,
 * numerical failures and residuals above tolerance become exit code 3.
 */
Report run(const JobSpec& job, std::istream& stdin_stream);

}  // namespace cfpolar::cli

#endif
