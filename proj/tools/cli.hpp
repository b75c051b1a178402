/*!
 * \file cli.hpp
 * \brief In-process entry point of the command line driver.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boolnet
{

/*! \brief Runs the command line driver on the given arguments.
 *
 * `args` excludes the program name.  Counts are written bare to `out`;
 * reports and emitted networks go to `out` unless an output file is chosen.
 * Returns the process exit code: 0 on success, 1 on domain errors, 2 on
 * usage and parse errors.
 */
int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace boolnet
