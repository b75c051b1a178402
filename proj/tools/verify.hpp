/*!
 * \file verify.hpp
 * \brief Desk-scale oracle suite behind the verify subcommand.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boolnet
{

/*! \brief Names of the oracle checks, in execution order. */
std::vector<std::string> verify_check_names();

/*! \brief Runs the oracle suite, or a single check when `only` is nonempty.
 *
 * Prints one status line per check plus a summary line.  Returns the number
 * of failed checks.
 */
int run_verify_suite( std::string const& only, std::ostream& out );

} // namespace boolnet
