/*!
 * \file parse.hpp
 * \brief Parser for networks written as one update rule per line.
 */

#pragma once

#include "boolnet/network.hpp"

#include <string>

namespace boolnet
{

/*! \brief Parses update rules of the form `name = expression` into a network.
 *
 * An expression combines identifiers, the constants 0 and 1, parentheses,
 * and the operators !, &, ^, | in decreasing binding strength, the binary
 * ones left associative.  '#' starts a comment; blank lines are skipped.
 * Every identifier must be the target of exactly one rule, and the node
 * order follows the rule order.  Syntax and resolution errors are thrown
 * as parse_error with 1-based line and column; a rule over more than 20
 * distinct variables throws resource_error.
 */
boolean_network parse_network( std::string const& text );

} // namespace boolnet
