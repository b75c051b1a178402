/*!
 * \file emit.hpp
 * \brief Deterministic text emitters: update rules, GraphViz, JSON reports.
 */

#pragma once

#include "boolnet/canalization.hpp"
#include "boolnet/counting.hpp"
#include "boolnet/decomposition.hpp"
#include "boolnet/network.hpp"

#include <string>
#include <vector>

namespace boolnet
{

/*! \brief Update rules, one per line, through the algebraic normal form.
 *
 * Uses only ^, & and the constants, so no parentheses are needed, and
 * parse_network reads the text back into an equal network.  Node names
 * must be identifiers; otherwise mapping_error.
 */
std::string emit_expressions( boolean_network const& network );

/*! \brief GraphViz digraph of the wiring diagram, edges sorted by target then regulator. */
std::string emit_dot( boolean_network const& network );

/*! \brief GraphViz digraph of a decomposition.
 *
 * One cluster per module with the regulations inside it, plus one bold
 * edge per module edge, drawn between cluster representatives.
 */
std::string emit_dot( decomposition const& parts, boolean_network const& network );

/*! \brief JSON canalization report; `names` gives the variable names in position order. */
std::string emit_json( canalization_report const& report, std::vector<std::string> const& names );

/*! \brief JSON description of a decomposition: components, module graph (1-based), modules, cuts. */
std::string emit_json( decomposition const& parts, boolean_network const& network );

/*! \brief JSON rendering of an exact count: a decimal string, never a float. */
std::string emit_json( extension_count const& count );

} // namespace boolnet
