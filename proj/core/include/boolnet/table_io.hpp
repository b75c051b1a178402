/*!
 * \file table_io.hpp
 * \brief Truth-table documents: JSON serialization of networks.
 */

#pragma once

#include "boolnet/network.hpp"

#include <string>

namespace boolnet
{

/*! \brief Parses a truth-table document.
 *
 * The document is a JSON object holding a "nodes" array; each element
 * carries "name", "inputs" (an array of node names), and "table" (the
 * row-order bit string of the local function, first listed input most
 * significant).  An optional "variables" array must repeat the node names
 * in order.  Malformed documents throw parse_error; a node with more than
 * 20 inputs throws resource_error.
 */
boolean_network parse_tables( std::string const& text );

/*! \brief Serializes a network as a truth-table document.
 *
 * Two-space indentation and a fixed key order make the output
 * byte-reproducible; parse_tables reads it back unchanged.
 */
std::string emit_tables( boolean_network const& network );

} // namespace boolnet
