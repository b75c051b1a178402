/*!
 * \file composition.hpp
 * \brief Composition of networks along an acyclic module graph, and extension counts.
 */

#pragma once

#include "boolnet/counting.hpp"
#include "boolnet/graphical.hpp"
#include "boolnet/network.hpp"
#include "boolnet/placement.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boolnet
{

/*! \brief Disjoint union: the parts side by side with no regulation between them.
 *
 * Node indices of part p are shifted by the total size of the earlier
 * parts.  Throws mapping_error when two parts share a node name.
 */
boolean_network compose_disjoint( std::vector<boolean_network> const& parts );

/*! \brief Composes graphically defined parts along an acyclic module graph.
 *
 * Every part must belong to the family.  `q_graph` lists the module edges
 * as (earlier part, later part) index pairs with i < j; `connections` maps
 * each such edge to the block wiring the earlier part's nodes into the
 * later part's, with one row per target node and one column per regulator
 * node.  Each edge needs a nonzero block (contradiction_error) and every
 * block must sit on an edge (order_error).
 */
boolean_network compose_graphical(
    std::vector<boolean_network> const& parts,
    std::vector<std::pair<uint32_t, uint32_t>> const& q_graph, graphical_family family,
    std::map<std::pair<uint32_t, uint32_t>, labeled_matrix> const& connections );

/*! \brief One cross-module regulation realized by an NCF placement. */
struct ncf_wiring
{
  std::string regulator;
  std::string target;
  ncf_placement placement;
};

/*! \brief Composes parts of nested canalizing nodes along an acyclic module graph.
 *
 * Starts from the disjoint union and applies the wirings in order: each one
 * extends the target node's function by the regulator through the given
 * placement, so every intermediate target function stays nested canalizing
 * and restricting the result back to a part recovers it.  A wiring must
 * point from an earlier part into a later one along an edge of `q_graph`
 * (order_error) and every edge must carry at least one wiring
 * (contradiction_error).
 */
boolean_network compose_ncf( std::vector<boolean_network> const& parts,
                             std::vector<std::pair<uint32_t, uint32_t>> const& q_graph,
                             std::vector<ncf_wiring> const& wirings );

/*! \brief Number of wired extensions of a network by m unconstrained new nodes.
 *
 * Each node independently picks the subset of new nodes it reads and an
 * extension of its local function by that many variables; the product over
 * the nodes counts the combinations.
 */
extension_count count_network_extensions_general( boolean_network const& network, uint32_t m );

/*! \brief Like count_network_extensions_general with every choice nested canalizing.
 *
 * Throws domain_error when some local function is not nested canalizing.
 */
extension_count count_network_extensions_ncf( boolean_network const& network, uint32_t m );

} // namespace boolnet
