/*!
 * \file decomposition.hpp
 * \brief Decomposition of a network into simple modules along its strongly connected components.
 */

#pragma once

#include "boolnet/network.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace boolnet
{

/*! \brief A network cut into simple modules.
 *
 * `components` partitions the node indices of the decomposed network, each
 * list increasing, in a topological order of the condensation; ties are
 * broken by the smallest node index, so the order is deterministic.
 * `q_graph` holds one edge (i, j) per ordered component pair with at least
 * one regulation from component i into component j; i < j always holds.
 * `modules` are the restrictions of the network to each component and
 * `cuts` records the values the cut regulations were fixed to.
 */
struct decomposition
{
  std::vector<std::vector<uint32_t>> components;
  std::vector<std::pair<uint32_t, uint32_t>> q_graph;
  std::vector<boolean_network> modules;
  cut_record cuts;
};

/*! \brief Decomposes a network into the restrictions to its strongly connected components. */
decomposition scc_decompose( boolean_network const& network, cut_policy const& policy = {} );

} // namespace boolnet
