/*!
 * \file network.hpp
 * \brief Boolean networks with named nodes, wiring diagrams, and restrictions.
 */

#pragma once

#include "boolean_function.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boolnet
{

/*! \brief One node of a Boolean network.
 *
 * `inputs` lists the indices of the regulator nodes, one per variable of
 * `function`, in variable order: variable i of `function` reads the state
 * of node `inputs[i]`.
 */
struct node
{
  std::string name;
  std::vector<uint32_t> inputs;
  boolean_function function;

  bool operator==( node const& other ) const = default;
};

/*! \brief A synchronous Boolean network in canonical form.
 *
 * The constructor validates the node list (nonempty unique names, input
 * indices in range and distinct per node, input count equal to the function
 * arity) and canonicalizes every node: inert inputs are pruned and the
 * remaining inputs are sorted by node index, with the truth table permuted
 * to match.  Two networks compare equal exactly when they have the same
 * named nodes with the same essential wiring and the same local functions.
 */
class boolean_network
{
public:
  explicit boolean_network( std::vector<node> nodes );

  uint32_t size() const { return uint32_t( nodes_.size() ); }
  node const& operator[]( uint32_t index ) const { return nodes_[index]; }
  std::vector<node> const& nodes() const { return nodes_; }

  /*! \brief Index of the node with the given name; throws mapping_error if absent. */
  uint32_t index_of( std::string const& name ) const;

  /*! \brief True when some node carries the given name. */
  bool has_node( std::string const& name ) const;

  /*! \brief Synchronous update of a full state vector. */
  std::vector<uint8_t> step( std::vector<uint8_t> const& state ) const;

  bool operator==( boolean_network const& other ) const = default;

private:
  std::vector<node> nodes_;
};

/*! \brief Directed wiring diagram: one edge per essential regulation. */
struct wiring_diagram
{
  uint32_t size = 0;
  /*! Edges as (regulator, target) pairs, sorted by target then regulator. */
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  bool operator==( wiring_diagram const& other ) const = default;
};

/*! \brief Wiring diagram of a network. */
wiring_diagram wiring( boolean_network const& network );

/*! \brief Indices of nodes without regulators, in increasing order. */
std::vector<uint32_t> external_parameters( boolean_network const& network );

/*! \brief How to fix the inputs that a network restriction cuts away.
 *
 * `zeros` fixes every cut input to 0.  `ncf_defaults` fixes each cut input
 * of a nested canalizing node to the complement of its canalizing input,
 * which keeps the node nested canalizing; it rejects non-NCF nodes that
 * lose an input.  `explicit_map` reads the value of every cut node from
 * `values`, keyed by node name; entries for kept nodes are ignored so one
 * map can serve all components of a decomposition.
 */
struct cut_policy
{
  enum class kind_t
  {
    zeros,
    ncf_defaults,
    explicit_map
  };

  kind_t kind = kind_t::zeros;
  std::map<std::string, uint8_t> values;
};

/*! \brief Which value every cut regulation was fixed to.
 *
 * Keyed by kept node name, then by the name of the dropped regulator.  Only
 * nodes that actually lost an input appear.
 */
struct cut_record
{
  std::map<std::string, std::map<std::string, uint8_t>> assignments;

  bool operator==( cut_record const& other ) const = default;
};

/*! \brief Restriction of a network to a subset of its nodes.
 *
 * Keeps the nodes listed in `keep` (distinct in-range indices) in the given
 * order and fixes every regulation from a dropped node to the value chosen
 * by `policy`.  The result is canonical, so inputs made inert by the fixing
 * disappear.  When `record` is non-null it receives the chosen values.
 * Throws partition_error for a bad `keep` list and policy_error when the
 * policy cannot produce a value.
 */
boolean_network restrict_network( boolean_network const& network,
                                  std::vector<uint32_t> const& keep,
                                  cut_policy const& policy = {},
                                  cut_record* record = nullptr );

/*! \brief Tests whether `extended` extends `base`.
 *
 * The nodes of `base` must form a prefix of `extended` by name (otherwise
 * mapping_error): the new nodes come after.  The test holds when for every
 * node of `base` some fixing of the node's new-node regulators in
 * `extended` reproduces the original local function, including its
 * dependence on old nodes.  Throws resource_error when a node has more
 * than 20 new-node regulators.
 */
bool is_network_extension( boolean_network const& extended, boolean_network const& base );

} // namespace boolnet
