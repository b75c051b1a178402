/*!
 * \file graphical.hpp
 * \brief Graphically defined networks: labeled adjacency matrices and their realizations.
 */

#pragma once

#include "boolnet/network.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace boolnet
{

/*! \brief Function families whose networks are determined by a labeled wiring matrix. */
enum class graphical_family
{
  linear,
  conjunctive,
  disjunctive,
  and_not,
  or_not
};

/*! \brief Alphabet size of a family: 2 without negation, 3 with. */
uint32_t family_alphabet( graphical_family family );

/*! \brief Display name of a family. */
std::string family_name( graphical_family family );

/*! \brief A row-major matrix over the alphabet {0, ..., z-1}.
 *
 * Entry (j, i) labels the regulation of node j by node i: 0 for none, 1 for
 * a plain input, and 2 (families with negation only) for a negated input.
 */
struct labeled_matrix
{
  uint32_t rows = 0;
  uint32_t cols = 0;
  std::vector<uint8_t> entries;

  labeled_matrix() = default;
  labeled_matrix( uint32_t r, uint32_t c ) : rows( r ), cols( c ), entries( size_t( r ) * c, 0 ) {}
  labeled_matrix( uint32_t r, uint32_t c, std::vector<uint8_t> e )
      : rows( r ), cols( c ), entries( std::move( e ) )
  {
  }

  uint8_t at( uint32_t row, uint32_t col ) const { return entries[size_t( row ) * cols + col]; }
  uint8_t& at( uint32_t row, uint32_t col ) { return entries[size_t( row ) * cols + col]; }

  bool operator==( labeled_matrix const& other ) const = default;
};

/*! \brief The network a square labeled matrix defines in the given family.
 *
 * Row j lists the regulators of node j.  Linear nodes XOR their plain
 * inputs, conjunctive and and-not nodes AND their literals, disjunctive and
 * or-not nodes OR them; label 2 negates the literal.  A row of zeros gives
 * the empty fold: constant 1 for AND families, constant 0 otherwise.
 * `names` replaces the default node names x1, ..., xn.  Throws family_error
 * for entries outside the family alphabet and resource_error for rows with
 * more than 20 nonzero entries.
 */
boolean_network graphical_realize( labeled_matrix const& matrix, graphical_family family,
                                   std::vector<std::string> names = {} );

/*! \brief The unique labeled matrix realizing the network in the family.
 *
 * Throws family_error when some local function is not of the family's
 * shape.
 */
labeled_matrix graphical_recognize( boolean_network const& network, graphical_family family );

/*! \brief Block matrix of an extension: old nodes unchanged, new nodes wired freely.
 *
 * Returns [[old, 0], [connections, added]]: entry (j, i) of `connections`
 * labels the regulation of new node j by old node i.  Both square inputs
 * keep their own labels; `connections` must be added.rows by old.rows.
 */
labeled_matrix graphical_extend( labeled_matrix const& old_nodes, labeled_matrix const& added_nodes,
                                 labeled_matrix const& connections, graphical_family family );

} // namespace boolnet
