/*! \file placement.hpp
 *  \brief The ways one new variable can enter a nested canalizing function
 */

#pragma once

#include "boolnet/boolean_function.hpp"

#include <cstdint>
#include <vector>

namespace boolnet
{

/*! \brief One way to insert a new variable into a nested canalizing function.
 *
 * initial:  the new variable becomes the outermost layer.
 * addition: the new variable joins layer `layer`.
 * split:    the new variable becomes a singleton layer inside layer `layer`,
 *           demoting the `demoted` variables (a nonempty proper subset of
 *           that layer) below itself.  Demoting a single variable of the
 *           innermost layer instead fuses it with the new variable into an
 *           innermost layer of size 2.
 *
 * `input` is the canalizing input value of the new variable.  Layer indices
 * are zero-based, outermost first.
 */
struct ncf_placement
{
  enum class kind_t
  {
    initial,
    addition,
    split
  };

  kind_t kind;
  uint32_t layer = 0;
  std::vector<uint32_t> demoted; // variable positions, increasing (split only)
  uint8_t input = 0;

  bool operator==( ncf_placement const& other ) const = default;
};

/*! \brief Every placement of one new variable into f, in a fixed deterministic order.
 *
 * The list holds 2 + 2 sum_i (2^(k_i) - 1) placements for layer structure
 * (k_1, ..., k_r): both initial placements, both additions per layer, and
 * both input values for every demotable subset of every layer.  Throws
 * domain_error when f is not nested canalizing.
 */
std::vector<ncf_placement> ncf_placements( boolean_function const& f );

/*! \brief The extension of f by one variable, appended at position f.arity().
 *
 * The result is nested canalizing, and restrict_ncf back to f's variables
 * recovers f.  Throws domain_error when f is not nested canalizing and
 * placement_error when p does not fit f's layer structure.
 */
boolean_function apply_placement( boolean_function const& f, ncf_placement const& p );

/*! \brief Layer structure of the function apply_placement would produce, without building it. */
std::vector<uint32_t> placement_target_structure( std::vector<uint32_t> const& layer_structure,
                                                  ncf_placement const& p, uint32_t demoted_count );

} // namespace boolnet
