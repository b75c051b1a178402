/*! \file restriction.hpp
 *  \brief Variable restriction and the extension relation between functions
 */

#pragma once

#include "boolnet/boolean_function.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace boolnet
{

/*! \brief A split of the variable set: positions to keep and substituted bits for the rest. */
struct restriction
{
  std::vector<uint32_t> kept;             // strictly increasing positions that survive
  std::map<uint32_t, uint8_t> assignment; // dropped position -> substituted bit
};

/*! \brief Substitutes the dropped variables of f by their assigned bits.
 *
 * kept and the assignment keys must partition f's variable positions.  Row
 * order of the result follows the kept variables in their original relative
 * order.
 */
boolean_function restrict_function( boolean_function const& f, restriction const& r );

/*! \brief Restriction of a nested canalizing function to the kept positions.
 *
 * Every dropped variable is substituted by the complement of its canalizing
 * input, read from stratify(f).  A function depending on a single variable
 * restricts to constant 1 when that variable is dropped.  Throws domain_error
 * when f is not nested canalizing.
 */
boolean_function restrict_ncf( boolean_function const& f, std::vector<uint32_t> const& kept );

/*! \brief True iff substituting some assignment of the new variables into g yields f.
 *
 * new_vars lists positions of g (strictly increasing); the remaining
 * positions of g correspond to f's variables in order.  Requires
 * g.arity() == f.arity() + new_vars.size().
 */
bool is_extension( boolean_function const& g, boolean_function const& f,
                   std::vector<uint32_t> const& new_vars );

/*! \brief All extensions of f by q appended variables, in increasing table order.
 *
 * Scans every function on arity + q variables, so it is guarded by
 * arity + q <= 4 and throws resource_error beyond that.
 */
std::vector<boolean_function> enumerate_extensions_brute( boolean_function const& f, uint32_t q );

} // namespace boolnet
