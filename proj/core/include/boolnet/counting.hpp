/*! \file counting.hpp
 *  \brief Exact extension and composition counts
 *
 * Counts grow doubly exponentially, so every routine here returns an exact
 * arbitrary-precision integer and no floating point is used anywhere.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace boolnet
{

/*! \brief Exact non-negative count, arbitrary precision. */
using extension_count = boost::multiprecision::cpp_int;

/*! \brief Binomial coefficient, exact. */
extension_count binomial( uint64_t n, uint64_t k );

/*! \brief Validates a canalizing layer structure (k_1, ..., k_r).
 *
 * Entries are positive, and the last entry is at least 2 unless the structure
 * is the single-variable (1).  Throws domain_error otherwise.
 */
void check_layer_structure( std::vector<uint32_t> const& layer_structure );

/*! \brief Number of extensions of any n-variable function by q new variables.
 *
 * Computes sum_{j=1}^{2^q} (-1)^(j+1) C(2^q, j) 2^(2^(n+q) - j 2^n); the value
 * does not depend on the function itself.  q = 0 yields 1.  Guarded by
 * n + q <= 16 (the terms have 2^(n+q) bits); throws resource_error beyond.
 */
extension_count count_extensions_general( uint32_t n, uint32_t q );

/*! \brief Number of nested canalizing extensions by one variable: 2 + 2 sum_i (2^(k_i) - 1). */
extension_count count_ncf_extensions_one( std::vector<uint32_t> const& layer_structure );

/*! \brief Layer structures reachable by adding q variables, with multiplicities.
 *
 * Dynamic program over layer structures: each step branches over the new
 * outermost layer, every layer addition, and every layer split, times 2 for
 * the new variable's canalizing input.  Guarded by q <= 20.
 */
std::map<std::vector<uint32_t>, extension_count>
ncf_structure_frontier( std::vector<uint32_t> const& layer_structure, uint32_t q );

/*! \brief Number of nested canalizing extensions by q variables (sum of the frontier). */
extension_count count_ncf_extensions( std::vector<uint32_t> const& layer_structure, uint32_t q );

/*! \brief Number of connection blocks between component sizes n1 and n2 over an alphabet of z symbols.
 *
 * A block is an n2 x n1 matrix with entries in {0, ..., z-1}, so the count is
 * z^(n1 n2) for every z >= 2, including the z = 3 families.
 */
extension_count count_graphical_extensions( uint64_t n1, uint64_t n2, uint32_t z );

/*! \brief Number of acyclic graphs on m ordered components: 2^(m(m-1)/2). */
extension_count count_acyclic_graphs( uint32_t m );

/*! \brief Both sides of the composition-count identity for ordered component sizes.
 *
 * first: sum over all edge subsets Q of prod_{(i,j) in Q} (z^(n_i n_j) - 1);
 * second: z^M with M = sum_{i<j} n_i n_j.  The two are always equal.
 */
std::pair<extension_count, extension_count>
count_graphical_compositions( std::vector<uint64_t> const& sizes, uint32_t z );

} // namespace boolnet
