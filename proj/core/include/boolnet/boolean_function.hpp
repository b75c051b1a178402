/*! \file boolean_function.hpp
 *  \brief Boolean functions as explicit truth tables
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace boolnet
{

/*! \brief A Boolean function of n variables stored as a truth table of 2^n bits.
 *
 * Variables are addressed by zero-based position.  Row r of the table holds
 * the output for the assignment obtained by writing r in binary with n
 * digits; the most significant digit gives the value of the first variable.
 * Instances are immutable after construction.
 */
class boolean_function
{
public:
  /*! \brief Constructs from an explicit table; table.size() must equal 2^arity and entries must be 0 or 1. */
  boolean_function( uint32_t arity, std::vector<uint8_t> table );

  /*! \brief The constant function of the given arity. */
  static boolean_function constant( uint32_t arity, uint8_t value );

  /*! \brief Constructs from a row-order bit string such as "0001". */
  static boolean_function from_bits( uint32_t arity, std::string const& bits );

  uint32_t arity() const { return arity_; }
  uint64_t num_rows() const { return table_.size(); }
  uint8_t bit( uint64_t row ) const { return table_[row]; }
  std::vector<uint8_t> const& table() const { return table_; }

  /*! \brief Row-order bit string, row 0 first. */
  std::string bits() const;

  /*! \brief Output on the given assignment; assignment.size() must equal the arity. */
  uint8_t evaluate( std::vector<uint8_t> const& assignment ) const;

  bool is_constant() const;
  bool depends_on( uint32_t var ) const;

  bool operator==( boolean_function const& other ) const = default;

  /*! \brief Orders by arity, then by table read as a row-order binary string. */
  bool operator<( boolean_function const& other ) const;

private:
  uint32_t arity_;
  std::vector<uint8_t> table_;
};

/*! \brief Table row index of an assignment (first variable = most significant digit). */
uint64_t row_of( std::vector<uint8_t> const& assignment );

/*! \brief Assignment encoded by a table row index. */
std::vector<uint8_t> assignment_of( uint64_t row, uint32_t arity );

/*! \brief Positions of the variables f essentially depends on, increasing. */
std::vector<uint32_t> essential_variables( boolean_function const& f );

/*! \brief Fixes the variables outside `kept` and keeps the rest.
 *
 * `kept` must be strictly increasing; `values` supplies one bit per dropped
 * position, in increasing position order.  Row order of the result follows
 * the kept variables in their original relative order.
 */
boolean_function fix_variables( boolean_function const& f, std::vector<uint32_t> const& kept,
                                std::vector<uint8_t> const& values );

/*! \brief Moves variable i of f to position destination[i] of the result.
 *
 * `destination` must be a permutation of 0..n-1.  The result g satisfies
 * g.evaluate(a) == f.evaluate(x) where x[i] = a[destination[i]].
 */
boolean_function permute_variables( boolean_function const& f, std::vector<uint32_t> const& destination );

/*! \brief Algebraic normal form as variable-position masks, one per monomial, increasing.
 *
 * Bit i of a mask marks variable position i; the empty mask is the constant
 * monomial 1.  f equals the XOR of the AND over each mask's variables.
 * Requires arity <= 63.
 */
std::vector<uint64_t> anf( boolean_function const& f );

/*! \brief Truth table of the XOR of the given monomial masks. */
boolean_function from_anf( uint32_t arity, std::vector<uint64_t> const& monomials );

} // namespace boolnet
