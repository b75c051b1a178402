/*! \file canalization.hpp
 *  \brief Canalizing structure analysis: canalizing pairs, layers, and the unique stratified form
 */

#pragma once

#include "boolnet/boolean_function.hpp"

#include <cstdint>
#include <vector>

namespace boolnet
{

/*! \brief One canalizing witness: the function outputs `output` whenever variable `variable` equals `input`. */
struct canalizing_entry
{
  uint32_t variable;
  uint8_t input;
  uint8_t output;

  bool operator==( canalizing_entry const& other ) const = default;
};

/*! \brief A set of simultaneously canalizing variables; all entries share the same output. */
struct canalizing_layer
{
  std::vector<canalizing_entry> entries; // sorted by variable position

  uint8_t output() const { return entries.front().output; }
  uint32_t size() const { return static_cast<uint32_t>( entries.size() ); }

  bool operator==( canalizing_layer const& other ) const = default;
};

/*! \brief The unique stratified form of a nonzero function.
 *
 * Scanning the layers in order, the first layer containing a variable at its
 * canalizing input decides the output; if no layer fires, the output is the
 * core evaluated on the core variables, complemented once per layer after the
 * first and shifted by the constant offset (see reconstruct).  Layer outputs
 * alternate starting from constant_offset.  Every essential variable appears
 * in exactly one layer or among the core variables; declared but inert
 * variables are listed separately and never affect the output.
 */
struct canalization_report
{
  uint32_t arity;                        // declared arity of the analyzed function
  std::vector<canalizing_layer> layers;  // outermost first
  std::vector<uint32_t> core_variables;  // positions of core inputs, increasing
  boolean_function core;                 // core polynomial on core_variables, in that order
  uint8_t constant_offset;               // the additive constant of the outermost level
  std::vector<uint32_t> inert_variables; // declared positions the function ignores, increasing

  /*! \brief Canalizing depth: total number of layered variables. */
  uint32_t depth() const;

  /*! \brief Layer sizes (k_1, ..., k_r), outermost first. */
  std::vector<uint32_t> layer_structure() const;
};

/*! \brief All (variable, input, output) triples such that f == output whenever variable == input
 *         and f is not constantly that output elsewhere.
 *
 * Sorted by variable position, then input.  A function depending on exactly
 * one variable yields two entries for it.  Throws domain_error on constants.
 */
std::vector<canalizing_entry> canalizing_pairs( boolean_function const& f );

/*! \brief Computes the unique stratified form of f.
 *
 * Layers collect all simultaneously canalizing variables, outermost first;
 * what remains when no variable canalizes is the core.  A function depending
 * on exactly one variable is reported with constant offset 0.  Throws
 * domain_error on the zero function.
 */
canalization_report stratify( boolean_function const& f );

/*! \brief True iff every declared variable is essential and the canalizing depth equals the arity. */
bool is_nested_canalizing( boolean_function const& f );

/*! \brief Rebuilds the truth table described by a report, bit for bit. */
boolean_function reconstruct( canalization_report const& report );

} // namespace boolnet
