#include "boolnet/restriction.hpp"

#include "boolnet/canalization.hpp"
#include "boolnet/errors.hpp"

#include <algorithm>

namespace boolnet
{

boolean_function restrict_function( boolean_function const& f, restriction const& r )
{
  uint32_t const n = f.arity();
  if ( r.kept.size() + r.assignment.size() != n )
  {
    throw partition_error( "restriction must cover every variable exactly once" );
  }
  std::vector<uint8_t> covered( n, 0 );
  for ( auto p : r.kept )
  {
    if ( p >= n || covered[p] )
    {
      throw partition_error( "kept positions must be distinct and in range" );
    }
    covered[p] = 1;
  }
  for ( auto const& [p, v] : r.assignment )
  {
    if ( p >= n || covered[p] )
    {
      throw partition_error( "assigned positions must be distinct from kept positions" );
    }
    if ( v > 1u )
    {
      throw partition_error( "assigned values must be 0 or 1" );
    }
    covered[p] = 1;
  }

  std::vector<uint8_t> values;
  values.reserve( r.assignment.size() );
  for ( auto const& [p, v] : r.assignment ) // std::map iterates keys in increasing order
  {
    values.push_back( v );
  }
  return fix_variables( f, r.kept, values );
}

boolean_function restrict_ncf( boolean_function const& f, std::vector<uint32_t> const& kept )
{
  if ( !is_nested_canalizing( f ) )
  {
    throw domain_error( "restriction by canalizing inputs requires a nested canalizing function" );
  }
  auto const report = stratify( f );

  restriction r;
  r.kept = kept;
  std::sort( r.kept.begin(), r.kept.end() );
  std::vector<uint8_t> is_kept( f.arity(), 0 );
  for ( auto p : r.kept )
  {
    if ( p >= f.arity() )
    {
      throw partition_error( "kept position out of range" );
    }
    is_kept[p] = 1;
  }
  for ( auto const& layer : report.layers )
  {
    for ( auto const& e : layer.entries )
    {
      if ( !is_kept[e.variable] )
      {
        r.assignment[e.variable] = e.input ^ 1u;
      }
    }
  }
  return restrict_function( f, r );
}

bool is_extension( boolean_function const& g, boolean_function const& f,
                   std::vector<uint32_t> const& new_vars )
{
  if ( g.arity() != f.arity() + new_vars.size() )
  {
    throw arity_error( "extension arity must equal the base arity plus the number of new variables" );
  }
  restriction r;
  std::vector<uint8_t> is_new( g.arity(), 0 );
  for ( auto p : new_vars )
  {
    if ( p >= g.arity() || is_new[p] )
    {
      throw arity_error( "new variable positions must be distinct and in range" );
    }
    is_new[p] = 1;
  }
  for ( uint32_t i = 0; i < g.arity(); ++i )
  {
    if ( !is_new[i] )
    {
      r.kept.push_back( i );
    }
  }

  std::vector<uint32_t> sorted_new = new_vars;
  std::sort( sorted_new.begin(), sorted_new.end() );
  uint64_t const combinations = uint64_t( 1 ) << new_vars.size();
  for ( uint64_t c = 0; c < combinations; ++c )
  {
    r.assignment.clear();
    for ( size_t t = 0; t < sorted_new.size(); ++t )
    {
      r.assignment[sorted_new[t]] = ( c >> t ) & 1u;
    }
    if ( restrict_function( g, r ) == f )
    {
      return true;
    }
  }
  return false;
}

std::vector<boolean_function> enumerate_extensions_brute( boolean_function const& f, uint32_t q )
{
  uint32_t const n = f.arity();
  if ( n + q > 4u )
  {
    throw resource_error( "brute-force extension enumeration is limited to arity + q <= 4" );
  }

  std::vector<uint32_t> new_vars;
  for ( uint32_t i = n; i < n + q; ++i )
  {
    new_vars.push_back( i );
  }

  uint64_t const rows = uint64_t( 1 ) << ( n + q );
  uint64_t const tables = uint64_t( 1 ) << rows;
  std::vector<boolean_function> result;
  std::vector<uint8_t> table( rows );
  for ( uint64_t t = 0; t < tables; ++t )
  {
    for ( uint64_t row = 0; row < rows; ++row )
    {
      table[row] = ( t >> row ) & 1u;
    }
    boolean_function g( n + q, table );
    if ( is_extension( g, f, new_vars ) )
    {
      result.push_back( std::move( g ) );
    }
  }
  std::sort( result.begin(), result.end() );
  return result;
}

} // namespace boolnet
