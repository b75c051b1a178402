#include "boolnet/canalization.hpp"

#include "boolnet/errors.hpp"

#include <algorithm>

namespace boolnet
{

uint32_t canalization_report::depth() const
{
  uint32_t k = 0;
  for ( auto const& layer : layers )
  {
    k += layer.size();
  }
  return k;
}

std::vector<uint32_t> canalization_report::layer_structure() const
{
  std::vector<uint32_t> ks;
  ks.reserve( layers.size() );
  for ( auto const& layer : layers )
  {
    ks.push_back( layer.size() );
  }
  return ks;
}

namespace
{

std::vector<canalizing_entry> pairs_unchecked( boolean_function const& f )
{
  std::vector<canalizing_entry> result;
  uint32_t const n = f.arity();
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint64_t const stride = uint64_t( 1 ) << ( n - 1u - i );
    bool const0 = true, const1 = true;
    uint8_t val0 = 0, val1 = 0;
    bool seen0 = false, seen1 = false;
    for ( uint64_t row = 0; row < f.num_rows(); ++row )
    {
      uint8_t const b = f.bit( row );
      if ( row & stride )
      {
        if ( !seen1 )
        {
          val1 = b;
          seen1 = true;
        }
        else if ( b != val1 )
        {
          const1 = false;
        }
      }
      else
      {
        if ( !seen0 )
        {
          val0 = b;
          seen0 = true;
        }
        else if ( b != val0 )
        {
          const0 = false;
        }
      }
    }
    if ( const0 && !( const1 && val1 == val0 ) )
    {
      result.push_back( { i, 0, val0 } );
    }
    if ( const1 && !( const0 && val0 == val1 ) )
    {
      result.push_back( { i, 1, val1 } );
    }
  }
  return result;
}

} // namespace

std::vector<canalizing_entry> canalizing_pairs( boolean_function const& f )
{
  if ( f.is_constant() )
  {
    throw domain_error( "canalizing pairs are undefined for constant functions" );
  }
  return pairs_unchecked( f );
}

canalization_report stratify( boolean_function const& f )
{
  if ( f.is_constant() && f.bit( 0 ) == 0 )
  {
    throw domain_error( "the zero function has no stratified form" );
  }

  uint32_t const n = f.arity();
  auto const essential = essential_variables( f );
  std::vector<uint32_t> inert;
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( !std::binary_search( essential.begin(), essential.end(), i ) )
    {
      inert.push_back( i );
    }
  }

  // Project onto the essential variables; inert positions cannot change the output.
  auto g = fix_variables( f, essential, std::vector<uint8_t>( inert.size(), 0 ) );
  std::vector<uint32_t> positions = essential; // positions[i] = original position of g's variable i

  canalization_report report{ n, {}, {}, boolean_function::constant( 0, 1 ), 0, inert };

  while ( true )
  {
    if ( g.is_constant() )
    {
      // Remainder constant means core polynomial 1; its value is already
      // determined by the layer outputs, or is the whole function (f == 1).
      if ( report.layers.empty() )
      {
        report.core = boolean_function::constant( 0, g.bit( 0 ) );
      }
      break;
    }

    auto pairs = pairs_unchecked( g );
    if ( pairs.empty() )
    {
      // Non-canalizing remainder: shift by the innermost layer output to
      // obtain the core polynomial of the stratified form.
      uint8_t const shift = report.layers.empty() ? 0 : report.layers.back().output();
      auto table = g.table();
      if ( shift )
      {
        for ( auto& b : table )
        {
          b ^= 1u;
        }
      }
      report.core = boolean_function( g.arity(), std::move( table ) );
      report.core_variables = positions;
      break;
    }

    // A remainder depending on exactly one variable admits both inputs as
    // canalizing.  Keep the entry with output 0, which makes the constant
    // offset 0; this situation only arises on the first pass.
    if ( pairs.size() == 2 && pairs[0].variable == pairs[1].variable )
    {
      uint8_t const want = report.layers.empty() ? 0 : ( report.layers.back().output() ^ 1u );
      pairs.erase( std::remove_if( pairs.begin(), pairs.end(),
                                   [&]( canalizing_entry const& e ) { return e.output != want; } ),
                   pairs.end() );
    }

    canalizing_layer layer;
    std::vector<uint8_t> in_layer( g.arity(), 0 );
    for ( auto const& e : pairs )
    {
      layer.entries.push_back( { positions[e.variable], e.input, e.output } );
      in_layer[e.variable] = 1;
    }

    if ( report.layers.empty() )
    {
      report.constant_offset = layer.output();
    }
    report.layers.push_back( layer );

    // Substitute the non-canalizing value of every layered variable.  The
    // entries arrive in increasing variable order, matching the dropped-value
    // order fix_variables expects.
    std::vector<uint32_t> kept_local;
    std::vector<uint32_t> kept_positions;
    std::vector<uint8_t> values;
    for ( uint32_t i = 0; i < g.arity(); ++i )
    {
      if ( !in_layer[i] )
      {
        kept_local.push_back( i );
        kept_positions.push_back( positions[i] );
      }
    }
    for ( auto const& e : pairs )
    {
      values.push_back( e.input ^ 1u );
    }
    g = fix_variables( g, kept_local, values );
    positions = kept_positions;
  }

  return report;
}

bool is_nested_canalizing( boolean_function const& f )
{
  if ( f.arity() == 0 || f.is_constant() )
  {
    return false;
  }
  auto const report = stratify( f );
  return report.inert_variables.empty() && report.depth() == f.arity();
}

boolean_function reconstruct( canalization_report const& report )
{
  uint32_t const n = report.arity;
  uint64_t const rows = uint64_t( 1 ) << n;
  std::vector<uint8_t> table( rows );
  // With r layers the all-non-canalizing branch evaluates to
  // core XOR (last layer output); with no layer it is the core itself.
  uint8_t const tail_shift = report.layers.empty() ? 0 : report.layers.back().output();

  std::vector<uint8_t> core_args( report.core_variables.size() );
  for ( uint64_t row = 0; row < rows; ++row )
  {
    auto const value_at = [&]( uint32_t var ) -> uint8_t { return ( row >> ( n - 1u - var ) ) & 1u; };
    uint8_t out = 0;
    bool decided = false;
    for ( auto const& layer : report.layers )
    {
      for ( auto const& e : layer.entries )
      {
        if ( value_at( e.variable ) == e.input )
        {
          out = e.output;
          decided = true;
          break;
        }
      }
      if ( decided )
      {
        break;
      }
    }
    if ( !decided )
    {
      for ( size_t i = 0; i < report.core_variables.size(); ++i )
      {
        core_args[i] = value_at( report.core_variables[i] );
      }
      out = report.core.evaluate( core_args ) ^ tail_shift;
    }
    table[row] = out;
  }
  return boolean_function( n, std::move( table ) );
}

} // namespace boolnet
