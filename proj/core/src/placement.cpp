#include "boolnet/placement.hpp"

#include "boolnet/canalization.hpp"
#include "boolnet/errors.hpp"

#include <algorithm>

namespace boolnet
{

namespace
{

canalization_report analyzed_ncf( boolean_function const& f )
{
  if ( !is_nested_canalizing( f ) )
  {
    throw domain_error( "placements require a nested canalizing function" );
  }
  return stratify( f );
}

} // namespace

std::vector<ncf_placement> ncf_placements( boolean_function const& f )
{
  auto const report = analyzed_ncf( f );
  std::vector<ncf_placement> result;

  for ( uint8_t input = 0; input <= 1; ++input )
  {
    result.push_back( { ncf_placement::kind_t::initial, 0, {}, input } );
  }
  for ( uint32_t i = 0; i < report.layers.size(); ++i )
  {
    for ( uint8_t input = 0; input <= 1; ++input )
    {
      result.push_back( { ncf_placement::kind_t::addition, i, {}, input } );
    }
  }
  for ( uint32_t i = 0; i < report.layers.size(); ++i )
  {
    auto const& entries = report.layers[i].entries;
    uint32_t const k = static_cast<uint32_t>( entries.size() );
    if ( k < 2 )
    {
      continue;
    }
    for ( uint32_t mask = 1; mask + 1 < ( 1u << k ); ++mask )
    {
      std::vector<uint32_t> demoted;
      for ( uint32_t b = 0; b < k; ++b )
      {
        if ( mask & ( 1u << b ) )
        {
          demoted.push_back( entries[b].variable );
        }
      }
      for ( uint8_t input = 0; input <= 1; ++input )
      {
        result.push_back( { ncf_placement::kind_t::split, i, demoted, input } );
      }
    }
  }
  return result;
}

boolean_function apply_placement( boolean_function const& f, ncf_placement const& p )
{
  auto const report = analyzed_ncf( f );
  auto const r = static_cast<uint32_t>( report.layers.size() );
  uint32_t const fresh = f.arity(); // position of the new variable

  std::vector<canalizing_layer> layers;
  switch ( p.kind )
  {
  case ncf_placement::kind_t::initial:
  {
    uint8_t const output = report.layers.front().output() ^ 1u;
    layers.push_back( { { { fresh, p.input, output } } } );
    layers.insert( layers.end(), report.layers.begin(), report.layers.end() );
    break;
  }

  case ncf_placement::kind_t::addition:
  {
    if ( p.layer >= r )
    {
      throw placement_error( "layer index out of range" );
    }
    layers = report.layers;
    layers[p.layer].entries.push_back( { fresh, p.input, layers[p.layer].output() } );
    break;
  }

  case ncf_placement::kind_t::split:
  {
    if ( p.layer >= r )
    {
      throw placement_error( "layer index out of range" );
    }
    auto const& target = report.layers[p.layer];
    if ( p.demoted.empty() || p.demoted.size() >= target.entries.size() )
    {
      throw placement_error( "split must demote a nonempty proper subset of the layer" );
    }
    std::vector<canalizing_entry> kept_entries, demoted_entries;
    for ( auto const& e : target.entries )
    {
      if ( std::find( p.demoted.begin(), p.demoted.end(), e.variable ) != p.demoted.end() )
      {
        demoted_entries.push_back( e );
      }
      else
      {
        kept_entries.push_back( e );
      }
    }
    if ( demoted_entries.size() != p.demoted.size() )
    {
      throw placement_error( "demoted variables must belong to the split layer" );
    }

    uint8_t const b = target.output();
    layers.assign( report.layers.begin(), report.layers.begin() + p.layer );
    layers.push_back( { kept_entries } );
    if ( p.layer + 1 == r && demoted_entries.size() == 1 )
    {
      // Innermost layer, one demoted variable: it fuses with the new
      // variable into the innermost layer; its canalizing input flips.
      auto e = demoted_entries.front();
      layers.push_back( { { { e.variable, uint8_t( e.input ^ 1u ), uint8_t( b ^ 1u ) },
                            { fresh, p.input, uint8_t( b ^ 1u ) } } } );
    }
    else
    {
      layers.push_back( { { { fresh, p.input, uint8_t( b ^ 1u ) } } } );
      layers.push_back( { demoted_entries } );
      layers.insert( layers.end(), report.layers.begin() + p.layer + 1, report.layers.end() );
    }
    break;
  }
  }

  // Evaluate the layered form: first canalizing hit wins, otherwise the
  // complement of the innermost layer output (the core is 1).
  uint32_t const n = f.arity() + 1u;
  uint8_t const tail = layers.back().output() ^ 1u;
  std::vector<uint8_t> table( uint64_t( 1 ) << n );
  for ( uint64_t row = 0; row < table.size(); ++row )
  {
    uint8_t out = tail;
    for ( auto const& layer : layers )
    {
      bool hit = false;
      for ( auto const& e : layer.entries )
      {
        if ( ( ( row >> ( n - 1u - e.variable ) ) & 1u ) == e.input )
        {
          out = e.output;
          hit = true;
          break;
        }
      }
      if ( hit )
      {
        break;
      }
    }
    table[row] = out;
  }
  return boolean_function( n, std::move( table ) );
}

std::vector<uint32_t> placement_target_structure( std::vector<uint32_t> const& layer_structure,
                                                  ncf_placement const& p, uint32_t demoted_count )
{
  auto const r = static_cast<uint32_t>( layer_structure.size() );
  std::vector<uint32_t> t;

  switch ( p.kind )
  {
  case ncf_placement::kind_t::initial:
    if ( layer_structure == std::vector<uint32_t>{ 1 } )
    {
      return { 2 };
    }
    t.push_back( 1 );
    t.insert( t.end(), layer_structure.begin(), layer_structure.end() );
    return t;

  case ncf_placement::kind_t::addition:
    if ( p.layer >= r )
    {
      throw placement_error( "layer index out of range" );
    }
    t = layer_structure;
    ++t[p.layer];
    return t;

  case ncf_placement::kind_t::split:
    if ( p.layer >= r )
    {
      throw placement_error( "layer index out of range" );
    }
    if ( demoted_count == 0 || demoted_count >= layer_structure[p.layer] )
    {
      throw placement_error( "split must demote a nonempty proper subset of the layer" );
    }
    if ( p.layer + 1 == r && demoted_count == 1 )
    {
      t = layer_structure;
      --t.back();
      t.push_back( 2 );
      return t;
    }
    t.assign( layer_structure.begin(), layer_structure.begin() + p.layer );
    t.push_back( layer_structure[p.layer] - demoted_count );
    t.push_back( 1 );
    t.push_back( demoted_count );
    t.insert( t.end(), layer_structure.begin() + p.layer + 1, layer_structure.end() );
    return t;
  }
  throw placement_error( "unknown placement kind" );
}

} // namespace boolnet
