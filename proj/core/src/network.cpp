#include "boolnet/network.hpp"

#include "boolnet/canalization.hpp"
#include "boolnet/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace boolnet
{

namespace
{

/* Prunes inert inputs and sorts the remaining ones by node index. */
node canonical_node( node n )
{
  auto const ess = essential_variables( n.function );
  if ( ess.size() != n.function.arity() )
  {
    n.function = fix_variables( n.function, ess,
                                std::vector<uint8_t>( n.function.arity() - ess.size(), 0 ) );
    std::vector<uint32_t> pruned( ess.size() );
    for ( size_t j = 0; j < ess.size(); ++j )
    {
      pruned[j] = n.inputs[ess[j]];
    }
    n.inputs = std::move( pruned );
  }

  if ( !std::is_sorted( n.inputs.begin(), n.inputs.end() ) )
  {
    std::vector<uint32_t> order( n.inputs.size() );
    std::iota( order.begin(), order.end(), 0u );
    std::sort( order.begin(), order.end(),
               [&]( uint32_t a, uint32_t b ) { return n.inputs[a] < n.inputs[b]; } );
    std::vector<uint32_t> destination( order.size() );
    for ( uint32_t rank = 0; rank < order.size(); ++rank )
    {
      destination[order[rank]] = rank;
    }
    n.function = permute_variables( n.function, destination );
    std::sort( n.inputs.begin(), n.inputs.end() );
  }
  return n;
}

} // namespace

boolean_network::boolean_network( std::vector<node> nodes )
{
  std::set<std::string> seen;
  for ( auto const& n : nodes )
  {
    if ( n.name.empty() )
    {
      throw mapping_error( "node names must not be empty" );
    }
    if ( !seen.insert( n.name ).second )
    {
      throw mapping_error( "duplicate node name '" + n.name + "'" );
    }
    if ( n.inputs.size() != n.function.arity() )
    {
      throw arity_error( "node '" + n.name + "' lists " + std::to_string( n.inputs.size() ) +
                         " inputs for a function of arity " + std::to_string( n.function.arity() ) );
    }
    std::set<uint32_t> distinct;
    for ( auto input : n.inputs )
    {
      if ( input >= nodes.size() )
      {
        throw mapping_error( "node '" + n.name + "' reads the nonexistent node index " +
                             std::to_string( input ) );
      }
      if ( !distinct.insert( input ).second )
      {
        throw mapping_error( "node '" + n.name + "' reads node index " + std::to_string( input ) +
                             " twice" );
      }
    }
  }

  nodes_.reserve( nodes.size() );
  for ( auto& n : nodes )
  {
    nodes_.push_back( canonical_node( std::move( n ) ) );
  }
}

uint32_t boolean_network::index_of( std::string const& name ) const
{
  for ( uint32_t i = 0; i < nodes_.size(); ++i )
  {
    if ( nodes_[i].name == name )
    {
      return i;
    }
  }
  throw mapping_error( "no node named '" + name + "'" );
}

bool boolean_network::has_node( std::string const& name ) const
{
  return std::any_of( nodes_.begin(), nodes_.end(),
                      [&]( node const& n ) { return n.name == name; } );
}

std::vector<uint8_t> boolean_network::step( std::vector<uint8_t> const& state ) const
{
  if ( state.size() != nodes_.size() )
  {
    throw arity_error( "state size must equal the number of nodes" );
  }
  std::vector<uint8_t> next( nodes_.size() );
  std::vector<uint8_t> args;
  for ( uint32_t i = 0; i < nodes_.size(); ++i )
  {
    args.resize( nodes_[i].inputs.size() );
    for ( size_t j = 0; j < args.size(); ++j )
    {
      args[j] = state[nodes_[i].inputs[j]];
    }
    next[i] = nodes_[i].function.evaluate( args );
  }
  return next;
}

wiring_diagram wiring( boolean_network const& network )
{
  wiring_diagram w;
  w.size = network.size();
  for ( uint32_t target = 0; target < network.size(); ++target )
  {
    for ( auto regulator : network[target].inputs )
    {
      w.edges.emplace_back( regulator, target );
    }
  }
  return w;
}

std::vector<uint32_t> external_parameters( boolean_network const& network )
{
  std::vector<uint32_t> result;
  for ( uint32_t i = 0; i < network.size(); ++i )
  {
    if ( network[i].inputs.empty() )
    {
      result.push_back( i );
    }
  }
  return result;
}

namespace
{

/* Value assigned to the dropped regulator read by variable `position` of `n`. */
uint8_t cut_value( boolean_network const& network, node const& n, uint32_t position,
                   canalization_report const* report, cut_policy const& policy )
{
  switch ( policy.kind )
  {
  case cut_policy::kind_t::zeros:
    return 0;
  case cut_policy::kind_t::ncf_defaults:
    for ( auto const& layer : report->layers )
    {
      for ( auto const& entry : layer.entries )
      {
        if ( entry.variable == position )
        {
          return entry.input ^ 1u;
        }
      }
    }
    throw policy_error( "node '" + n.name + "' has no canalizing pair for a cut input" );
  case cut_policy::kind_t::explicit_map:
  default:
  {
    auto const& name = network[n.inputs[position]].name;
    auto const it = policy.values.find( name );
    if ( it == policy.values.end() )
    {
      throw policy_error( "no value for the cut node '" + name + "'" );
    }
    if ( it->second > 1 )
    {
      throw policy_error( "cut value for node '" + name + "' must be 0 or 1" );
    }
    return it->second;
  }
  }
}

} // namespace

boolean_network restrict_network( boolean_network const& network,
                                  std::vector<uint32_t> const& keep, cut_policy const& policy,
                                  cut_record* record )
{
  if ( keep.empty() )
  {
    throw partition_error( "the kept node list must not be empty" );
  }
  std::vector<int64_t> new_index( network.size(), -1 );
  for ( size_t position = 0; position < keep.size(); ++position )
  {
    if ( keep[position] >= network.size() )
    {
      throw partition_error( "kept node index " + std::to_string( keep[position] ) +
                             " is out of range" );
    }
    if ( new_index[keep[position]] >= 0 )
    {
      throw partition_error( "kept node index " + std::to_string( keep[position] ) +
                             " appears twice" );
    }
    new_index[keep[position]] = int64_t( position );
  }
  if ( policy.kind == cut_policy::kind_t::explicit_map )
  {
    for ( auto const& [name, value] : policy.values )
    {
      (void)value;
      if ( !network.has_node( name ) )
      {
        throw policy_error( "cut value given for the unknown node '" + name + "'" );
      }
    }
  }

  std::vector<node> restricted;
  restricted.reserve( keep.size() );
  for ( auto index : keep )
  {
    node const& n = network[index];
    std::vector<uint32_t> kept_positions;
    std::vector<uint32_t> dropped_positions;
    for ( uint32_t j = 0; j < n.inputs.size(); ++j )
    {
      ( new_index[n.inputs[j]] >= 0 ? kept_positions : dropped_positions ).push_back( j );
    }

    if ( dropped_positions.empty() )
    {
      std::vector<uint32_t> inputs( n.inputs.size() );
      for ( size_t j = 0; j < inputs.size(); ++j )
      {
        inputs[j] = uint32_t( new_index[n.inputs[j]] );
      }
      restricted.push_back( { n.name, std::move( inputs ), n.function } );
      continue;
    }

    std::optional<canalization_report> report;
    if ( policy.kind == cut_policy::kind_t::ncf_defaults )
    {
      if ( !is_nested_canalizing( n.function ) )
      {
        throw policy_error( "node '" + n.name +
                            "' is not nested canalizing, so it has no default cut values" );
      }
      report = stratify( n.function );
    }

    std::vector<uint8_t> values;
    values.reserve( dropped_positions.size() );
    for ( auto position : dropped_positions )
    {
      auto const value = cut_value( network, n, position, report ? &*report : nullptr, policy );
      values.push_back( value );
      if ( record )
      {
        record->assignments[n.name][network[n.inputs[position]].name] = value;
      }
    }

    std::vector<uint32_t> inputs( kept_positions.size() );
    for ( size_t j = 0; j < kept_positions.size(); ++j )
    {
      inputs[j] = uint32_t( new_index[n.inputs[kept_positions[j]]] );
    }
    restricted.push_back( { n.name, std::move( inputs ),
                            fix_variables( n.function, kept_positions, values ) } );
  }
  return boolean_network( std::move( restricted ) );
}

bool is_network_extension( boolean_network const& extended, boolean_network const& base )
{
  if ( extended.size() < base.size() )
  {
    throw mapping_error( "the base nodes must form a prefix of the extension" );
  }
  for ( uint32_t i = 0; i < base.size(); ++i )
  {
    if ( extended[i].name != base[i].name )
    {
      throw mapping_error( "node " + std::to_string( i + 1 ) + " is named '" + base[i].name +
                           "' in the base but '" + extended[i].name + "' in the extension" );
    }
  }

  uint32_t const old_count = base.size();
  for ( uint32_t i = 0; i < old_count; ++i )
  {
    auto const& g = extended[i].function;
    std::vector<uint32_t> old_positions;
    std::vector<uint32_t> new_positions;
    std::vector<uint32_t> old_nodes;
    for ( uint32_t j = 0; j < extended[i].inputs.size(); ++j )
    {
      if ( extended[i].inputs[j] < old_count )
      {
        old_positions.push_back( j );
        old_nodes.push_back( extended[i].inputs[j] );
      }
      else
      {
        new_positions.push_back( j );
      }
    }
    if ( new_positions.size() > 20 )
    {
      throw resource_error( "node '" + base[i].name + "' reads more than 20 new nodes" );
    }

    bool matched = false;
    uint64_t const combinations = uint64_t( 1 ) << new_positions.size();
    std::vector<uint8_t> values( new_positions.size() );
    for ( uint64_t c = 0; c < combinations && !matched; ++c )
    {
      for ( size_t t = 0; t < values.size(); ++t )
      {
        values[t] = uint8_t( ( c >> t ) & 1u );
      }
      auto const h = fix_variables( g, old_positions, values );
      auto const ess = essential_variables( h );
      if ( ess.size() != base[i].inputs.size() )
      {
        continue;
      }
      bool same_nodes = true;
      for ( size_t j = 0; j < ess.size(); ++j )
      {
        if ( old_nodes[ess[j]] != base[i].inputs[j] )
        {
          same_nodes = false;
          break;
        }
      }
      if ( !same_nodes )
      {
        continue;
      }
      matched = fix_variables( h, ess, std::vector<uint8_t>( h.arity() - ess.size(), 0 ) ) ==
                base[i].function;
    }
    if ( !matched )
    {
      return false;
    }
  }
  return true;
}

} // namespace boolnet
