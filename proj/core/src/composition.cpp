#include "boolnet/composition.hpp"

#include "boolnet/canalization.hpp"
#include "boolnet/errors.hpp"

#include <algorithm>
#include <set>

namespace boolnet
{

namespace
{

struct concatenation
{
  std::vector<node> nodes;
  std::vector<uint32_t> offsets;    // first global index of each part
  std::vector<uint32_t> part_of;    // part index of each global node
};

concatenation concatenate( std::vector<boolean_network> const& parts )
{
  concatenation all;
  uint32_t offset = 0;
  for ( uint32_t p = 0; p < parts.size(); ++p )
  {
    all.offsets.push_back( offset );
    for ( auto const& n : parts[p].nodes() )
    {
      std::vector<uint32_t> inputs( n.inputs.size() );
      for ( size_t j = 0; j < inputs.size(); ++j )
      {
        inputs[j] = n.inputs[j] + offset;
      }
      all.nodes.push_back( { n.name, std::move( inputs ), n.function } );
      all.part_of.push_back( p );
    }
    offset += parts[p].size();
  }
  return all;
}

std::set<std::pair<uint32_t, uint32_t>>
checked_edges( std::vector<std::pair<uint32_t, uint32_t>> const& q_graph, size_t part_count )
{
  std::set<std::pair<uint32_t, uint32_t>> edges;
  for ( auto const& [a, b] : q_graph )
  {
    if ( a >= part_count || b >= part_count )
    {
      throw mapping_error( "module edge (" + std::to_string( a + 1 ) + ", " +
                           std::to_string( b + 1 ) + ") names a nonexistent part" );
    }
    if ( a >= b )
    {
      throw order_error( "module edge (" + std::to_string( a + 1 ) + ", " +
                         std::to_string( b + 1 ) +
                         ") must point from an earlier part to a later one" );
    }
    if ( !edges.emplace( a, b ).second )
    {
      throw order_error( "duplicate module edge (" + std::to_string( a + 1 ) + ", " +
                         std::to_string( b + 1 ) + ")" );
    }
  }
  return edges;
}

} // namespace

boolean_network compose_disjoint( std::vector<boolean_network> const& parts )
{
  return boolean_network( concatenate( parts ).nodes );
}

boolean_network compose_graphical(
    std::vector<boolean_network> const& parts,
    std::vector<std::pair<uint32_t, uint32_t>> const& q_graph, graphical_family family,
    std::map<std::pair<uint32_t, uint32_t>, labeled_matrix> const& connections )
{
  if ( parts.empty() )
  {
    throw domain_error( "a composition needs at least one part" );
  }
  auto const edges = checked_edges( q_graph, parts.size() );
  for ( auto const& [edge, block] : connections )
  {
    (void)block;
    if ( !edges.count( edge ) )
    {
      throw order_error( "connection block (" + std::to_string( edge.first + 1 ) + ", " +
                         std::to_string( edge.second + 1 ) +
                         ") does not sit on a module edge" );
    }
  }

  std::vector<labeled_matrix> wirings;
  std::vector<uint32_t> offsets;
  std::vector<std::string> names;
  uint32_t total = 0;
  for ( auto const& part : parts )
  {
    wirings.push_back( graphical_recognize( part, family ) );
    offsets.push_back( total );
    total += part.size();
    for ( uint32_t i = 0; i < part.size(); ++i )
    {
      names.push_back( part[i].name );
    }
  }

  labeled_matrix matrix( total, total );
  for ( uint32_t p = 0; p < parts.size(); ++p )
  {
    for ( uint32_t j = 0; j < wirings[p].rows; ++j )
    {
      for ( uint32_t i = 0; i < wirings[p].cols; ++i )
      {
        matrix.at( offsets[p] + j, offsets[p] + i ) = wirings[p].at( j, i );
      }
    }
  }
  for ( auto const& [a, b] : edges )
  {
    auto const it = connections.find( { a, b } );
    if ( it == connections.end() )
    {
      throw contradiction_error( "module edge (" + std::to_string( a + 1 ) + ", " +
                                 std::to_string( b + 1 ) + ") has no connection block" );
    }
    auto const& block = it->second;
    if ( block.rows != parts[b].size() || block.cols != parts[a].size() )
    {
      throw arity_error( "the connection block for module edge (" + std::to_string( a + 1 ) +
                         ", " + std::to_string( b + 1 ) + ") must be " +
                         std::to_string( parts[b].size() ) + " by " +
                         std::to_string( parts[a].size() ) );
    }
    if ( std::all_of( block.entries.begin(), block.entries.end(),
                      []( uint8_t e ) { return e == 0; } ) )
    {
      throw contradiction_error( "the connection block for module edge (" +
                                 std::to_string( a + 1 ) + ", " + std::to_string( b + 1 ) +
                                 ") is zero" );
    }
    for ( uint32_t j = 0; j < block.rows; ++j )
    {
      for ( uint32_t i = 0; i < block.cols; ++i )
      {
        matrix.at( offsets[b] + j, offsets[a] + i ) = block.at( j, i );
      }
    }
  }
  return graphical_realize( matrix, family, std::move( names ) );
}

boolean_network compose_ncf( std::vector<boolean_network> const& parts,
                             std::vector<std::pair<uint32_t, uint32_t>> const& q_graph,
                             std::vector<ncf_wiring> const& wirings )
{
  auto all = concatenate( parts );
  auto const edges = checked_edges( q_graph, parts.size() );

  std::map<std::string, uint32_t> index_of;
  for ( uint32_t i = 0; i < all.nodes.size(); ++i )
  {
    if ( !index_of.emplace( all.nodes[i].name, i ).second )
    {
      throw mapping_error( "duplicate node name '" + all.nodes[i].name + "'" );
    }
  }

  std::set<std::pair<uint32_t, uint32_t>> used;
  for ( auto const& w : wirings )
  {
    auto const reg = index_of.find( w.regulator );
    if ( reg == index_of.end() )
    {
      throw mapping_error( "no node named '" + w.regulator + "'" );
    }
    auto const tgt = index_of.find( w.target );
    if ( tgt == index_of.end() )
    {
      throw mapping_error( "no node named '" + w.target + "'" );
    }
    uint32_t const pr = all.part_of[reg->second];
    uint32_t const pt = all.part_of[tgt->second];
    if ( pr == pt )
    {
      throw order_error( "the wiring from '" + w.regulator + "' to '" + w.target +
                         "' stays inside one part" );
    }
    if ( !edges.count( { pr, pt } ) )
    {
      throw order_error( "the wiring from '" + w.regulator + "' to '" + w.target +
                         "' does not follow a module edge" );
    }
    used.emplace( pr, pt );

    node& t = all.nodes[tgt->second];
    t.function = apply_placement( t.function, w.placement );
    t.inputs.push_back( reg->second );
  }

  for ( auto const& [a, b] : edges )
  {
    if ( !used.count( { a, b } ) )
    {
      throw contradiction_error( "module edge (" + std::to_string( a + 1 ) + ", " +
                                 std::to_string( b + 1 ) + ") has no wiring" );
    }
  }
  return boolean_network( std::move( all.nodes ) );
}

extension_count count_network_extensions_general( boolean_network const& network, uint32_t m )
{
  extension_count product = 1;
  for ( uint32_t i = 0; i < network.size(); ++i )
  {
    extension_count choices = 0;
    for ( uint32_t q = 0; q <= m; ++q )
    {
      choices += binomial( m, q ) * count_extensions_general( network[i].function.arity(), q );
    }
    product *= choices;
  }
  return product;
}

extension_count count_network_extensions_ncf( boolean_network const& network, uint32_t m )
{
  extension_count product = 1;
  for ( uint32_t i = 0; i < network.size(); ++i )
  {
    if ( !is_nested_canalizing( network[i].function ) )
    {
      throw domain_error( "node '" + network[i].name + "' is not nested canalizing" );
    }
    auto const structure = stratify( network[i].function ).layer_structure();
    extension_count choices = 0;
    for ( uint32_t q = 0; q <= m; ++q )
    {
      choices += binomial( m, q ) * count_ncf_extensions( structure, q );
    }
    product *= choices;
  }
  return product;
}

} // namespace boolnet
