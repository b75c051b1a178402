#include "boolnet/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace boolnet
{

namespace
{

/* Iterative Tarjan; returns one member list per strongly connected component. */
std::vector<std::vector<uint32_t>> strong_components( std::vector<std::vector<uint32_t>> const& succ )
{
  uint32_t const n = uint32_t( succ.size() );
  std::vector<uint8_t> visited( n, 0 );
  std::vector<uint8_t> on_stack( n, 0 );
  std::vector<uint32_t> order( n, 0 );
  std::vector<uint32_t> low( n, 0 );
  std::vector<uint32_t> stack;
  std::vector<std::vector<uint32_t>> components;
  uint32_t counter = 0;

  for ( uint32_t root = 0; root < n; ++root )
  {
    if ( visited[root] )
    {
      continue;
    }
    std::vector<std::pair<uint32_t, size_t>> frames{ { root, 0 } };
    while ( !frames.empty() )
    {
      auto& frame = frames.back();
      uint32_t const v = frame.first;
      if ( frame.second == 0 )
      {
        visited[v] = 1;
        order[v] = low[v] = counter++;
        stack.push_back( v );
        on_stack[v] = 1;
      }

      bool descended = false;
      while ( frame.second < succ[v].size() )
      {
        uint32_t const w = succ[v][frame.second++];
        if ( !visited[w] )
        {
          frames.push_back( { w, 0 } );
          descended = true;
          break;
        }
        if ( on_stack[w] )
        {
          low[v] = std::min( low[v], order[w] );
        }
      }
      if ( descended )
      {
        continue;
      }

      if ( low[v] == order[v] )
      {
        components.emplace_back();
        while ( true )
        {
          uint32_t const w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          components.back().push_back( w );
          if ( w == v )
          {
            break;
          }
        }
        std::sort( components.back().begin(), components.back().end() );
      }
      frames.pop_back();
      if ( !frames.empty() )
      {
        low[frames.back().first] = std::min( low[frames.back().first], low[v] );
      }
    }
  }
  return components;
}

} // namespace

decomposition scc_decompose( boolean_network const& network, cut_policy const& policy )
{
  std::vector<std::vector<uint32_t>> succ( network.size() );
  for ( uint32_t target = 0; target < network.size(); ++target )
  {
    for ( auto regulator : network[target].inputs )
    {
      succ[regulator].push_back( target );
    }
  }

  auto components = strong_components( succ );
  uint32_t const m = uint32_t( components.size() );
  std::vector<uint32_t> component_of( network.size(), 0 );
  for ( uint32_t c = 0; c < m; ++c )
  {
    for ( auto v : components[c] )
    {
      component_of[v] = c;
    }
  }

  std::set<std::pair<uint32_t, uint32_t>> cross;
  for ( uint32_t u = 0; u < network.size(); ++u )
  {
    for ( auto v : succ[u] )
    {
      if ( component_of[u] != component_of[v] )
      {
        cross.emplace( component_of[u], component_of[v] );
      }
    }
  }

  // Kahn's algorithm; the heap key is the smallest member index, so the
  // topological order is unique.
  std::vector<uint32_t> indegree( m, 0 );
  std::vector<std::vector<uint32_t>> downstream( m );
  for ( auto const& [a, b] : cross )
  {
    ++indegree[b];
    downstream[a].push_back( b );
  }
  std::priority_queue<std::pair<uint32_t, uint32_t>, std::vector<std::pair<uint32_t, uint32_t>>,
                      std::greater<>>
      ready;
  for ( uint32_t c = 0; c < m; ++c )
  {
    if ( indegree[c] == 0 )
    {
      ready.emplace( components[c].front(), c );
    }
  }
  std::vector<uint32_t> topo;
  topo.reserve( m );
  while ( !ready.empty() )
  {
    auto const c = ready.top().second;
    ready.pop();
    topo.push_back( c );
    for ( auto b : downstream[c] )
    {
      if ( --indegree[b] == 0 )
      {
        ready.emplace( components[b].front(), b );
      }
    }
  }

  std::vector<uint32_t> rank( m, 0 );
  for ( uint32_t position = 0; position < m; ++position )
  {
    rank[topo[position]] = position;
  }

  decomposition result;
  result.components.reserve( m );
  for ( auto c : topo )
  {
    result.components.push_back( std::move( components[c] ) );
  }
  for ( auto const& [a, b] : cross )
  {
    result.q_graph.emplace_back( rank[a], rank[b] );
  }
  std::sort( result.q_graph.begin(), result.q_graph.end() );
  result.modules.reserve( m );
  for ( auto const& members : result.components )
  {
    result.modules.push_back( restrict_network( network, members, policy, &result.cuts ) );
  }
  return result;
}

} // namespace boolnet
