#include "boolnet/counting.hpp"

#include "boolnet/errors.hpp"

#include <algorithm>

namespace boolnet
{

extension_count binomial( uint64_t n, uint64_t k )
{
  if ( k > n )
  {
    return 0;
  }
  if ( k > n - k )
  {
    k = n - k;
  }
  extension_count result = 1;
  for ( uint64_t i = 1; i <= k; ++i )
  {
    result *= extension_count( n - k + i );
    result /= extension_count( i ); // divides exactly at every step
  }
  return result;
}

void check_layer_structure( std::vector<uint32_t> const& layer_structure )
{
  if ( layer_structure.empty() )
  {
    throw domain_error( "layer structure must contain at least one layer" );
  }
  for ( auto k : layer_structure )
  {
    if ( k == 0 )
    {
      throw domain_error( "layer sizes must be positive" );
    }
  }
  if ( layer_structure.back() < 2 && layer_structure != std::vector<uint32_t>{ 1 } )
  {
    throw domain_error( "the innermost layer must have size at least 2" );
  }
}

extension_count count_extensions_general( uint32_t n, uint32_t q )
{
  if ( q == 0 )
  {
    return 1;
  }
  if ( n + q > 16u )
  {
    throw resource_error( "general extension counts are limited to n + q <= 16" );
  }

  uint64_t const terms = uint64_t( 1 ) << q;      // 2^q
  uint64_t const block = uint64_t( 1 ) << n;      // 2^n
  uint64_t const domain = uint64_t( 1 ) << ( n + q );

  extension_count total = 0;
  extension_count coefficient = 1; // C(2^q, j), updated incrementally
  for ( uint64_t j = 1; j <= terms; ++j )
  {
    coefficient *= extension_count( terms - j + 1 );
    coefficient /= extension_count( j );
    extension_count term = coefficient << ( domain - j * block );
    if ( j & 1u )
    {
      total += term;
    }
    else
    {
      total -= term;
    }
  }
  return total;
}

extension_count count_ncf_extensions_one( std::vector<uint32_t> const& layer_structure )
{
  check_layer_structure( layer_structure );
  extension_count total = 2;
  for ( auto k : layer_structure )
  {
    total += 2 * ( ( extension_count( 1 ) << k ) - 1 );
  }
  return total;
}

namespace
{

using structure = std::vector<uint32_t>;

/* Target structures of one variable addition, with multiplicities. */
std::map<structure, extension_count> structure_moves( structure const& s )
{
  std::map<structure, extension_count> moves;
  auto const r = s.size();

  // New outermost layer.  On the single-variable structure the added
  // variable merges with the existing one instead of standing alone.
  if ( s == structure{ 1 } )
  {
    moves[structure{ 2 }] += 1;
  }
  else
  {
    structure t;
    t.reserve( r + 1 );
    t.push_back( 1 );
    t.insert( t.end(), s.begin(), s.end() );
    moves[std::move( t )] += 1;
  }

  // Addition to an existing layer.
  for ( size_t i = 0; i < r; ++i )
  {
    structure t = s;
    ++t[i];
    moves[std::move( t )] += 1;
  }

  // Split: demote a nonempty proper subset of layer i below the new
  // variable.  Demoting a single variable of the innermost layer fuses it
  // with the new variable into an innermost layer of size 2.
  for ( size_t i = 0; i < r; ++i )
  {
    uint32_t const k = s[i];
    for ( uint32_t l = 1; l < k; ++l )
    {
      structure t;
      if ( i + 1 == r && l == 1 )
      {
        t = s;
        --t.back();
        t.push_back( 2 );
      }
      else
      {
        t.assign( s.begin(), s.begin() + i );
        t.push_back( k - l );
        t.push_back( 1 );
        t.push_back( l );
        t.insert( t.end(), s.begin() + i + 1, s.end() );
      }
      moves[std::move( t )] += binomial( k, l );
    }
  }
  return moves;
}

} // namespace

std::map<std::vector<uint32_t>, extension_count>
ncf_structure_frontier( std::vector<uint32_t> const& layer_structure, uint32_t q )
{
  check_layer_structure( layer_structure );
  if ( q > 20u )
  {
    throw resource_error( "nested canalizing extension counts are limited to q <= 20" );
  }

  std::map<structure, extension_count> frontier;
  frontier[layer_structure] = 1;
  for ( uint32_t step = 0; step < q; ++step )
  {
    std::map<structure, extension_count> next;
    for ( auto const& [s, count] : frontier )
    {
      for ( auto const& [t, ways] : structure_moves( s ) )
      {
        next[t] += count * ways * 2; // times 2 for the new variable's canalizing input
      }
    }
    frontier = std::move( next );
  }
  return frontier;
}

extension_count count_ncf_extensions( std::vector<uint32_t> const& layer_structure, uint32_t q )
{
  extension_count total = 0;
  for ( auto const& [s, count] : ncf_structure_frontier( layer_structure, q ) )
  {
    total += count;
  }
  return total;
}

namespace
{

extension_count integer_power( uint32_t base, uint64_t exponent )
{
  if ( exponent > ( uint64_t( 1 ) << 24 ) )
  {
    throw resource_error( "the requested power would exceed 2^24 multiplications" );
  }
  return boost::multiprecision::pow( extension_count( base ), static_cast<unsigned>( exponent ) );
}

} // namespace

extension_count count_graphical_extensions( uint64_t n1, uint64_t n2, uint32_t z )
{
  if ( z < 2 )
  {
    throw domain_error( "the label alphabet must have at least two symbols" );
  }
  if ( n1 == 0 || n2 == 0 )
  {
    throw domain_error( "component sizes must be positive" );
  }
  if ( n1 > ( uint64_t( 1 ) << 12 ) || n2 > ( uint64_t( 1 ) << 12 ) )
  {
    throw resource_error( "connection block counts are limited to n1, n2 <= 2^12" );
  }
  return integer_power( z, n1 * n2 );
}

extension_count count_acyclic_graphs( uint32_t m )
{
  if ( m > 64u )
  {
    throw resource_error( "acyclic graph counts are limited to m <= 64" );
  }
  uint64_t const exponent = uint64_t( m ) * ( m - 1 ) / 2;
  return extension_count( 1 ) << exponent;
}

std::pair<extension_count, extension_count>
count_graphical_compositions( std::vector<uint64_t> const& sizes, uint32_t z )
{
  if ( z < 2 )
  {
    throw domain_error( "the label alphabet must have at least two symbols" );
  }
  auto const m = sizes.size();
  if ( m > 6u )
  {
    // The edge-subset sum enumerates 2^(m(m-1)/2) graphs.
    throw resource_error( "composition counts are limited to 6 components" );
  }
  for ( auto n : sizes )
  {
    if ( n == 0 )
    {
      throw domain_error( "component sizes must be positive" );
    }
  }

  std::vector<std::pair<size_t, size_t>> slots; // ordered pairs i < j
  for ( size_t i = 0; i < m; ++i )
  {
    for ( size_t j = i + 1; j < m; ++j )
    {
      slots.emplace_back( i, j );
    }
  }

  // Edge factor z^(n_i n_j) - 1 per present edge, summed over all edge subsets.
  std::vector<extension_count> factors;
  factors.reserve( slots.size() );
  uint64_t total_exponent = 0;
  for ( auto const& [i, j] : slots )
  {
    factors.push_back( count_graphical_extensions( sizes[i], sizes[j], z ) - 1 );
    total_exponent += sizes[i] * sizes[j];
  }

  extension_count sum = 0;
  uint64_t const subsets = uint64_t( 1 ) << slots.size();
  for ( uint64_t mask = 0; mask < subsets; ++mask )
  {
    extension_count product = 1;
    for ( size_t e = 0; e < slots.size(); ++e )
    {
      if ( mask & ( uint64_t( 1 ) << e ) )
      {
        product *= factors[e];
      }
    }
    sum += product;
  }

  return { sum, integer_power( z, total_exponent ) };
}

} // namespace boolnet
