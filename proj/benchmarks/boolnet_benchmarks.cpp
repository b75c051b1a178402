/*! \file boolnet_benchmarks.cpp
  \brief Microbenchmarks for the hot paths: stratification, extension counting,
         decomposition, and parsing.
*/

#include <boolnet/canalization.hpp>
#include <boolnet/counting.hpp>
#include <boolnet/decomposition.hpp>
#include <boolnet/graphical.hpp>
#include <boolnet/network.hpp>
#include <boolnet/parse.hpp>

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

namespace
{

/* A ten-variable nested canalizing function, alternating conjunction and disjunction. */
boolnet::boolean_function deep_ncf()
{
  std::string text = "f = x1 & (x2 | (x3 & (x4 | (x5 & (x6 | (x7 & (x8 | (x9 & x10))))))))\n";
  for ( uint32_t i = 1u; i <= 10u; ++i )
  {
    text += "x" + std::to_string( i ) + " = x" + std::to_string( i ) + "\n";
  }
  return boolnet::parse_network( text ).nodes()[0].function;
}

/* Six rings of ten linear nodes each, chained ring to ring. */
boolnet::boolean_network ring_of_rings()
{
  uint32_t const rings = 6u;
  uint32_t const ring_size = 10u;
  boolnet::labeled_matrix matrix( rings * ring_size, rings * ring_size );
  for ( uint32_t r = 0u; r < rings; ++r )
  {
    for ( uint32_t i = 0u; i < ring_size; ++i )
    {
      uint32_t const node = r * ring_size + i;
      matrix.at( node, r * ring_size + ( i + ring_size - 1u ) % ring_size ) = 1u;
    }
    if ( r > 0u )
    {
      matrix.at( r * ring_size, r * ring_size - 1u ) = 1u;
    }
  }
  return boolnet::graphical_realize( matrix, boolnet::graphical_family::linear );
}

/* Forty update rules over three regulators each. */
std::string wide_document()
{
  uint32_t const nodes = 40u;
  std::string text;
  for ( uint32_t i = 0u; i < nodes; ++i )
  {
    auto name = [&]( uint32_t j ) { return "n" + std::to_string( j % nodes + 1u ); };
    text += name( i ) + " = " + name( i + 7u ) + " & !" + name( i + 19u ) + " | " +
            name( i + 31u ) + "\n";
  }
  return text;
}

void stratify_deep_ncf( benchmark::State& state )
{
  auto const f = deep_ncf();
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( boolnet::stratify( f ) );
  }
}

void count_ncf_extensions_deep( benchmark::State& state )
{
  std::vector<uint32_t> const structure = { 2u };
  auto const q = uint32_t( state.range( 0 ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( boolnet::count_ncf_extensions( structure, q ) );
  }
}

void scc_decompose_ring_of_rings( benchmark::State& state )
{
  auto const network = ring_of_rings();
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( boolnet::scc_decompose( network ) );
  }
}

void parse_wide_document( benchmark::State& state )
{
  auto const text = wide_document();
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( boolnet::parse_network( text ) );
  }
}

BENCHMARK( stratify_deep_ncf );
BENCHMARK( count_ncf_extensions_deep )->Arg( 6 )->Arg( 12 )->Arg( 18 );
BENCHMARK( scc_decompose_ring_of_rings );
BENCHMARK( parse_wide_document );

} // namespace

BENCHMARK_MAIN();
