#include <doctest.h>

#include "oracles.hpp"

#include <boolnet/decomposition.hpp>
#include <boolnet/errors.hpp>
#include <boolnet/graphical.hpp>
#include <boolnet/network.hpp>
#include <boolnet/parse.hpp>

#include <random>
#include <set>

using namespace boolnet;

namespace
{

std::vector<graphical_family> const all_families{
    graphical_family::linear, graphical_family::conjunctive, graphical_family::disjunctive,
    graphical_family::and_not, graphical_family::or_not };

labeled_matrix random_matrix( std::mt19937& rng, uint32_t n, graphical_family family )
{
  labeled_matrix matrix{ n, n, std::vector<uint8_t>( size_t( n ) * n ) };
  std::uniform_int_distribution<uint32_t> entry( 0u, family_alphabet( family ) - 1u );
  for ( auto& e : matrix.entries )
  {
    e = uint8_t( entry( rng ) );
  }
  return matrix;
}

} // namespace

TEST_CASE( "family alphabets and names" )
{
  CHECK( family_alphabet( graphical_family::linear ) == 2u );
  CHECK( family_alphabet( graphical_family::conjunctive ) == 2u );
  CHECK( family_alphabet( graphical_family::disjunctive ) == 2u );
  CHECK( family_alphabet( graphical_family::and_not ) == 3u );
  CHECK( family_alphabet( graphical_family::or_not ) == 3u );
  CHECK( family_name( graphical_family::linear ) == "linear" );
  CHECK( family_name( graphical_family::and_not ) == "and-not" );
  CHECK( family_name( graphical_family::or_not ) == "or-not" );
}

TEST_CASE( "realizing a linear matrix" )
{
  labeled_matrix w{ 2u, 2u, { 1u, 1u, 1u, 0u } };
  auto network = graphical_realize( w, graphical_family::linear );
  CHECK( network == parse_network( "x1 = x1 ^ x2\nx2 = x1\n" ) );

  auto named = graphical_realize( w, graphical_family::linear, { "a", "b" } );
  CHECK( named == parse_network( "a = a ^ b\nb = a\n" ) );

  CHECK_THROWS_AS( graphical_realize( w, graphical_family::linear, { "a" } ), mapping_error );
  CHECK_THROWS_AS( graphical_realize( w, graphical_family::linear, { "a", "a" } ),
                   mapping_error );
}

TEST_CASE( "realizing an and-not matrix" )
{
  labeled_matrix w{ 2u, 2u, { 0u, 2u, 1u, 1u } };
  auto network = graphical_realize( w, graphical_family::and_not );
  CHECK( network == parse_network( "x1 = !x2\nx2 = x1 & x2\n" ) );
}

TEST_CASE( "empty rows realize the family's neutral constant" )
{
  labeled_matrix zero{ 2u, 2u, { 0u, 0u, 0u, 0u } };
  CHECK( graphical_realize( zero, graphical_family::linear ) ==
         parse_network( "x1 = 0\nx2 = 0\n" ) );
  CHECK( graphical_realize( zero, graphical_family::conjunctive ) ==
         parse_network( "x1 = 1\nx2 = 1\n" ) );
  CHECK( graphical_realize( zero, graphical_family::disjunctive ) ==
         parse_network( "x1 = 0\nx2 = 0\n" ) );
  CHECK( graphical_realize( zero, graphical_family::and_not ) ==
         parse_network( "x1 = 1\nx2 = 1\n" ) );
  CHECK( graphical_realize( zero, graphical_family::or_not ) ==
         parse_network( "x1 = 0\nx2 = 0\n" ) );
}

TEST_CASE( "alphabet violations are rejected" )
{
  labeled_matrix negated{ 2u, 2u, { 0u, 2u, 1u, 1u } };
  CHECK_THROWS_AS( graphical_realize( negated, graphical_family::linear ), family_error );
  CHECK_THROWS_AS( graphical_realize( negated, graphical_family::conjunctive ), family_error );

  labeled_matrix wild{ 1u, 1u, { 3u } };
  CHECK_THROWS_AS( graphical_realize( wild, graphical_family::and_not ), family_error );

  labeled_matrix ragged{ 2u, 1u, { 1u, 0u } };
  CHECK_THROWS_AS( graphical_realize( ragged, graphical_family::linear ), arity_error );
}

TEST_CASE( "recognition inverts realization" )
{
  std::mt19937 rng( 61u );
  for ( auto family : all_families )
  {
    for ( uint32_t trial = 0u; trial < 20u; ++trial )
    {
      std::uniform_int_distribution<uint32_t> size( 1u, 4u );
      auto matrix = random_matrix( rng, size( rng ), family );
      REQUIRE( graphical_recognize( graphical_realize( matrix, family ), family ) == matrix );
    }
  }
}

TEST_CASE( "recognition rejects functions outside the family" )
{
  auto xor_network = parse_network( "x1 = x1 ^ x2\nx2 = x1\n" );
  CHECK_THROWS_AS( graphical_recognize( xor_network, graphical_family::conjunctive ),
                   family_error );
  CHECK_THROWS_AS( graphical_recognize( xor_network, graphical_family::and_not ), family_error );

  auto majority = parse_network(
      "x1 = (x1 & x2) | (x1 & x3) | (x2 & x3)\nx2 = x1\nx3 = x1\n" );
  for ( auto family : all_families )
  {
    CHECK_THROWS_AS( graphical_recognize( majority, family ), family_error );
  }

  /* a conjunctive network is also disjunctive only without real conjunctions */
  auto and_network = parse_network( "x1 = x1 & x2\nx2 = x1\n" );
  CHECK( graphical_recognize( and_network, graphical_family::conjunctive ) ==
         labeled_matrix{ 2u, 2u, { 1u, 1u, 1u, 0u } } );
  CHECK_THROWS_AS( graphical_recognize( and_network, graphical_family::disjunctive ),
                   family_error );
}

TEST_CASE( "block extension of a linear network" )
{
  labeled_matrix w1{ 2u, 2u, { 1u, 1u, 1u, 0u } };
  labeled_matrix w2{ 2u, 2u, { 0u, 1u, 1u, 1u } };
  labeled_matrix p{ 2u, 2u, { 1u, 0u, 1u, 1u } };

  auto extended = graphical_extend( w1, w2, p, graphical_family::linear );
  CHECK( extended == labeled_matrix{ 4u, 4u,
                                     { 1u, 1u, 0u, 0u,
                                       1u, 0u, 0u, 0u,
                                       1u, 0u, 0u, 1u,
                                       1u, 1u, 1u, 1u } } );

  auto network = graphical_realize( extended, graphical_family::linear );
  CHECK( network == parse_network( "x1 = x1 ^ x2\n"
                                   "x2 = x1\n"
                                   "x3 = x1 ^ x4\n"
                                   "x4 = x1 ^ x2 ^ x3 ^ x4\n" ) );

  labeled_matrix bad{ 1u, 2u, { 1u, 0u } };
  CHECK_THROWS_AS( graphical_extend( w1, w2, bad, graphical_family::linear ), arity_error );
}

TEST_CASE( "block extension of an and-not network" )
{
  labeled_matrix w1{ 2u, 2u, { 0u, 2u, 1u, 1u } };
  labeled_matrix w2{ 2u, 2u, { 2u, 1u, 1u, 0u } };
  labeled_matrix p{ 2u, 2u, { 0u, 0u, 1u, 2u } };

  auto extended = graphical_extend( w1, w2, p, graphical_family::and_not );
  auto network = graphical_realize( extended, graphical_family::and_not );
  CHECK( network == parse_network( "x1 = !x2\n"
                                   "x2 = x1 & x2\n"
                                   "x3 = !x3 & x4\n"
                                   "x4 = x1 & !x2 & x3\n" ) );
}

TEST_CASE( "every connection block yields a distinct extension" )
{
  labeled_matrix w1{ 2u, 2u, { 1u, 1u, 1u, 0u } };
  labeled_matrix w2{ 2u, 2u, { 0u, 1u, 1u, 1u } };

  std::set<std::string> seen;
  for ( uint32_t block = 0u; block < 16u; ++block )
  {
    labeled_matrix p{ 2u, 2u,
                      { uint8_t( block & 1u ), uint8_t( ( block >> 1u ) & 1u ),
                        uint8_t( ( block >> 2u ) & 1u ), uint8_t( ( block >> 3u ) & 1u ) } };
    auto network =
        graphical_realize( graphical_extend( w1, w2, p, graphical_family::linear ),
                           graphical_family::linear );

    std::string key;
    for ( auto const& n : network.nodes() )
    {
      key += n.function.bits() + "|";
      for ( auto input : n.inputs )
      {
        key += std::to_string( input ) + ",";
      }
      key += ";";
    }
    CHECK( seen.insert( key ).second );

    /* the upstream part never reads the new nodes, and the module graph has
       an edge exactly when the block is nonzero */
    auto parts = scc_decompose( network );
    REQUIRE( parts.components ==
             std::vector<std::vector<uint32_t>>{ { 0u, 1u }, { 2u, 3u } } );
    if ( block == 0u )
    {
      CHECK( parts.q_graph.empty() );
    }
    else
    {
      CHECK( parts.q_graph == std::vector<std::pair<uint32_t, uint32_t>>{ { 0u, 1u } } );
    }
  }
  CHECK( seen.size() == 16u );
}
