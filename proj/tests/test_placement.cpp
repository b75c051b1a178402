#include <doctest.h>

#include "oracles.hpp"

#include <boolnet/boolean_function.hpp>
#include <boolnet/canalization.hpp>
#include <boolnet/counting.hpp>
#include <boolnet/errors.hpp>
#include <boolnet/placement.hpp>
#include <boolnet/restriction.hpp>

#include <algorithm>
#include <set>

using namespace boolnet;

TEST_CASE( "placement enumeration counts" )
{
  auto and2 = boolean_function::from_bits( 2u, "0001" );
  CHECK( ncf_placements( and2 ).size() == 8u );

  CHECK( ncf_placements( oracles::make_ncf( { 2u, 1u, 2u } ) ).size() == 16u );
  CHECK( ncf_placements( boolean_function::from_bits( 1u, "01" ) ).size() == 4u );

  CHECK_THROWS_AS( ncf_placements( boolean_function::from_bits( 2u, "0110" ) ), domain_error );
  CHECK_THROWS_AS( ncf_placements( boolean_function::constant( 2u, 1u ) ), domain_error );

  /* deterministic order */
  CHECK( ncf_placements( and2 ) == ncf_placements( and2 ) );
}

TEST_CASE( "placements transform the layer structure as announced" )
{
  auto and2 = boolean_function::from_bits( 2u, "0001" );

  auto initial = apply_placement( and2, { ncf_placement::kind_t::initial, 0u, {}, 0u } );
  CHECK( stratify( initial ).layer_structure() == std::vector<uint32_t>{ 1u, 2u } );

  auto addition = apply_placement( and2, { ncf_placement::kind_t::addition, 0u, {}, 0u } );
  CHECK( stratify( addition ).layer_structure() == std::vector<uint32_t>{ 3u } );

  /* the innermost single-demotion split fuses with the new variable and flips
     the demoted variable's canalizing input */
  auto split = apply_placement( and2, { ncf_placement::kind_t::split, 0u, { 1u }, 1u } );
  CHECK( split == boolean_function::from_bits( 3u, "00000111" ) );
  auto report = stratify( split );
  CHECK( report.layer_structure() == std::vector<uint32_t>{ 1u, 2u } );
  CHECK( report.layers[0].entries == std::vector<canalizing_entry>{ { 0u, 0u, 0u } } );
  CHECK( report.layers[1].entries ==
         std::vector<canalizing_entry>{ { 1u, 1u, 1u }, { 2u, 1u, 1u } } );
}

TEST_CASE( "announced target structures match the built extensions" )
{
  for ( uint32_t n = 1u; n <= 5u; ++n )
  {
    for ( auto const& structure : oracles::layer_structures( n ) )
    {
      auto f = oracles::make_ncf( structure );
      for ( auto const& p : ncf_placements( f ) )
      {
        auto g = apply_placement( f, p );
        auto announced =
            placement_target_structure( structure, p, uint32_t( p.demoted.size() ) );
        REQUIRE( stratify( g ).layer_structure() == announced );
      }
    }
  }
}

TEST_CASE( "placements build distinct recoverable extensions" )
{
  for ( uint32_t n = 1u; n <= 4u; ++n )
  {
    std::vector<uint32_t> original( n );
    for ( uint32_t i = 0u; i < n; ++i )
    {
      original[i] = i;
    }
    for ( auto const& f : oracles::ncf_corpus( n ) )
    {
      auto placements = ncf_placements( f );
      auto report = stratify( f );
      extension_count expected = count_ncf_extensions_one( report.layer_structure() );
      REQUIRE( extension_count( placements.size() ) == expected );

      std::set<boolean_function> seen;
      for ( auto const& p : placements )
      {
        auto g = apply_placement( f, p );
        REQUIRE( g.arity() == n + 1u );
        REQUIRE( is_nested_canalizing( g ) );
        REQUIRE( g.depends_on( n ) );
        REQUIRE( restrict_ncf( g, original ) == f );
        seen.insert( g );
      }
      REQUIRE( extension_count( seen.size() ) == expected );
    }
  }
}

TEST_CASE( "ill-fitting placements are rejected" )
{
  auto and2 = boolean_function::from_bits( 2u, "0001" );

  CHECK_THROWS_AS( apply_placement( and2, { ncf_placement::kind_t::addition, 1u, {}, 0u } ),
                   placement_error );
  CHECK_THROWS_AS( apply_placement( and2, { ncf_placement::kind_t::split, 0u, { 0u, 1u }, 0u } ),
                   placement_error );
  CHECK_THROWS_AS( apply_placement( and2, { ncf_placement::kind_t::split, 0u, {}, 0u } ),
                   placement_error );

  auto layered = oracles::make_ncf( { 1u, 2u } );
  CHECK_THROWS_AS( apply_placement( layered, { ncf_placement::kind_t::split, 0u, { 0u }, 0u } ),
                   placement_error );
  CHECK_THROWS_AS( apply_placement( layered, { ncf_placement::kind_t::split, 1u, { 0u }, 0u } ),
                   placement_error );

  CHECK_THROWS_AS(
      apply_placement( boolean_function::from_bits( 2u, "0110" ),
                       { ncf_placement::kind_t::addition, 0u, {}, 0u } ),
      domain_error );
}
