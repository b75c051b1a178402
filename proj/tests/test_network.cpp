#include <doctest.h>

#include "oracles.hpp"

#include <boolnet/errors.hpp>
#include <boolnet/network.hpp>
#include <boolnet/parse.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>

using namespace boolnet;

namespace
{

std::string const running_example = "x1 = x1 & x2\n"
                                    "x2 = !x1\n"
                                    "x3 = x1 | !x4\n"
                                    "x4 = (x1 & !x2) | (x3 & x4)\n";

} // namespace

TEST_CASE( "network construction validates its nodes" )
{
  auto identity = boolean_function::from_bits( 1u, "01" );
  CHECK_THROWS_AS( boolean_network( { { "", {}, boolean_function::constant( 0u, 1u ) } } ),
                   mapping_error );
  CHECK_THROWS_AS( boolean_network( { { "a", { 0u }, identity }, { "a", { 1u }, identity } } ),
                   mapping_error );
  CHECK_THROWS_AS( boolean_network( { { "a", { 0u, 1u }, identity } } ), arity_error );
  CHECK_THROWS_AS( boolean_network( { { "a", { 1u }, identity } } ), mapping_error );
  CHECK_THROWS_AS(
      boolean_network( { { "a", { 0u, 0u }, boolean_function::from_bits( 2u, "0001" ) } } ),
      mapping_error );
}

TEST_CASE( "network construction canonicalizes the nodes" )
{
  auto identity = boolean_function::from_bits( 1u, "01" );

  /* an input the function ignores is pruned */
  boolean_network pruned( { { "a", { 0u, 1u }, boolean_function::from_bits( 2u, "0011" ) },
                            { "b", { 1u }, identity } } );
  CHECK( pruned.nodes()[0].inputs == std::vector<uint32_t>{ 0u } );
  CHECK( pruned.nodes()[0].function == identity );

  /* inputs are sorted by node index with the table permuted to match */
  boolean_network sorted( { { "f", { 2u, 0u }, boolean_function::from_bits( 2u, "0010" ) },
                            { "u", { 1u }, identity },
                            { "w", { 2u }, identity } } );
  CHECK( sorted.nodes()[0].inputs == std::vector<uint32_t>{ 0u, 2u } );
  CHECK( sorted.nodes()[0].function == boolean_function::from_bits( 2u, "0100" ) );

  /* the two spellings of the same node compare equal */
  boolean_network direct( { { "f", { 0u, 2u }, boolean_function::from_bits( 2u, "0100" ) },
                            { "u", { 1u }, identity },
                            { "w", { 2u }, identity } } );
  CHECK( sorted == direct );
}

TEST_CASE( "the wiring diagram lists regulations sorted by target" )
{
  auto network = parse_network( running_example );
  auto diagram = wiring( network );
  CHECK( diagram.size == 4u );
  CHECK( diagram.edges ==
         std::vector<std::pair<uint32_t, uint32_t>>{ { 0u, 0u }, { 1u, 0u }, { 0u, 1u },
                                                     { 0u, 2u }, { 3u, 2u }, { 0u, 3u },
                                                     { 1u, 3u }, { 2u, 3u }, { 3u, 3u } } );

  auto loops = parse_network( "a = a\nb = b\n" );
  CHECK( wiring( loops ).edges ==
         std::vector<std::pair<uint32_t, uint32_t>>{ { 0u, 0u }, { 1u, 1u } } );

  auto constant = parse_network( "a = 1\nb = a\n" );
  CHECK( wiring( constant ).edges ==
         std::vector<std::pair<uint32_t, uint32_t>>{ { 0u, 1u } } );
  CHECK( external_parameters( constant ) == std::vector<uint32_t>{ 0u } );
  CHECK( external_parameters( parse_network( "a = a\n" ) ).empty() );
}

TEST_CASE( "synchronous update" )
{
  auto network = parse_network( running_example );
  CHECK( network.step( { 1u, 1u, 0u, 0u } ) == std::vector<uint8_t>{ 1u, 0u, 1u, 0u } );
  CHECK( network.step( { 0u, 0u, 0u, 0u } ) == std::vector<uint8_t>{ 0u, 1u, 1u, 0u } );
  CHECK_THROWS_AS( network.step( { 0u, 0u } ), arity_error );
}

TEST_CASE( "network restriction with the zero policy" )
{
  auto network = parse_network( running_example );

  cut_record record;
  auto upstream = restrict_network( network, { 0u, 1u }, {}, &record );
  CHECK( upstream == parse_network( "x1 = x1 & x2\nx2 = !x1\n" ) );
  CHECK( record.assignments.empty() );

  auto downstream = restrict_network( network, { 2u, 3u }, {}, &record );
  CHECK( downstream == parse_network( "x3 = !x4\nx4 = x3 & x4\n" ) );
  CHECK( record.assignments ==
         std::map<std::string, std::map<std::string, uint8_t>>{
             { "x3", { { "x1", 0u } } }, { "x4", { { "x1", 0u }, { "x2", 0u } } } } );

  std::vector<uint32_t> all{ 0u, 1u, 2u, 3u };
  CHECK( restrict_network( network, all ) == network );

  /* the kept nodes appear in the requested order */
  auto swapped = restrict_network( network, { 1u, 0u } );
  CHECK( swapped.nodes()[0].name == "x2" );
  CHECK( swapped.nodes()[1].name == "x1" );
  CHECK( swapped == parse_network( "x2 = !x1\nx1 = x1 & x2\n" ) );

  CHECK_THROWS_AS( restrict_network( network, {} ), partition_error );
  CHECK_THROWS_AS( restrict_network( network, { 0u, 0u } ), partition_error );
  CHECK_THROWS_AS( restrict_network( network, { 7u } ), partition_error );
}

TEST_CASE( "network restriction with nested canalizing defaults" )
{
  auto network = parse_network( running_example );

  cut_record record;
  cut_policy ncf{ cut_policy::kind_t::ncf_defaults, {} };
  auto restricted = restrict_network( network, { 1u, 2u }, ncf, &record );
  CHECK( restricted == parse_network( "x2 = 1\nx3 = 0\n" ) );
  CHECK( record.assignments ==
         std::map<std::string, std::map<std::string, uint8_t>>{
             { "x2", { { "x1", 0u } } }, { "x3", { { "x1", 0u }, { "x4", 1u } } } } );

  /* x4 is not nested canalizing, so the policy cannot cut its inputs */
  try
  {
    restrict_network( network, { 2u, 3u }, ncf );
    FAIL( "expected policy_error" );
  }
  catch ( policy_error const& e )
  {
    CHECK( std::string( e.what() ).find( "x4" ) != std::string::npos );
  }
}

TEST_CASE( "network restriction with an explicit map" )
{
  auto network = parse_network( running_example );

  cut_record record;
  cut_policy map{ cut_policy::kind_t::explicit_map, { { "x1", 1u }, { "x2", 0u } } };
  auto restricted = restrict_network( network, { 2u, 3u }, map, &record );
  CHECK( restricted == parse_network( "x3 = 1\nx4 = 1\n" ) );
  CHECK( record.assignments ==
         std::map<std::string, std::map<std::string, uint8_t>>{
             { "x3", { { "x1", 1u } } }, { "x4", { { "x1", 1u }, { "x2", 0u } } } } );

  cut_policy partial{ cut_policy::kind_t::explicit_map, { { "x1", 0u } } };
  CHECK_THROWS_AS( restrict_network( network, { 2u, 3u }, partial ), policy_error );
}

TEST_CASE( "restriction never invents regulations" )
{
  std::mt19937 rng( 47u );
  for ( uint32_t trial = 0u; trial < 30u; ++trial )
  {
    auto network = oracles::random_network( rng, 6u, 3u );
    auto full = wiring( network );

    std::vector<uint32_t> keep;
    for ( uint32_t i = 0u; i < network.size(); ++i )
    {
      if ( rng() % 2u == 0u )
      {
        keep.push_back( i );
      }
    }
    if ( keep.empty() )
    {
      keep.push_back( 0u );
    }

    auto restricted = restrict_network( network, keep );
    std::set<std::pair<uint32_t, uint32_t>> allowed;
    for ( auto [regulator, target] : full.edges )
    {
      auto r = std::find( keep.begin(), keep.end(), regulator );
      auto t = std::find( keep.begin(), keep.end(), target );
      if ( r != keep.end() && t != keep.end() )
      {
        allowed.insert( { uint32_t( r - keep.begin() ), uint32_t( t - keep.begin() ) } );
      }
    }
    for ( auto const& edge : wiring( restricted ).edges )
    {
      REQUIRE( allowed.count( edge ) == 1u );
    }
  }
}

TEST_CASE( "network extension recognition" )
{
  auto network = parse_network( running_example );
  auto base = parse_network( "x1 = x1 & x2\nx2 = !x1\n" );
  CHECK( is_network_extension( network, base ) );

  auto modified = parse_network( "x1 = x1 & x2\nx2 = x1\n" );
  CHECK( !is_network_extension( network, modified ) );

  auto isolated = parse_network( "x1 = x1 & x2\nx2 = !x1\ny = y\n" );
  CHECK( is_network_extension( isolated, base ) );

  CHECK_THROWS_AS( is_network_extension( base, network ), mapping_error );
  CHECK_THROWS_AS( is_network_extension( parse_network( "y = y\nz = z\n" ), base ),
                   mapping_error );
}
