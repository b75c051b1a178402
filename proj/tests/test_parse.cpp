#include <doctest.h>

#include <boolnet/boolean_function.hpp>
#include <boolnet/errors.hpp>
#include <boolnet/network.hpp>
#include <boolnet/parse.hpp>

#include <string>

using namespace boolnet;

TEST_CASE( "parsing the running example" )
{
  auto network = parse_network( "x1 = x1 & x2\n"
                                "x2 = !x1\n"
                                "x3 = x1 | !x4\n"
                                "x4 = (x1 & !x2) | (x3 & x4)\n" );
  REQUIRE( network.size() == 4u );
  CHECK( network.nodes()[0].name == "x1" );
  CHECK( network.nodes()[0].inputs == std::vector<uint32_t>{ 0u, 1u } );
  CHECK( network.nodes()[0].function == boolean_function::from_bits( 2u, "0001" ) );
  CHECK( network.nodes()[1].inputs == std::vector<uint32_t>{ 0u } );
  CHECK( network.nodes()[1].function == boolean_function::from_bits( 1u, "10" ) );
  CHECK( network.nodes()[2].inputs == std::vector<uint32_t>{ 0u, 3u } );
  CHECK( network.index_of( "x4" ) == 3u );
}

TEST_CASE( "constants and constant folding" )
{
  auto constant = parse_network( "a = 1\n" );
  CHECK( constant.nodes()[0].inputs.empty() );
  CHECK( constant.nodes()[0].function == boolean_function::constant( 0u, 1u ) );

  /* & binds tighter than ^, so b & 0 ^ 1 folds to the constant 1 */
  auto folded = parse_network( "a = b & 0 ^ 1\nb = b\n" );
  CHECK( folded.nodes()[0].inputs.empty() );
  CHECK( folded.nodes()[0].function == boolean_function::constant( 0u, 1u ) );

  auto negation = parse_network( "a = b ^ 1\nb = a\n" );
  CHECK( negation.nodes()[0].inputs == std::vector<uint32_t>{ 1u } );
  CHECK( negation.nodes()[0].function == boolean_function::from_bits( 1u, "10" ) );
}

TEST_CASE( "operator precedence" )
{
  auto identity = boolean_function::from_bits( 1u, "01" );
  std::vector<node> nodes{ { "f", {}, boolean_function::constant( 0u, 0u ) },
                           { "a", { 1u }, identity },
                           { "b", { 2u }, identity },
                           { "c", { 3u }, identity } };

  auto expect = [&]( std::string const& rhs, std::string const& bits ) {
    auto network = parse_network( "f = " + rhs + "\na = a\nb = b\nc = c\n" );
    auto built = nodes;
    built[0] = { "f", { 1u, 2u, 3u }, boolean_function::from_bits( 3u, bits ) };
    CHECK( network == boolean_network( built ) );
  };

  /* rows ordered by (a, b, c) */
  expect( "a | b & c", "00011111" );
  expect( "a ^ b | c", "01111101" );
  expect( "(a ^ b) | c", "01111101" );
  expect( "a ^ (b | c)", "01111000" );
  expect( "(a | b) & c", "00010101" );
  expect( "!a & b | c", "01110101" );
  expect( "!(a & b) ^ c", "10101001" );
}

TEST_CASE( "layout is flexible" )
{
  auto spaced = parse_network( "# heading comment\n"
                               "\n"
                               "  f  =  a&b   # trailing note\n"
                               "a = a\r\n"
                               "b = b\n" );
  CHECK( spaced == parse_network( "f = a & b\na = a\nb = b\n" ) );

  CHECK( parse_network( "" ).size() == 0u );
  CHECK( parse_network( "# nothing here\n\n" ).size() == 0u );

  CHECK( parse_network( "v_1 = v_1 & ok2\nok2 = v_1\n" ).size() == 2u );

  /* a rule may reference nodes defined later */
  CHECK( parse_network( "a = b\nb = a\n" ).nodes()[0].inputs ==
         std::vector<uint32_t>{ 1u } );
}

TEST_CASE( "inputs are recorded in node order regardless of appearance" )
{
  auto network = parse_network( "f = b & !a\na = a\nb = b\n" );
  CHECK( network.nodes()[0].inputs == std::vector<uint32_t>{ 1u, 2u } );
  CHECK( network.nodes()[0].function == boolean_function::from_bits( 2u, "0100" ) );
}

TEST_CASE( "malformed documents report their position" )
{
  auto check_position = [&]( std::string const& text, int line, int column ) {
    try
    {
      parse_network( text );
      FAIL( "expected parse_error for: ", text );
    }
    catch ( parse_error const& e )
    {
      CHECK( e.line() == line );
      CHECK( e.column() == column );
      CHECK( std::string( e.what() ).find( "line " + std::to_string( line ) ) == 0u );
    }
  };

  check_position( "a = q\n", 1, 5 );
  check_position( "a = a\nb = \n", 2, 5 );
  check_position( "a = (a\n", 1, 7 );
  check_position( "a = a &\n", 1, 8 );
  check_position( "= a\n", 1, 1 );
  check_position( "1 = a\n", 1, 1 );
  check_position( "a + a\n", 1, 3 );
  check_position( "a = a @ b\n", 1, 7 );
  check_position( "a = a\na = a\n", 2, 1 );
  check_position( "a = a a\n", 1, 7 );
  check_position( "a = a )\n", 1, 7 );
}

TEST_CASE( "a rule may read at most twenty nodes" )
{
  std::string wide = "f =";
  std::string rest;
  for ( uint32_t i = 1u; i <= 21u; ++i )
  {
    wide += ( i == 1u ? " v" : " & v" ) + std::to_string( i );
    rest += "v" + std::to_string( i ) + " = v" + std::to_string( i ) + "\n";
  }
  CHECK_THROWS_AS( parse_network( wide + "\n" + rest ), resource_error );

  std::string okay = "f =";
  std::string okay_rest;
  for ( uint32_t i = 1u; i <= 20u; ++i )
  {
    okay += ( i == 1u ? " v" : " & v" ) + std::to_string( i );
    okay_rest += "v" + std::to_string( i ) + " = v" + std::to_string( i ) + "\n";
  }
  CHECK( parse_network( okay + "\n" + okay_rest ).size() == 21u );
}
