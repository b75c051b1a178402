#include <doctest.h>

#include "oracles.hpp"

#include <boolnet/canalization.hpp>
#include <boolnet/decomposition.hpp>
#include <boolnet/emit.hpp>
#include <boolnet/errors.hpp>
#include <boolnet/network.hpp>
#include <boolnet/parse.hpp>
#include <boolnet/table_io.hpp>

#include <json.hpp>

#include <random>
#include <string>
#include <vector>

using namespace boolnet;

namespace
{

boolean_network running_example()
{
  return parse_network( "x1 = x1 & x2\n"
                        "x2 = !x1\n"
                        "x3 = x1 | !x4\n"
                        "x4 = (x1 & !x2) | (x3 & x4)\n" );
}

size_t count_occurrences( std::string const& text, std::string const& needle )
{
  size_t count = 0u;
  for ( auto at = text.find( needle ); at != std::string::npos; at = text.find( needle, at + 1u ) )
  {
    ++count;
  }
  return count;
}

} // namespace

TEST_CASE( "expressions come out in algebraic normal form" )
{
  CHECK( emit_expressions( parse_network( "f = a & b\na = a\nb = b\n" ) ) ==
         "f = a & b\n"
         "a = a\n"
         "b = b\n" );
  CHECK( emit_expressions( parse_network( "s = a ^ b\na = a\nb = b\n" ) ) ==
         "s = a ^ b\n"
         "a = a\n"
         "b = b\n" );
  CHECK( emit_expressions( parse_network( "a = !b\nb = a\n" ) ) == "a = 1 ^ b\nb = a\n" );
  CHECK( emit_expressions( parse_network( "z = 0\no = 1\n" ) ) == "z = 0\no = 1\n" );

  /* parentheses are never needed: & binds tighter than ^ */
  auto network = running_example();
  CHECK( parse_network( emit_expressions( network ) ) == network );
}

TEST_CASE( "expressions require identifier node names" )
{
  auto identity = boolean_function::from_bits( 1u, "01" );
  boolean_network spaced( { { "bad name", { 0u }, identity } } );
  CHECK_THROWS_AS( emit_expressions( spaced ), mapping_error );
  boolean_network numeric( { { "2x", { 0u }, identity } } );
  CHECK_THROWS_AS( emit_expressions( numeric ), mapping_error );
}

TEST_CASE( "generated networks round-trip through both text formats" )
{
  std::mt19937 rng( 73u );
  for ( uint32_t trial = 0u; trial < 60u; ++trial )
  {
    std::uniform_int_distribution<uint32_t> size( 1u, 10u );
    auto network = oracles::random_network( rng, size( rng ), 4u );
    REQUIRE( parse_network( emit_expressions( network ) ) == network );
    REQUIRE( parse_tables( emit_tables( network ) ) == network );
  }
}

TEST_CASE( "dot output lists vertices and regulations" )
{
  auto network = parse_network( "x1 = x1 ^ x2\n"
                                "x2 = x1\n"
                                "x3 = x1 ^ x4\n"
                                "x4 = x1 ^ x2 ^ x3 ^ x4\n" );
  CHECK( emit_dot( network ) == "digraph network {\n"
                                "  \"x1\";\n"
                                "  \"x2\";\n"
                                "  \"x3\";\n"
                                "  \"x4\";\n"
                                "  \"x1\" -> \"x1\";\n"
                                "  \"x2\" -> \"x1\";\n"
                                "  \"x1\" -> \"x2\";\n"
                                "  \"x1\" -> \"x3\";\n"
                                "  \"x4\" -> \"x3\";\n"
                                "  \"x1\" -> \"x4\";\n"
                                "  \"x2\" -> \"x4\";\n"
                                "  \"x3\" -> \"x4\";\n"
                                "  \"x4\" -> \"x4\";\n"
                                "}\n" );

  /* a constant node has a vertex and no edges */
  CHECK( emit_dot( parse_network( "a = 1\n" ) ) == "digraph network {\n  \"a\";\n}\n" );

  /* names that are not identifiers are quoted and escaped */
  auto identity = boolean_function::from_bits( 1u, "01" );
  boolean_network spaced( { { "bad name", { 0u }, identity } } );
  CHECK( emit_dot( spaced ) == "digraph network {\n"
                               "  \"bad name\";\n"
                               "  \"bad name\" -> \"bad name\";\n"
                               "}\n" );
}

TEST_CASE( "decomposition dot groups modules into clusters" )
{
  auto network = running_example();
  auto parts = scc_decompose( network );
  auto text = emit_dot( parts, network );
  CHECK( text == "digraph modules {\n"
                 "  compound = true;\n"
                 "  subgraph cluster_1 {\n"
                 "    label = \"module 1\";\n"
                 "    \"x1\";\n"
                 "    \"x2\";\n"
                 "  }\n"
                 "  subgraph cluster_2 {\n"
                 "    label = \"module 2\";\n"
                 "    \"x3\";\n"
                 "    \"x4\";\n"
                 "  }\n"
                 "  \"x1\" -> \"x1\";\n"
                 "  \"x2\" -> \"x1\";\n"
                 "  \"x1\" -> \"x2\";\n"
                 "  \"x4\" -> \"x3\";\n"
                 "  \"x3\" -> \"x4\";\n"
                 "  \"x4\" -> \"x4\";\n"
                 "  \"x1\" -> \"x3\" [ltail = cluster_1, lhead = cluster_2, style = bold];\n"
                 "}\n" );
  CHECK( count_occurrences( text, "style = bold" ) == 1u );
  CHECK( count_occurrences( text, "subgraph" ) == 2u );
}

TEST_CASE( "canalization reports serialize to json" )
{
  auto f = oracles::depth_three_example();
  auto report = stratify( f );
  std::vector<std::string> names{ "x1", "x2", "x3", "x4", "x5" };
  auto document = nlohmann::json::parse( emit_json( report, names ) );

  CHECK( document["arity"] == 5u );
  CHECK( document["constant_offset"] == 1u );
  REQUIRE( document["layers"].size() == 3u );
  std::vector<size_t> structure;
  for ( auto const& layer : document["layers"] )
  {
    structure.push_back( layer["entries"].size() );
  }
  CHECK( structure == std::vector<size_t>{ 2u, 1u, 2u } );
  CHECK( document["layers"][0]["output"] == 1u );
  CHECK( document["layers"][1]["output"] == 0u );
  CHECK( document["layers"][2]["output"] == 1u );
  CHECK( document["layers"][0]["entries"][0]["variable"] == "x1" );
  CHECK( document["layers"][0]["entries"][0]["input"] == 0u );
  CHECK( document["layers"][0]["entries"][1]["variable"] == "x2" );
  CHECK( document["layers"][0]["entries"][1]["input"] == 1u );
  CHECK( document["layers"][2]["entries"][1]["variable"] == "x5" );
  CHECK( document["core"]["variables"].empty() );
  CHECK( document["inert"].empty() );

  /* one name per variable position */
  CHECK_THROWS_AS( emit_json( report, { "x1", "x2" } ), mapping_error );

  /* a non-canalizing function keeps its core */
  auto parity = boolean_function::from_bits( 2u, "0110" );
  auto flat = nlohmann::json::parse( emit_json( stratify( parity ), { "a", "b" } ) );
  CHECK( flat["layers"].empty() );
  CHECK( flat["core"]["variables"] == nlohmann::json::array( { "a", "b" } ) );
  CHECK( flat["core"]["table"] == "0110" );
}

TEST_CASE( "decompositions serialize to json" )
{
  auto network = running_example();
  auto text = emit_json( scc_decompose( network ), network );
  auto document = nlohmann::json::parse( text );

  CHECK( document["components"] ==
         nlohmann::json::parse( R"([["x1", "x2"], ["x3", "x4"]])" ) );
  CHECK( document["module_graph"] == nlohmann::json::parse( "[[1, 2]]" ) );
  REQUIRE( document["modules"].size() == 2u );
  CHECK( parse_tables( document["modules"][0].dump() ) ==
         parse_network( "x1 = x1 & x2\nx2 = !x1\n" ) );
  CHECK( parse_tables( document["modules"][1].dump() ) ==
         parse_network( "x3 = !x4\nx4 = x3 & x4\n" ) );
  CHECK( document["cuts"] ==
         nlohmann::json::parse( R"({ "x3": { "x1": 0 }, "x4": { "x1": 0, "x2": 0 } })" ) );

  CHECK( text == emit_json( scc_decompose( network ), network ) );
}

TEST_CASE( "counts serialize as decimal strings" )
{
  CHECK( emit_json( extension_count( 31 ) ) == "\"31\"" );
  CHECK( emit_json( extension_count( "12050112" ) ) == "\"12050112\"" );
  extension_count big = extension_count( 1 ) << 200;
  CHECK( emit_json( big ) ==
         "\"1606938044258990275541962092341162602522202993782792835301376\"" );
}
