#include "boolnet/table_io.hpp"

#include "boolnet/errors.hpp"

#include <json.hpp>

#include <map>

namespace boolnet
{

namespace
{

/* Maps a byte offset from the JSON parser to 1-based line and column. */
[[noreturn]] void rethrow_json_error( std::string const& text, nlohmann::json::parse_error const& e )
{
  size_t const limit = e.byte == 0 ? 0 : std::min( text.size(), size_t( e.byte - 1 ) );
  uint32_t line = 1;
  uint32_t column = 1;
  for ( size_t i = 0; i < limit; ++i )
  {
    if ( text[i] == '\n' )
    {
      ++line;
      column = 1;
    }
    else
    {
      ++column;
    }
  }
  std::string message = e.what();
  if ( auto const bracket = message.find( "] " ); bracket != std::string::npos )
  {
    message = message.substr( bracket + 2 );
  }
  throw parse_error( message, line, column );
}

std::string node_label( size_t index, nlohmann::json const& element )
{
  if ( element.is_object() && element.contains( "name" ) && element["name"].is_string() )
  {
    return "node '" + element["name"].get<std::string>() + "'";
  }
  return "node " + std::to_string( index + 1 );
}

} // namespace

boolean_network parse_tables( std::string const& text )
{
  nlohmann::json document;
  try
  {
    document = nlohmann::json::parse( text );
  }
  catch ( nlohmann::json::parse_error const& e )
  {
    rethrow_json_error( text, e );
  }

  if ( !document.is_object() )
  {
    throw parse_error( "the document root must be an object" );
  }
  if ( !document.contains( "nodes" ) || !document["nodes"].is_array() )
  {
    throw parse_error( "the document needs a \"nodes\" array" );
  }
  auto const& elements = document["nodes"];

  std::map<std::string, uint32_t> node_of;
  std::vector<std::string> names;
  for ( size_t i = 0; i < elements.size(); ++i )
  {
    auto const& element = elements[i];
    if ( !element.is_object() || !element.contains( "name" ) || !element["name"].is_string() ||
         element["name"].get<std::string>().empty() )
    {
      throw parse_error( node_label( i, element ) + " needs a nonempty \"name\" string" );
    }
    auto name = element["name"].get<std::string>();
    if ( !node_of.emplace( name, uint32_t( i ) ).second )
    {
      throw parse_error( "duplicate node name '" + name + "'" );
    }
    names.push_back( std::move( name ) );
  }

  if ( document.contains( "variables" ) )
  {
    auto const& variables = document["variables"];
    bool matches = variables.is_array() && variables.size() == names.size();
    for ( size_t i = 0; matches && i < names.size(); ++i )
    {
      matches = variables[i].is_string() && variables[i].get<std::string>() == names[i];
    }
    if ( !matches )
    {
      throw parse_error( "the \"variables\" list does not match the node names" );
    }
  }

  std::vector<node> nodes;
  nodes.reserve( elements.size() );
  for ( size_t i = 0; i < elements.size(); ++i )
  {
    auto const& element = elements[i];
    auto const label = node_label( i, element );
    if ( !element.contains( "inputs" ) || !element["inputs"].is_array() )
    {
      throw parse_error( label + " needs an \"inputs\" array" );
    }
    std::vector<uint32_t> inputs;
    std::map<std::string, uint8_t> seen;
    for ( auto const& entry : element["inputs"] )
    {
      if ( !entry.is_string() )
      {
        throw parse_error( label + " lists a non-string input" );
      }
      auto const input = entry.get<std::string>();
      auto const it = node_of.find( input );
      if ( it == node_of.end() )
      {
        throw parse_error( label + " reads the undefined node '" + input + "'" );
      }
      if ( !seen.emplace( input, 1 ).second )
      {
        throw parse_error( label + " reads '" + input + "' twice" );
      }
      inputs.push_back( it->second );
    }
    if ( inputs.size() > 20 )
    {
      throw resource_error( label + " has more than 20 inputs" );
    }

    if ( !element.contains( "table" ) || !element["table"].is_string() )
    {
      throw parse_error( label + " needs a \"table\" bit string" );
    }
    auto const bits = element["table"].get<std::string>();
    if ( bits.size() != size_t( 1 ) << inputs.size() )
    {
      throw parse_error( label + " needs a table of length " +
                         std::to_string( size_t( 1 ) << inputs.size() ) + ", got " +
                         std::to_string( bits.size() ) );
    }
    for ( char c : bits )
    {
      if ( c != '0' && c != '1' )
      {
        throw parse_error( label + " has the non-bit table character '" + std::string( 1, c ) +
                           "'" );
      }
    }
    uint32_t const arity = uint32_t( inputs.size() );
    nodes.push_back(
        { names[i], std::move( inputs ), boolean_function::from_bits( arity, bits ) } );
  }
  return boolean_network( std::move( nodes ) );
}

std::string emit_tables( boolean_network const& network )
{
  nlohmann::ordered_json document;
  auto& variables = document["variables"] = nlohmann::ordered_json::array();
  for ( uint32_t i = 0; i < network.size(); ++i )
  {
    variables.push_back( network[i].name );
  }
  auto& nodes = document["nodes"] = nlohmann::ordered_json::array();
  for ( uint32_t i = 0; i < network.size(); ++i )
  {
    nlohmann::ordered_json element;
    element["name"] = network[i].name;
    auto& inputs = element["inputs"] = nlohmann::ordered_json::array();
    for ( auto input : network[i].inputs )
    {
      inputs.push_back( network[input].name );
    }
    element["table"] = network[i].function.bits();
    nodes.push_back( std::move( element ) );
  }
  return document.dump( 2 ) + "\n";
}

} // namespace boolnet
