#include "boolnet/emit.hpp"

#include "boolnet/errors.hpp"
#include "boolnet/table_io.hpp"

#include <json.hpp>

#include <cctype>

namespace boolnet
{

namespace
{

bool is_identifier( std::string const& name )
{
  if ( name.empty() || ( !std::isalpha( static_cast<unsigned char>( name[0] ) ) && name[0] != '_' ) )
  {
    return false;
  }
  for ( char c : name )
  {
    if ( !std::isalnum( static_cast<unsigned char>( c ) ) && c != '_' )
    {
      return false;
    }
  }
  return true;
}

std::string quoted( std::string const& name )
{
  std::string out = "\"";
  for ( char c : name )
  {
    if ( c == '"' || c == '\\' )
    {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

} // namespace

std::string emit_expressions( boolean_network const& network )
{
  std::string out;
  for ( uint32_t i = 0; i < network.size(); ++i )
  {
    auto const& n = network[i];
    if ( !is_identifier( n.name ) )
    {
      throw mapping_error( "node name '" + n.name + "' is not an identifier" );
    }
    out += n.name;
    out += " = ";
    auto const masks = anf( n.function );
    if ( masks.empty() )
    {
      out += "0";
    }
    else
    {
      for ( size_t m = 0; m < masks.size(); ++m )
      {
        if ( m > 0 )
        {
          out += " ^ ";
        }
        if ( masks[m] == 0 )
        {
          out += "1";
          continue;
        }
        bool first = true;
        for ( uint32_t t = 0; t < n.function.arity(); ++t )
        {
          if ( masks[m] >> t & 1u )
          {
            if ( !first )
            {
              out += " & ";
            }
            out += network[n.inputs[t]].name;
            first = false;
          }
        }
      }
    }
    out += '\n';
  }
  return out;
}

std::string emit_dot( boolean_network const& network )
{
  std::string out = "digraph network {\n";
  for ( uint32_t i = 0; i < network.size(); ++i )
  {
    out += "  " + quoted( network[i].name ) + ";\n";
  }
  for ( auto const& [regulator, target] : wiring( network ).edges )
  {
    out += "  " + quoted( network[regulator].name ) + " -> " + quoted( network[target].name ) +
           ";\n";
  }
  out += "}\n";
  return out;
}

std::string emit_dot( decomposition const& parts, boolean_network const& network )
{
  std::vector<uint32_t> component_of( network.size(), 0 );
  for ( uint32_t c = 0; c < parts.components.size(); ++c )
  {
    for ( auto v : parts.components[c] )
    {
      component_of[v] = c;
    }
  }

  std::string out = "digraph modules {\n  compound = true;\n";
  for ( uint32_t c = 0; c < parts.components.size(); ++c )
  {
    out += "  subgraph cluster_" + std::to_string( c + 1 ) + " {\n";
    out += "    label = \"module " + std::to_string( c + 1 ) + "\";\n";
    for ( auto v : parts.components[c] )
    {
      out += "    " + quoted( network[v].name ) + ";\n";
    }
    out += "  }\n";
  }
  for ( auto const& [regulator, target] : wiring( network ).edges )
  {
    if ( component_of[regulator] == component_of[target] )
    {
      out += "  " + quoted( network[regulator].name ) + " -> " + quoted( network[target].name ) +
             ";\n";
    }
  }
  for ( auto const& [a, b] : parts.q_graph )
  {
    out += "  " + quoted( network[parts.components[a].front()].name ) + " -> " +
           quoted( network[parts.components[b].front()].name ) + " [ltail = cluster_" +
           std::to_string( a + 1 ) + ", lhead = cluster_" + std::to_string( b + 1 ) +
           ", style = bold];\n";
  }
  out += "}\n";
  return out;
}

std::string emit_json( canalization_report const& report, std::vector<std::string> const& names )
{
  if ( names.size() != report.arity )
  {
    throw mapping_error( "expected " + std::to_string( report.arity ) + " variable names, got " +
                         std::to_string( names.size() ) );
  }
  nlohmann::ordered_json document;
  document["arity"] = report.arity;
  document["constant_offset"] = report.constant_offset;
  auto& layers = document["layers"] = nlohmann::ordered_json::array();
  for ( auto const& layer : report.layers )
  {
    nlohmann::ordered_json item;
    item["output"] = layer.output();
    auto& entries = item["entries"] = nlohmann::ordered_json::array();
    for ( auto const& entry : layer.entries )
    {
      entries.push_back( { { "variable", names[entry.variable] }, { "input", entry.input } } );
    }
    layers.push_back( std::move( item ) );
  }
  auto& core = document["core"] = nlohmann::ordered_json::object();
  auto& variables = core["variables"] = nlohmann::ordered_json::array();
  for ( auto v : report.core_variables )
  {
    variables.push_back( names[v] );
  }
  core["table"] = report.core.bits();
  auto& inert = document["inert"] = nlohmann::ordered_json::array();
  for ( auto v : report.inert_variables )
  {
    inert.push_back( names[v] );
  }
  return document.dump( 2 ) + "\n";
}

std::string emit_json( decomposition const& parts, boolean_network const& network )
{
  nlohmann::ordered_json document;
  auto& components = document["components"] = nlohmann::ordered_json::array();
  for ( auto const& members : parts.components )
  {
    auto list = nlohmann::ordered_json::array();
    for ( auto v : members )
    {
      list.push_back( network[v].name );
    }
    components.push_back( std::move( list ) );
  }
  auto& edges = document["module_graph"] = nlohmann::ordered_json::array();
  for ( auto const& [a, b] : parts.q_graph )
  {
    edges.push_back( { a + 1, b + 1 } );
  }
  auto& modules = document["modules"] = nlohmann::ordered_json::array();
  for ( auto const& module : parts.modules )
  {
    modules.push_back( nlohmann::ordered_json::parse( emit_tables( module ) ) );
  }
  auto& cuts = document["cuts"] = nlohmann::ordered_json::object();
  for ( auto const& [kept, fixed] : parts.cuts.assignments )
  {
    auto& entry = cuts[kept] = nlohmann::ordered_json::object();
    for ( auto const& [dropped, value] : fixed )
    {
      entry[dropped] = value;
    }
  }
  return document.dump( 2 ) + "\n";
}

std::string emit_json( extension_count const& count )
{
  return nlohmann::json( count.str() ).dump();
}

} // namespace boolnet
