#include "cli.hpp"

#include "verify.hpp"

#include <boolnet/canalization.hpp>
#include <boolnet/composition.hpp>
#include <boolnet/counting.hpp>
#include <boolnet/decomposition.hpp>
#include <boolnet/emit.hpp>
#include <boolnet/errors.hpp>
#include <boolnet/graphical.hpp>
#include <boolnet/network.hpp>
#include <boolnet/parse.hpp>
#include <boolnet/placement.hpp>
#include <boolnet/restriction.hpp>
#include <boolnet/table_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace boolnet
{

namespace
{

/* A bad flag value or combination: reported on stderr, exit code 2. */
struct usage_failure
{
  std::string message;
};

std::string read_source( std::string const& path )
{
  std::ostringstream buffer;
  if ( path == "-" )
  {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file( path, std::ios::binary );
  if ( !file )
  {
    throw usage_failure{ "cannot open '" + path + "'" };
  }
  buffer << file.rdbuf();
  return buffer.str();
}

/* A leading '{' selects the truth-table document format. */
boolean_network load_network( std::string const& path )
{
  auto const text = read_source( path );
  auto const first = text.find_first_not_of( " \t\r\n" );
  if ( first != std::string::npos && text[first] == '{' )
  {
    return parse_tables( text );
  }
  return parse_network( text );
}

void write_artifact( std::string const& text, std::string const& path, std::ostream& out )
{
  if ( path.empty() )
  {
    out << text;
    return;
  }
  std::ofstream file( path, std::ios::binary );
  if ( !file )
  {
    throw usage_failure{ "cannot open '" + path + "'" };
  }
  file << text;
}

std::string join( std::vector<std::string> const& parts, std::string const& separator )
{
  std::string text;
  for ( size_t i = 0; i < parts.size(); ++i )
  {
    text += ( i ? separator : "" ) + parts[i];
  }
  return text;
}

std::string structure_text( std::vector<uint32_t> const& structure )
{
  std::string text = "(";
  for ( size_t i = 0; i < structure.size(); ++i )
  {
    text += ( i ? "," : "" ) + std::to_string( structure[i] );
  }
  return text + ")";
}

std::vector<std::string> input_names( boolean_network const& network, node const& target )
{
  std::vector<std::string> names;
  for ( auto index : target.inputs )
  {
    names.push_back( network[index].name );
  }
  return names;
}

bool is_identifier( std::string const& text )
{
  if ( text.empty() || ( !std::isalpha( (unsigned char)text[0] ) && text[0] != '_' ) )
  {
    return false;
  }
  return std::all_of( text.begin(), text.end(), []( unsigned char c ) {
    return std::isalnum( c ) || c == '_';
  } );
}

uint32_t parse_number( std::string const& text, std::string const& what )
{
  if ( text.empty() || !std::all_of( text.begin(), text.end(), []( unsigned char c ) {
         return std::isdigit( c );
       } ) )
  {
    throw usage_failure{ "expected a number for " + what + ", got '" + text + "'" };
  }
  unsigned long value = 0;
  try
  {
    value = std::stoul( text );
  }
  catch ( std::out_of_range const& )
  {
    throw usage_failure{ what + " out of range: '" + text + "'" };
  }
  if ( value > 0xfffffffful )
  {
    throw usage_failure{ what + " out of range: '" + text + "'" };
  }
  return uint32_t( value );
}

std::vector<std::string> split( std::string const& text, char separator )
{
  std::vector<std::string> parts;
  std::string current;
  for ( char c : text )
  {
    if ( c == separator )
    {
      parts.push_back( current );
      current.clear();
    }
    else
    {
      current += c;
    }
  }
  parts.push_back( current );
  return parts;
}

/* ------------------------------------------------------------------ */
/* analyze                                                             */

void analyze_node_text( std::ostream& os, boolean_network const& network, node const& target )
{
  auto const names = input_names( network, target );
  auto const& f = target.function;
  os << "node " << target.name << "\n";
  os << "  inputs: " << ( names.empty() ? "none" : join( names, ", " ) ) << "\n";
  std::vector<std::string> essential;
  for ( auto v : essential_variables( f ) )
  {
    essential.push_back( names[v] );
  }
  os << "  essential: " << ( essential.empty() ? "none" : join( essential, ", " ) ) << "\n";
  if ( f.is_constant() )
  {
    os << "  constant: " << int( f.bit( 0 ) ) << "\n";
    os << "  canalizing pairs: none\n";
    os << "  nested canalizing: no\n";
    os << "  layer structure: -\n";
    os << "  depth: 0\n";
    return;
  }
  os << "  constant: no\n";
  std::vector<std::string> pairs;
  for ( auto const& entry : canalizing_pairs( f ) )
  {
    pairs.push_back( names[entry.variable] + "=" + std::to_string( entry.input ) + " -> " +
                     std::to_string( entry.output ) );
  }
  os << "  canalizing pairs: " << ( pairs.empty() ? "none" : join( pairs, ", " ) ) << "\n";
  os << "  nested canalizing: " << ( is_nested_canalizing( f ) ? "yes" : "no" ) << "\n";
  auto const report = stratify( f );
  os << "  layer structure: " << structure_text( report.layer_structure() ) << "\n";
  os << "  depth: " << report.depth() << "\n";
  if ( !report.layers.empty() )
  {
    os << "  layers: ";
    for ( size_t i = 0; i < report.layers.size(); ++i )
    {
      auto const& layer = report.layers[i];
      os << ( i ? "; " : "" ) << "[";
      for ( size_t j = 0; j < layer.entries.size(); ++j )
      {
        auto const& entry = layer.entries[j];
        os << ( j ? ", " : "" ) << names[entry.variable] << "=" << int( entry.input );
      }
      os << "] -> " << int( layer.output() );
    }
    os << "\n";
  }
  if ( report.core_variables.empty() )
  {
    os << "  core: constant " << int( report.core.bit( 0 ) ) << "\n";
  }
  else
  {
    std::vector<std::string> core_names;
    for ( auto v : report.core_variables )
    {
      core_names.push_back( names[v] );
    }
    os << "  core: " << report.core.bits() << " on (" << join( core_names, ", " ) << ")\n";
  }
}

nlohmann::ordered_json analyze_node_json( boolean_network const& network, node const& target )
{
  auto const names = input_names( network, target );
  auto const& f = target.function;
  nlohmann::ordered_json entry;
  entry["name"] = target.name;
  entry["inputs"] = names;
  auto essential = nlohmann::ordered_json::array();
  for ( auto v : essential_variables( f ) )
  {
    essential.push_back( names[v] );
  }
  entry["essential"] = essential;
  if ( f.is_constant() )
  {
    entry["constant"] = f.bit( 0 );
    entry["canalizing_pairs"] = nlohmann::ordered_json::array();
    entry["nested_canalizing"] = false;
    entry["layer_structure"] = nlohmann::ordered_json::array();
    entry["depth"] = 0;
    entry["stratification"] = nullptr;
    return entry;
  }
  entry["constant"] = nullptr;
  auto pairs = nlohmann::ordered_json::array();
  for ( auto const& pair : canalizing_pairs( f ) )
  {
    pairs.push_back( { { "variable", names[pair.variable] },
                       { "input", pair.input },
                       { "output", pair.output } } );
  }
  entry["canalizing_pairs"] = pairs;
  entry["nested_canalizing"] = is_nested_canalizing( f );
  auto const report = stratify( f );
  entry["layer_structure"] = report.layer_structure();
  entry["depth"] = report.depth();
  entry["stratification"] = nlohmann::ordered_json::parse( emit_json( report, names ) );
  return entry;
}

void run_analyze( boolean_network const& network, std::string const& node_name,
                  std::string const& format, std::string const& output, std::ostream& out )
{
  std::vector<uint32_t> selection;
  if ( node_name.empty() )
  {
    for ( uint32_t i = 0; i < network.size(); ++i )
    {
      selection.push_back( i );
    }
  }
  else
  {
    selection.push_back( network.index_of( node_name ) );
  }
  if ( format == "json" )
  {
    nlohmann::ordered_json document;
    auto& nodes = document["nodes"] = nlohmann::ordered_json::array();
    for ( auto index : selection )
    {
      nodes.push_back( analyze_node_json( network, network[index] ) );
    }
    write_artifact( document.dump( 2 ) + "\n", output, out );
    return;
  }
  std::ostringstream os;
  for ( size_t i = 0; i < selection.size(); ++i )
  {
    if ( i )
    {
      os << "\n";
    }
    analyze_node_text( os, network, network[selection[i]] );
  }
  write_artifact( os.str(), output, out );
}

/* ------------------------------------------------------------------ */
/* decompose                                                           */

cut_policy make_policy( std::string const& policy_name, std::string const& map_text,
                        bool map_given )
{
  cut_policy policy;
  if ( policy_name == "zeros" )
  {
    policy.kind = cut_policy::kind_t::zeros;
  }
  else if ( policy_name == "ncf" )
  {
    policy.kind = cut_policy::kind_t::ncf_defaults;
  }
  else
  {
    policy.kind = cut_policy::kind_t::explicit_map;
    if ( !map_given )
    {
      throw usage_failure{ "--policy map requires --map" };
    }
    for ( auto const& item : split( map_text, ',' ) )
    {
      auto const eq = item.find( '=' );
      if ( eq == std::string::npos )
      {
        throw usage_failure{ "--map entries look like name=bit, got '" + item + "'" };
      }
      auto const name = item.substr( 0, eq );
      auto const value = item.substr( eq + 1 );
      if ( value != "0" && value != "1" )
      {
        throw usage_failure{ "--map value for '" + name + "' must be 0 or 1" };
      }
      policy.values[name] = uint8_t( value == "1" );
    }
  }
  if ( policy.kind != cut_policy::kind_t::explicit_map && map_given )
  {
    throw usage_failure{ "--map only applies to --policy map" };
  }
  return policy;
}

std::string decompose_text( decomposition const& parts, boolean_network const& network )
{
  std::ostringstream os;
  for ( size_t c = 0; c < parts.components.size(); ++c )
  {
    std::vector<std::string> names;
    for ( auto v : parts.components[c] )
    {
      names.push_back( network[v].name );
    }
    os << "component " << c + 1 << ": " << join( names, ", " ) << "\n";
  }
  if ( parts.q_graph.empty() )
  {
    os << "module graph: none\n";
  }
  else
  {
    std::vector<std::string> edges;
    for ( auto const& [a, b] : parts.q_graph )
    {
      edges.push_back( std::to_string( a + 1 ) + " -> " + std::to_string( b + 1 ) );
    }
    os << "module graph: " << join( edges, ", " ) << "\n";
  }
  for ( size_t c = 0; c < parts.modules.size(); ++c )
  {
    os << "module " << c + 1 << ":\n";
    std::istringstream rules( emit_expressions( parts.modules[c] ) );
    std::string line;
    while ( std::getline( rules, line ) )
    {
      os << "  " << line << "\n";
    }
  }
  if ( parts.cuts.assignments.empty() )
  {
    os << "cuts: none\n";
  }
  else
  {
    os << "cuts:\n";
    for ( auto const& [kept, fixed] : parts.cuts.assignments )
    {
      std::vector<std::string> values;
      for ( auto const& [dropped, value] : fixed )
      {
        values.push_back( dropped + " = " + std::to_string( value ) );
      }
      os << "  " << kept << ": " << join( values, ", " ) << "\n";
    }
  }
  return os.str();
}

/* ------------------------------------------------------------------ */
/* count                                                               */

std::vector<uint32_t> parse_layer_list( std::string const& text )
{
  std::vector<uint32_t> layers;
  for ( auto const& piece : split( text, ',' ) )
  {
    layers.push_back( parse_number( piece, "--layers" ) );
  }
  return layers;
}

/* ------------------------------------------------------------------ */
/* extend                                                              */

std::string placement_spec_text( ncf_placement const& p, std::vector<std::string> const& names )
{
  std::string const input = ",input=" + std::to_string( p.input );
  switch ( p.kind )
  {
  case ncf_placement::kind_t::initial:
    return "initial:input=" + std::to_string( p.input );
  case ncf_placement::kind_t::addition:
    return "add:layer=" + std::to_string( p.layer + 1 ) + input;
  default:
    break;
  }
  std::vector<std::string> demoted;
  for ( auto v : p.demoted )
  {
    demoted.push_back( names[v] );
  }
  return "split:layer=" + std::to_string( p.layer + 1 ) + ",demote=" + join( demoted, "+" ) +
         input;
}

ncf_placement parse_placement_spec( std::string const& spec, boolean_network const& network,
                                    node const& target )
{
  auto const colon = spec.find( ':' );
  if ( colon == std::string::npos )
  {
    throw usage_failure{ "placement looks like kind:key=value,..., got '" + spec + "'" };
  }
  auto const kind_text = spec.substr( 0, colon );
  std::map<std::string, std::string> params;
  for ( auto const& piece : split( spec.substr( colon + 1 ), ',' ) )
  {
    auto const eq = piece.find( '=' );
    if ( eq == std::string::npos )
    {
      throw usage_failure{ "placement parameters look like key=value, got '" + piece + "'" };
    }
    if ( !params.emplace( piece.substr( 0, eq ), piece.substr( eq + 1 ) ).second )
    {
      throw usage_failure{ "duplicate placement parameter '" + piece.substr( 0, eq ) + "'" };
    }
  }
  auto const take = [&]( std::string const& key ) {
    auto const it = params.find( key );
    if ( it == params.end() )
    {
      throw usage_failure{ "placement '" + kind_text + "' needs " + key + "=..." };
    }
    auto value = it->second;
    params.erase( it );
    return value;
  };
  ncf_placement p;
  auto const read_input = [&]() {
    auto const value = take( "input" );
    if ( value != "0" && value != "1" )
    {
      throw usage_failure{ "placement input must be 0 or 1" };
    }
    p.input = uint8_t( value == "1" );
  };
  if ( kind_text == "initial" )
  {
    p.kind = ncf_placement::kind_t::initial;
    read_input();
  }
  else if ( kind_text == "add" )
  {
    p.kind = ncf_placement::kind_t::addition;
    auto const layer = parse_number( take( "layer" ), "layer" );
    if ( layer == 0 )
    {
      throw usage_failure{ "placement layers are numbered from 1" };
    }
    p.layer = layer - 1;
    read_input();
  }
  else if ( kind_text == "split" )
  {
    p.kind = ncf_placement::kind_t::split;
    auto const layer = parse_number( take( "layer" ), "layer" );
    if ( layer == 0 )
    {
      throw usage_failure{ "placement layers are numbered from 1" };
    }
    p.layer = layer - 1;
    for ( auto const& name : split( take( "demote" ), '+' ) )
    {
      if ( !network.has_node( name ) )
      {
        throw mapping_error( "no node named '" + name + "'" );
      }
      auto const index = network.index_of( name );
      auto const at = std::find( target.inputs.begin(), target.inputs.end(), index );
      if ( at == target.inputs.end() )
      {
        throw mapping_error( "'" + name + "' does not regulate '" + target.name + "'" );
      }
      p.demoted.push_back( uint32_t( at - target.inputs.begin() ) );
    }
    std::sort( p.demoted.begin(), p.demoted.end() );
    if ( std::adjacent_find( p.demoted.begin(), p.demoted.end() ) != p.demoted.end() )
    {
      throw usage_failure{ "duplicate demoted variable" };
    }
    read_input();
  }
  else
  {
    throw usage_failure{ "placement kind is initial, add, or split, got '" + kind_text + "'" };
  }
  if ( !params.empty() )
  {
    throw usage_failure{ "unknown placement parameter '" + params.begin()->first + "'" };
  }
  return p;
}

std::string fresh_name( boolean_network const& network )
{
  for ( uint32_t i = 1;; ++i )
  {
    auto const name = "v" + std::to_string( i );
    if ( !network.has_node( name ) )
    {
      return name;
    }
  }
}

boolean_network extend_network( boolean_network const& network, uint32_t target,
                                ncf_placement const& p, std::string const& new_name )
{
  auto nodes = network.nodes();
  uint32_t regulator;
  if ( network.has_node( new_name ) )
  {
    regulator = network.index_of( new_name );
  }
  else
  {
    regulator = network.size();
    nodes.push_back( { new_name, { regulator }, boolean_function::from_bits( 1, "01" ) } );
  }
  auto& extended = nodes[target];
  if ( std::find( extended.inputs.begin(), extended.inputs.end(), regulator ) !=
       extended.inputs.end() )
  {
    throw mapping_error( "'" + new_name + "' already regulates '" + extended.name + "'" );
  }
  extended.function = apply_placement( extended.function, p );
  extended.inputs.push_back( regulator );
  return boolean_network( std::move( nodes ) );
}

/* ------------------------------------------------------------------ */
/* compose                                                             */

std::pair<uint32_t, uint32_t> parse_edge( std::string const& text, size_t part_count )
{
  auto const dash = text.find( '-' );
  if ( dash == std::string::npos )
  {
    throw usage_failure{ "module edges look like a-b, got '" + text + "'" };
  }
  auto const a = parse_number( text.substr( 0, dash ), "module edge" );
  auto const b = parse_number( text.substr( dash + 1 ), "module edge" );
  if ( a == 0 || b == 0 || a > part_count || b > part_count )
  {
    throw usage_failure{ "module edge '" + text + "' is out of range" };
  }
  return { a - 1, b - 1 };
}

labeled_matrix parse_connection_block( std::string const& text, uint32_t z )
{
  auto const rows = split( text, ';' );
  labeled_matrix block;
  block.rows = uint32_t( rows.size() );
  for ( size_t r = 0; r < rows.size(); ++r )
  {
    auto const entries = split( rows[r], ',' );
    if ( r == 0 )
    {
      block.cols = uint32_t( entries.size() );
    }
    else if ( entries.size() != block.cols )
    {
      throw usage_failure{ "connection rows have different lengths" };
    }
    for ( auto const& entry : entries )
    {
      uint32_t value;
      if ( entry == "-1" )
      {
        value = 2;
      }
      else
      {
        value = parse_number( entry, "connection entry" );
      }
      if ( value >= z )
      {
        throw usage_failure{ "connection entry '" + entry + "' is outside the family alphabet" };
      }
      block.entries.push_back( uint8_t( value ) );
    }
  }
  return block;
}

graphical_family parse_family( std::string const& text )
{
  if ( text == "linear" )
  {
    return graphical_family::linear;
  }
  if ( text == "conjunctive" )
  {
    return graphical_family::conjunctive;
  }
  if ( text == "disjunctive" )
  {
    return graphical_family::disjunctive;
  }
  if ( text == "and-not" )
  {
    return graphical_family::and_not;
  }
  if ( text == "or-not" )
  {
    return graphical_family::or_not;
  }
  throw usage_failure{ "unknown family '" + text + "'" };
}

} // namespace

int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Boolean network construction toolkit", "boolnet" };
  app.require_subcommand( 1 );
  int exit_code = 0;

  /* analyze */
  auto* analyze_cmd =
      app.add_subcommand( "analyze", "Canalization report of a network's local functions" );
  std::string analyze_file, analyze_node, analyze_format = "text", analyze_output;
  analyze_cmd->add_option( "file", analyze_file, "network file (rules or table document)" )
      ->required();
  analyze_cmd->add_option( "--node", analyze_node, "report a single node" );
  analyze_cmd->add_option( "--format", analyze_format, "text or json" )
      ->check( CLI::IsMember( { "text", "json" } ) );
  analyze_cmd->add_option( "--output", analyze_output, "write the report to a file" );
  analyze_cmd->callback( [&]() {
    auto const network = load_network( analyze_file );
    run_analyze( network, analyze_node, analyze_format, analyze_output, out );
  } );

  /* decompose */
  auto* decompose_cmd =
      app.add_subcommand( "decompose", "Split a network into simple modules" );
  std::string decompose_file, decompose_policy = "zeros", decompose_map;
  std::string decompose_format = "text", decompose_output;
  decompose_cmd->add_option( "file", decompose_file, "network file" )->required();
  decompose_cmd->add_option( "--policy", decompose_policy, "cut policy: zeros, ncf, or map" )
      ->check( CLI::IsMember( { "zeros", "ncf", "map" } ) );
  decompose_cmd->add_option( "--map", decompose_map, "cut values, e.g. x1=0,x2=1" );
  decompose_cmd->add_option( "--format", decompose_format, "text, json, or dot" )
      ->check( CLI::IsMember( { "text", "json", "dot" } ) );
  decompose_cmd->add_option( "--output", decompose_output, "write the result to a file" );
  decompose_cmd->callback( [&]() {
    auto const network = load_network( decompose_file );
    auto const policy =
        make_policy( decompose_policy, decompose_map, decompose_cmd->count( "--map" ) > 0 );
    auto const parts = scc_decompose( network, policy );
    std::string text;
    if ( decompose_format == "json" )
    {
      text = emit_json( parts, network );
    }
    else if ( decompose_format == "dot" )
    {
      text = emit_dot( parts, network );
    }
    else
    {
      text = decompose_text( parts, network );
    }
    write_artifact( text, decompose_output, out );
  } );

  /* count */
  auto* count_cmd = app.add_subcommand( "count", "Exact extension and composition counts" );
  std::string count_mode, count_layers, count_functions = "general", count_file;
  uint32_t count_n = 0, count_q = 0, count_z = 0, count_upstream = 0;
  uint64_t count_n1 = 0, count_n2 = 0;
  count_cmd->add_option( "--mode", count_mode, "general, ncf, graphical, or network" )
      ->required()
      ->check( CLI::IsMember( { "general", "ncf", "graphical", "network" } ) );
  count_cmd->add_option( "--n", count_n, "number of variables (general)" );
  count_cmd->add_option( "--q", count_q, "number of new variables (general, ncf)" );
  count_cmd->add_option( "--layers", count_layers, "layer structure k1,k2,... (ncf)" );
  count_cmd->add_option( "--n1", count_n1, "upstream component size (graphical)" );
  count_cmd->add_option( "--n2", count_n2, "downstream component size (graphical)" );
  count_cmd->add_option( "--z", count_z, "family alphabet size (graphical)" );
  count_cmd->add_option( "file", count_file, "network file (network)" );
  count_cmd->add_option( "--upstream", count_upstream, "number of new upstream nodes (network)" );
  count_cmd->add_option( "--functions", count_functions,
                         "function class for network counts: general or ncf" )
      ->check( CLI::IsMember( { "general", "ncf" } ) );
  count_cmd->callback( [&]() {
    std::map<std::string, std::vector<std::string>> const required = {
      { "general", { "--n", "--q" } },
      { "ncf", { "--layers", "--q" } },
      { "graphical", { "--n1", "--n2", "--z" } },
      { "network", { "file", "--upstream" } },
    };
    std::vector<std::string> const all = { "--n", "--q",        "--layers",    "--n1", "--n2",
                                           "--z", "--upstream", "--functions", "file" };
    auto const& needed = required.at( count_mode );
    for ( auto const& flag : all )
    {
      bool const given = count_cmd->count( flag ) > 0;
      bool const in_mode = std::find( needed.begin(), needed.end(), flag ) != needed.end();
      bool const allowed = in_mode || ( count_mode == "network" && flag == "--functions" );
      if ( given && !allowed )
      {
        throw usage_failure{ "count --mode " + count_mode + " does not take " + flag };
      }
      if ( !given && in_mode )
      {
        throw usage_failure{ "count --mode " + count_mode + " requires " + flag };
      }
    }
    extension_count value;
    if ( count_mode == "general" )
    {
      value = count_extensions_general( count_n, count_q );
    }
    else if ( count_mode == "ncf" )
    {
      value = count_ncf_extensions( parse_layer_list( count_layers ), count_q );
    }
    else if ( count_mode == "graphical" )
    {
      if ( count_z < 2 )
      {
        throw usage_failure{ "--z must be at least 2" };
      }
      value = count_graphical_extensions( count_n1, count_n2, count_z );
    }
    else
    {
      auto const network = load_network( count_file );
      value = count_functions == "ncf"
                  ? count_network_extensions_ncf( network, count_upstream )
                  : count_network_extensions_general( network, count_upstream );
    }
    out << value << "\n";
  } );

  /* extend */
  auto* extend_cmd =
      app.add_subcommand( "extend", "Add one variable to a nested canalizing node" );
  std::string extend_file, extend_node, extend_placement, extend_new_var, extend_output;
  bool extend_list = false;
  extend_cmd->add_option( "file", extend_file, "network file" )->required();
  extend_cmd->add_option( "--node", extend_node, "target node" )->required();
  extend_cmd->add_flag( "--list", extend_list, "list the legal placements" );
  extend_cmd->add_option( "--placement", extend_placement,
                          "placement to apply, e.g. split:layer=1,demote=x2,input=0" );
  extend_cmd->add_option( "--new-var", extend_new_var, "name of the added regulator" );
  extend_cmd->add_option( "--output", extend_output, "write the result to a file" );
  extend_cmd->callback( [&]() {
    if ( extend_list == !extend_placement.empty() )
    {
      throw usage_failure{ "extend needs exactly one of --list and --placement" };
    }
    if ( extend_list && !extend_new_var.empty() )
    {
      throw usage_failure{ "--new-var only applies to --placement" };
    }
    auto const network = load_network( extend_file );
    auto const target = network.index_of( extend_node );
    auto const names = input_names( network, network[target] );
    if ( extend_list )
    {
      auto const placements = ncf_placements( network[target].function );
      auto const base = stratify( network[target].function ).layer_structure();
      std::ostringstream os;
      for ( size_t i = 0; i < placements.size(); ++i )
      {
        auto const& p = placements[i];
        os << i + 1 << ": " << placement_spec_text( p, names ) << " -> "
           << structure_text(
                  placement_target_structure( base, p, uint32_t( p.demoted.size() ) ) )
           << "\n";
      }
      write_artifact( os.str(), extend_output, out );
      return;
    }
    auto const p = parse_placement_spec( extend_placement, network, network[target] );
    auto const new_name = extend_new_var.empty() ? fresh_name( network ) : extend_new_var;
    if ( !is_identifier( new_name ) )
    {
      throw usage_failure{ "--new-var must be an identifier, got '" + new_name + "'" };
    }
    auto const extended = extend_network( network, target, p, new_name );
    write_artifact( emit_expressions( extended ), extend_output, out );
  } );

  /* compose */
  auto* compose_cmd =
      app.add_subcommand( "compose", "Assemble networks along an acyclic module graph" );
  std::vector<std::string> compose_files, compose_connections;
  std::string compose_q, compose_family, compose_output;
  compose_cmd->add_option( "files", compose_files, "network files, one per module" )
      ->required();
  compose_cmd->add_option( "--q", compose_q, "module edges, e.g. 1-2,2-3" );
  compose_cmd
      ->add_option( "--family", compose_family,
                    "linear, conjunctive, disjunctive, and-not, or-not" )
      ->check( CLI::IsMember( { "linear", "conjunctive", "disjunctive", "and-not", "or-not" } ) );
  compose_cmd
      ->add_option( "--connections", compose_connections,
                    "connection block for one edge, e.g. 1-2:1,0;1,1" )
      ->type_size( 1 );
  compose_cmd->add_option( "--output", compose_output, "write the result to a file" );
  compose_cmd->callback( [&]() {
    std::vector<boolean_network> parts;
    for ( auto const& file : compose_files )
    {
      parts.push_back( load_network( file ) );
    }
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    if ( !compose_q.empty() )
    {
      for ( auto const& piece : split( compose_q, ',' ) )
      {
        edges.push_back( parse_edge( piece, parts.size() ) );
      }
    }
    if ( edges.empty() && compose_connections.empty() )
    {
      write_artifact( emit_expressions( compose_disjoint( parts ) ), compose_output, out );
      return;
    }
    if ( compose_family.empty() )
    {
      throw usage_failure{ "compose with module edges requires --family" };
    }
    auto const family = parse_family( compose_family );
    std::map<std::pair<uint32_t, uint32_t>, labeled_matrix> connections;
    for ( auto const& spec : compose_connections )
    {
      auto const colon = spec.find( ':' );
      if ( colon == std::string::npos )
      {
        throw usage_failure{ "connections look like a-b:rows, got '" + spec + "'" };
      }
      auto const edge = parse_edge( spec.substr( 0, colon ), parts.size() );
      auto block = parse_connection_block( spec.substr( colon + 1 ), family_alphabet( family ) );
      if ( !connections.emplace( edge, std::move( block ) ).second )
      {
        throw usage_failure{ "duplicate connection block for edge " + spec.substr( 0, colon ) };
      }
    }
    auto const result = compose_graphical( parts, edges, family, connections );
    write_artifact( emit_expressions( result ), compose_output, out );
  } );

  /* verify */
  auto* verify_cmd = app.add_subcommand( "verify", "Run the brute-force oracle suite" );
  std::string verify_suite = "oracles", verify_only;
  verify_cmd->add_option( "--suite", verify_suite, "oracle suite name" )
      ->check( CLI::IsMember( { "oracles" } ) );
  verify_cmd->add_option( "--only", verify_only, "run a single check" );
  verify_cmd->callback( [&]() {
    if ( !verify_only.empty() )
    {
      auto const names = verify_check_names();
      if ( std::find( names.begin(), names.end(), verify_only ) == names.end() )
      {
        throw usage_failure{ "unknown check '" + verify_only + "'; checks: " +
                             join( names, ", " ) };
      }
    }
    if ( run_verify_suite( verify_only, out ) != 0 )
    {
      exit_code = 1;
    }
  } );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::ParseError const& e )
  {
    if ( e.get_exit_code() == 0 )
    {
      return app.exit( e, out, err );
    }
    app.exit( e, out, err );
    return 2;
  }
  catch ( usage_failure const& e )
  {
    err << "error: " << e.message << "\n";
    return 2;
  }
  catch ( parse_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

} // namespace boolnet
