#include "boolnet/graphical.hpp"

#include "boolnet/errors.hpp"

#include <algorithm>

namespace boolnet
{

uint32_t family_alphabet( graphical_family family )
{
  switch ( family )
  {
  case graphical_family::linear:
  case graphical_family::conjunctive:
  case graphical_family::disjunctive:
    return 2;
  case graphical_family::and_not:
  case graphical_family::or_not:
  default:
    return 3;
  }
}

std::string family_name( graphical_family family )
{
  switch ( family )
  {
  case graphical_family::linear:
    return "linear";
  case graphical_family::conjunctive:
    return "conjunctive";
  case graphical_family::disjunctive:
    return "disjunctive";
  case graphical_family::and_not:
    return "and-not";
  case graphical_family::or_not:
  default:
    return "or-not";
  }
}

namespace
{

bool is_and_family( graphical_family family )
{
  return family == graphical_family::conjunctive || family == graphical_family::and_not;
}

void check_alphabet( labeled_matrix const& matrix, graphical_family family )
{
  uint32_t const z = family_alphabet( family );
  for ( uint32_t row = 0; row < matrix.rows; ++row )
  {
    for ( uint32_t col = 0; col < matrix.cols; ++col )
    {
      if ( matrix.at( row, col ) >= z )
      {
        throw family_error( "entry " + std::to_string( matrix.at( row, col ) ) + " at row " +
                            std::to_string( row + 1 ) + ", column " + std::to_string( col + 1 ) +
                            " is outside the " + family_name( family ) + " alphabet" );
      }
    }
  }
}

} // namespace

boolean_network graphical_realize( labeled_matrix const& matrix, graphical_family family,
                                   std::vector<std::string> names )
{
  if ( matrix.rows != matrix.cols )
  {
    throw arity_error( "the wiring matrix must be square" );
  }
  check_alphabet( matrix, family );
  uint32_t const n = matrix.rows;
  if ( names.empty() )
  {
    names.reserve( n );
    for ( uint32_t i = 0; i < n; ++i )
    {
      names.push_back( "x" + std::to_string( i + 1 ) );
    }
  }
  else if ( names.size() != n )
  {
    throw mapping_error( "expected " + std::to_string( n ) + " node names, got " +
                         std::to_string( names.size() ) );
  }

  std::vector<node> nodes;
  nodes.reserve( n );
  for ( uint32_t j = 0; j < n; ++j )
  {
    std::vector<uint32_t> inputs;
    std::vector<uint8_t> labels;
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( matrix.at( j, i ) != 0 )
      {
        inputs.push_back( i );
        labels.push_back( matrix.at( j, i ) );
      }
    }
    uint32_t const k = uint32_t( inputs.size() );
    if ( k > 20 )
    {
      throw resource_error( "row " + std::to_string( j + 1 ) + " has more than 20 regulators" );
    }

    std::vector<uint8_t> table( uint64_t( 1 ) << k );
    for ( uint64_t row = 0; row < table.size(); ++row )
    {
      uint8_t value;
      switch ( family )
      {
      case graphical_family::linear:
      {
        value = 0;
        for ( uint32_t t = 0; t < k; ++t )
        {
          value ^= ( row >> ( k - 1 - t ) ) & 1u;
        }
        break;
      }
      case graphical_family::conjunctive:
      case graphical_family::and_not:
      {
        value = 1;
        for ( uint32_t t = 0; t < k; ++t )
        {
          uint8_t const literal = ( row >> ( k - 1 - t ) ) & 1u;
          value &= labels[t] == 1 ? literal : literal ^ 1u;
        }
        break;
      }
      case graphical_family::disjunctive:
      case graphical_family::or_not:
      default:
      {
        value = 0;
        for ( uint32_t t = 0; t < k; ++t )
        {
          uint8_t const literal = ( row >> ( k - 1 - t ) ) & 1u;
          value |= labels[t] == 1 ? literal : literal ^ 1u;
        }
        break;
      }
      }
      table[row] = value;
    }
    nodes.push_back( { names[j], std::move( inputs ), boolean_function( k, std::move( table ) ) } );
  }
  return boolean_network( std::move( nodes ) );
}

labeled_matrix graphical_recognize( boolean_network const& network, graphical_family family )
{
  labeled_matrix matrix( network.size(), network.size() );
  for ( uint32_t j = 0; j < network.size(); ++j )
  {
    auto const& f = network[j].function;
    auto const& inputs = network[j].inputs;
    uint32_t const k = f.arity();
    std::vector<uint8_t> labels( k, 1 );

    if ( family == graphical_family::linear )
    {
      auto const masks = anf( f );
      if ( masks.size() != k )
      {
        throw family_error( "node '" + network[j].name + "' is not linear" );
      }
      for ( uint32_t t = 0; t < k; ++t )
      {
        if ( masks[t] != uint64_t( 1 ) << t )
        {
          throw family_error( "node '" + network[j].name + "' is not linear" );
        }
      }
    }
    else
    {
      // AND families have exactly one true row, OR families exactly one
      // false row; the literals are read off that row.
      uint8_t const witness = is_and_family( family ) ? 1 : 0;
      uint64_t found = f.num_rows();
      for ( uint64_t row = 0; row < f.num_rows(); ++row )
      {
        if ( f.bit( row ) == witness )
        {
          if ( found != f.num_rows() )
          {
            throw family_error( "node '" + network[j].name + "' is not " +
                                family_name( family ) );
          }
          found = row;
        }
      }
      if ( found == f.num_rows() )
      {
        throw family_error( "node '" + network[j].name + "' is not " + family_name( family ) );
      }
      for ( uint32_t t = 0; t < k; ++t )
      {
        uint8_t const bit = uint8_t( ( found >> ( k - 1 - t ) ) & 1u );
        labels[t] = bit == witness ? 1 : 2;
      }
      if ( family_alphabet( family ) == 2 &&
           std::any_of( labels.begin(), labels.end(), []( uint8_t l ) { return l != 1; } ) )
      {
        throw family_error( "node '" + network[j].name + "' is not " + family_name( family ) );
      }
    }

    for ( uint32_t t = 0; t < k; ++t )
    {
      matrix.at( j, inputs[t] ) = labels[t];
    }
  }
  return matrix;
}

labeled_matrix graphical_extend( labeled_matrix const& old_nodes, labeled_matrix const& added_nodes,
                                 labeled_matrix const& connections, graphical_family family )
{
  if ( old_nodes.rows != old_nodes.cols || added_nodes.rows != added_nodes.cols )
  {
    throw arity_error( "the wiring matrices must be square" );
  }
  if ( connections.rows != added_nodes.rows || connections.cols != old_nodes.rows )
  {
    throw arity_error( "the connection block must be " + std::to_string( added_nodes.rows ) +
                       " by " + std::to_string( old_nodes.rows ) );
  }
  check_alphabet( old_nodes, family );
  check_alphabet( added_nodes, family );
  check_alphabet( connections, family );

  uint32_t const n1 = old_nodes.rows;
  uint32_t const n2 = added_nodes.rows;
  labeled_matrix result( n1 + n2, n1 + n2 );
  for ( uint32_t j = 0; j < n1; ++j )
  {
    for ( uint32_t i = 0; i < n1; ++i )
    {
      result.at( j, i ) = old_nodes.at( j, i );
    }
  }
  for ( uint32_t j = 0; j < n2; ++j )
  {
    for ( uint32_t i = 0; i < n1; ++i )
    {
      result.at( n1 + j, i ) = connections.at( j, i );
    }
    for ( uint32_t i = 0; i < n2; ++i )
    {
      result.at( n1 + j, n1 + i ) = added_nodes.at( j, i );
    }
  }
  return result;
}

} // namespace boolnet
