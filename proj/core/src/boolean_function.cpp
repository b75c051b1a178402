#include "boolnet/boolean_function.hpp"

#include "boolnet/errors.hpp"

#include <algorithm>

namespace boolnet
{

boolean_function::boolean_function( uint32_t arity, std::vector<uint8_t> table )
    : arity_( arity ), table_( std::move( table ) )
{
  if ( arity > 63u )
  {
    throw resource_error( "arity " + std::to_string( arity ) + " exceeds the supported maximum of 63" );
  }
  if ( table_.size() != ( uint64_t( 1 ) << arity ) )
  {
    throw arity_error( "table has " + std::to_string( table_.size() ) + " rows, expected " +
                       std::to_string( uint64_t( 1 ) << arity ) );
  }
  for ( auto b : table_ )
  {
    if ( b > 1u )
    {
      throw arity_error( "table entries must be 0 or 1" );
    }
  }
}

boolean_function boolean_function::constant( uint32_t arity, uint8_t value )
{
  return boolean_function( arity, std::vector<uint8_t>( uint64_t( 1 ) << arity, value ) );
}

boolean_function boolean_function::from_bits( uint32_t arity, std::string const& bits )
{
  std::vector<uint8_t> table;
  table.reserve( bits.size() );
  for ( auto c : bits )
  {
    if ( c != '0' && c != '1' )
    {
      throw arity_error( "bit string may contain only 0 and 1" );
    }
    table.push_back( c == '1' ? 1 : 0 );
  }
  return boolean_function( arity, std::move( table ) );
}

std::string boolean_function::bits() const
{
  std::string s;
  s.reserve( table_.size() );
  for ( auto b : table_ )
  {
    s.push_back( b ? '1' : '0' );
  }
  return s;
}

uint8_t boolean_function::evaluate( std::vector<uint8_t> const& assignment ) const
{
  if ( assignment.size() != arity_ )
  {
    throw arity_error( "assignment has " + std::to_string( assignment.size() ) + " values, expected " +
                       std::to_string( arity_ ) );
  }
  return table_[row_of( assignment )];
}

bool boolean_function::is_constant() const
{
  return std::all_of( table_.begin(), table_.end(), [&]( uint8_t b ) { return b == table_[0]; } );
}

bool boolean_function::depends_on( uint32_t var ) const
{
  if ( var >= arity_ )
  {
    throw arity_error( "variable position out of range" );
  }
  uint64_t const stride = uint64_t( 1 ) << ( arity_ - 1u - var );
  for ( uint64_t row = 0; row < table_.size(); ++row )
  {
    if ( ( row & stride ) == 0 && table_[row] != table_[row | stride] )
    {
      return true;
    }
  }
  return false;
}

bool boolean_function::operator<( boolean_function const& other ) const
{
  if ( arity_ != other.arity_ )
  {
    return arity_ < other.arity_;
  }
  return table_ < other.table_;
}

uint64_t row_of( std::vector<uint8_t> const& assignment )
{
  uint64_t row = 0;
  for ( auto b : assignment )
  {
    row = ( row << 1 ) | ( b & 1u );
  }
  return row;
}

std::vector<uint8_t> assignment_of( uint64_t row, uint32_t arity )
{
  std::vector<uint8_t> a( arity );
  for ( uint32_t i = 0; i < arity; ++i )
  {
    a[i] = ( row >> ( arity - 1u - i ) ) & 1u;
  }
  return a;
}

std::vector<uint32_t> essential_variables( boolean_function const& f )
{
  std::vector<uint32_t> vars;
  for ( uint32_t i = 0; i < f.arity(); ++i )
  {
    if ( f.depends_on( i ) )
    {
      vars.push_back( i );
    }
  }
  return vars;
}

boolean_function fix_variables( boolean_function const& f, std::vector<uint32_t> const& kept,
                                std::vector<uint8_t> const& values )
{
  uint32_t const n = f.arity();
  std::vector<uint8_t> role( n, 0 ); // 1 = kept
  for ( size_t i = 0; i < kept.size(); ++i )
  {
    if ( kept[i] >= n || ( i > 0 && kept[i] <= kept[i - 1] ) )
    {
      throw partition_error( "kept positions must be strictly increasing and in range" );
    }
    role[kept[i]] = 1;
  }
  if ( kept.size() + values.size() != n )
  {
    throw partition_error( "kept positions and fixed values must cover all variables exactly once" );
  }

  std::vector<uint8_t> assignment( n );
  size_t vi = 0;
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( !role[i] )
    {
      if ( values[vi] > 1u )
      {
        throw partition_error( "fixed values must be 0 or 1" );
      }
      assignment[i] = values[vi++];
    }
  }

  uint64_t base = 0;
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( !role[i] && assignment[i] )
    {
      base |= uint64_t( 1 ) << ( n - 1u - i );
    }
  }

  uint32_t const m = static_cast<uint32_t>( kept.size() );
  std::vector<uint8_t> table( uint64_t( 1 ) << m );
  for ( uint64_t row = 0; row < table.size(); ++row )
  {
    uint64_t src = base;
    for ( uint32_t j = 0; j < m; ++j )
    {
      if ( ( row >> ( m - 1u - j ) ) & 1u )
      {
        src |= uint64_t( 1 ) << ( n - 1u - kept[j] );
      }
    }
    table[row] = f.bit( src );
  }
  return boolean_function( m, std::move( table ) );
}

boolean_function permute_variables( boolean_function const& f, std::vector<uint32_t> const& destination )
{
  uint32_t const n = f.arity();
  if ( destination.size() != n )
  {
    throw arity_error( "permutation size must equal the arity" );
  }
  std::vector<uint8_t> seen( n, 0 );
  for ( auto d : destination )
  {
    if ( d >= n || seen[d] )
    {
      throw mapping_error( "destination is not a permutation" );
    }
    seen[d] = 1;
  }

  std::vector<uint8_t> table( f.num_rows() );
  for ( uint64_t row = 0; row < table.size(); ++row )
  {
    uint64_t src = 0;
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( ( row >> ( n - 1u - destination[i] ) ) & 1u )
      {
        src |= uint64_t( 1 ) << ( n - 1u - i );
      }
    }
    table[row] = f.bit( src );
  }
  return boolean_function( n, std::move( table ) );
}

std::vector<uint64_t> anf( boolean_function const& f )
{
  uint32_t const n = f.arity();
  std::vector<uint8_t> coeff = f.table();

  // Moebius transform over the subset lattice of row indices.
  for ( uint32_t i = 0; i < n; ++i )
  {
    uint64_t const stride = uint64_t( 1 ) << i;
    for ( uint64_t row = 0; row < coeff.size(); ++row )
    {
      if ( row & stride )
      {
        coeff[row] ^= coeff[row ^ stride];
      }
    }
  }

  std::vector<uint64_t> monomials;
  for ( uint64_t row = 0; row < coeff.size(); ++row )
  {
    if ( !coeff[row] )
    {
      continue;
    }
    // Row bit (n - 1 - i) marks variable position i.
    uint64_t mask = 0;
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( row & ( uint64_t( 1 ) << ( n - 1u - i ) ) )
      {
        mask |= uint64_t( 1 ) << i;
      }
    }
    monomials.push_back( mask );
  }
  std::sort( monomials.begin(), monomials.end() );
  return monomials;
}

boolean_function from_anf( uint32_t arity, std::vector<uint64_t> const& monomials )
{
  std::vector<uint8_t> table( uint64_t( 1 ) << arity, 0 );
  for ( auto mask : monomials )
  {
    if ( mask >> arity )
    {
      throw arity_error( "monomial mentions a variable position out of range" );
    }
    // Convert the position mask to row-index space.
    uint64_t row_mask = 0;
    for ( uint32_t i = 0; i < arity; ++i )
    {
      if ( mask & ( uint64_t( 1 ) << i ) )
      {
        row_mask |= uint64_t( 1 ) << ( arity - 1u - i );
      }
    }
    for ( uint64_t row = 0; row < table.size(); ++row )
    {
      if ( ( row & row_mask ) == row_mask )
      {
        table[row] ^= 1u;
      }
    }
  }
  return boolean_function( arity, std::move( table ) );
}

} // namespace boolnet
