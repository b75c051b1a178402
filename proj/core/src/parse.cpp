#include "boolnet/parse.hpp"

#include "boolnet/errors.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace boolnet
{

namespace
{

struct token
{
  enum class kind_t
  {
    identifier,
    constant,
    bang,
    amp,
    caret,
    pipe,
    lparen,
    rparen,
    equals,
    end
  };

  kind_t kind;
  std::string text;
  uint8_t value = 0;
  uint32_t line = 0;
  uint32_t column = 0;
};

std::vector<token> lex_line( std::string const& text, uint32_t line_number )
{
  std::vector<token> tokens;
  size_t i = 0;
  while ( i < text.size() )
  {
    char const c = text[i];
    uint32_t const column = uint32_t( i + 1 );
    if ( c == ' ' || c == '\t' || c == '\r' )
    {
      ++i;
      continue;
    }
    if ( c == '#' )
    {
      break;
    }
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      size_t j = i + 1;
      while ( j < text.size() && ( std::isalnum( static_cast<unsigned char>( text[j] ) ) ||
                                   text[j] == '_' ) )
      {
        ++j;
      }
      tokens.push_back(
          { token::kind_t::identifier, text.substr( i, j - i ), 0, line_number, column } );
      i = j;
      continue;
    }
    if ( c == '0' || c == '1' )
    {
      tokens.push_back(
          { token::kind_t::constant, std::string( 1, c ), uint8_t( c - '0' ), line_number, column } );
      ++i;
      continue;
    }
    token::kind_t kind;
    switch ( c )
    {
    case '!':
      kind = token::kind_t::bang;
      break;
    case '&':
      kind = token::kind_t::amp;
      break;
    case '^':
      kind = token::kind_t::caret;
      break;
    case '|':
      kind = token::kind_t::pipe;
      break;
    case '(':
      kind = token::kind_t::lparen;
      break;
    case ')':
      kind = token::kind_t::rparen;
      break;
    case '=':
      kind = token::kind_t::equals;
      break;
    default:
      throw parse_error( std::string( "unexpected character '" ) + c + "'", line_number, column );
    }
    tokens.push_back( { kind, std::string( 1, c ), 0, line_number, column } );
    ++i;
  }
  tokens.push_back( { token::kind_t::end, "", 0, line_number, uint32_t( text.size() + 1 ) } );
  return tokens;
}

/* Evaluates one rule directly into the truth table over its variable list. */
class rule_parser
{
public:
  rule_parser( std::vector<token> const& tokens, std::map<std::string, uint32_t> const& var_of,
               uint32_t arity )
      : tokens_( tokens ), var_of_( var_of ), arity_( arity ),
        rows_( uint64_t( 1 ) << arity )
  {
  }

  std::vector<uint8_t> parse()
  {
    auto table = parse_or();
    if ( peek().kind != token::kind_t::end )
    {
      throw parse_error( "unexpected '" + peek().text + "' after the expression", peek().line,
                         peek().column );
    }
    return table;
  }

private:
  token const& peek() const { return tokens_[cursor_]; }

  std::vector<uint8_t> parse_or()
  {
    auto left = parse_xor();
    while ( peek().kind == token::kind_t::pipe )
    {
      ++cursor_;
      auto const right = parse_xor();
      for ( uint64_t r = 0; r < rows_; ++r )
      {
        left[r] |= right[r];
      }
    }
    return left;
  }

  std::vector<uint8_t> parse_xor()
  {
    auto left = parse_and();
    while ( peek().kind == token::kind_t::caret )
    {
      ++cursor_;
      auto const right = parse_and();
      for ( uint64_t r = 0; r < rows_; ++r )
      {
        left[r] ^= right[r];
      }
    }
    return left;
  }

  std::vector<uint8_t> parse_and()
  {
    auto left = parse_not();
    while ( peek().kind == token::kind_t::amp )
    {
      ++cursor_;
      auto const right = parse_not();
      for ( uint64_t r = 0; r < rows_; ++r )
      {
        left[r] &= right[r];
      }
    }
    return left;
  }

  std::vector<uint8_t> parse_not()
  {
    if ( peek().kind == token::kind_t::bang )
    {
      ++cursor_;
      auto table = parse_not();
      for ( uint64_t r = 0; r < rows_; ++r )
      {
        table[r] ^= 1u;
      }
      return table;
    }
    return parse_atom();
  }

  std::vector<uint8_t> parse_atom()
  {
    auto const& t = peek();
    switch ( t.kind )
    {
    case token::kind_t::constant:
      ++cursor_;
      return std::vector<uint8_t>( rows_, t.value );
    case token::kind_t::identifier:
    {
      ++cursor_;
      uint32_t const position = var_of_.at( t.text );
      std::vector<uint8_t> table( rows_ );
      for ( uint64_t r = 0; r < rows_; ++r )
      {
        table[r] = uint8_t( ( r >> ( arity_ - 1 - position ) ) & 1u );
      }
      return table;
    }
    case token::kind_t::lparen:
    {
      ++cursor_;
      auto table = parse_or();
      if ( peek().kind != token::kind_t::rparen )
      {
        throw parse_error( "expected ')'", peek().line, peek().column );
      }
      ++cursor_;
      return table;
    }
    default:
      throw parse_error( "expected an identifier, a constant, or '('", t.line, t.column );
    }
  }

  std::vector<token> const& tokens_;
  std::map<std::string, uint32_t> const& var_of_;
  uint32_t arity_;
  uint64_t rows_;
  size_t cursor_ = 0;
};

} // namespace

boolean_network parse_network( std::string const& text )
{
  struct rule
  {
    token target;
    std::vector<token> tokens;
  };
  std::vector<rule> rules;
  std::map<std::string, uint32_t> node_of;

  uint32_t line_number = 0;
  size_t start = 0;
  while ( start <= text.size() )
  {
    size_t const newline = text.find( '\n', start );
    auto const line_text =
        text.substr( start, newline == std::string::npos ? std::string::npos : newline - start );
    ++line_number;
    auto tokens = lex_line( line_text, line_number );
    if ( tokens.front().kind != token::kind_t::end )
    {
      if ( tokens[0].kind != token::kind_t::identifier )
      {
        throw parse_error( "expected a rule target", tokens[0].line, tokens[0].column );
      }
      if ( tokens[1].kind != token::kind_t::equals )
      {
        throw parse_error( "expected '=' after the rule target", tokens[1].line,
                           tokens[1].column );
      }
      rule r{ tokens[0], std::vector<token>( tokens.begin() + 2, tokens.end() ) };
      if ( !node_of.emplace( r.target.text, uint32_t( rules.size() ) ).second )
      {
        throw parse_error( "duplicate rule for '" + r.target.text + "'", r.target.line,
                           r.target.column );
      }
      rules.push_back( std::move( r ) );
    }
    if ( newline == std::string::npos )
    {
      break;
    }
    start = newline + 1;
  }

  std::vector<node> nodes;
  nodes.reserve( rules.size() );
  for ( auto const& r : rules )
  {
    std::map<std::string, uint32_t> var_of;
    std::vector<uint32_t> inputs;
    for ( auto const& t : r.tokens )
    {
      if ( t.kind == token::kind_t::identifier && !var_of.count( t.text ) )
      {
        auto const it = node_of.find( t.text );
        if ( it == node_of.end() )
        {
          throw parse_error( "'" + t.text + "' is not defined by any rule", t.line, t.column );
        }
        var_of.emplace( t.text, uint32_t( inputs.size() ) );
        inputs.push_back( it->second );
      }
    }
    if ( inputs.size() > 20 )
    {
      throw resource_error( "the rule for '" + r.target.text +
                            "' reads more than 20 distinct variables" );
    }
    uint32_t const arity = uint32_t( inputs.size() );
    rule_parser parser( r.tokens, var_of, arity );
    auto table = parser.parse();
    nodes.push_back(
        { r.target.text, std::move( inputs ), boolean_function( arity, std::move( table ) ) } );
  }
  return boolean_network( std::move( nodes ) );
}

} // namespace boolnet
