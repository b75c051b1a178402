/*! \file errors.hpp
 *  \brief Exception types thrown by the library
 */

#pragma once

#include <stdexcept>
#include <string>

namespace boolnet
{

/*! \brief Base class of every error thrown by this library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Undefined operation for the given function (zero function, constant, non-NCF input). */
class domain_error : public error
{
public:
  using error::error;
};

/*! \brief Truth table length, arity, or dimension mismatch. */
class arity_error : public error
{
public:
  using error::error;
};

/*! \brief A restriction does not partition the variable set. */
class partition_error : public error
{
public:
  using error::error;
};

/*! \brief A placement is not legal for the layer structure it targets. */
class placement_error : public error
{
public:
  using error::error;
};

/*! \brief A cut policy cannot supply a value for a severed input. */
class policy_error : public error
{
public:
  using error::error;
};

/*! \brief Component order violated: cyclic or misdirected acyclic graph data. */
class order_error : public error
{
public:
  using error::error;
};

/*! \brief Declared cross-component dependence with no connection realizing it. */
class contradiction_error : public error
{
public:
  using error::error;
};

/*! \brief A function does not belong to the requested graphical family. */
class family_error : public error
{
public:
  using error::error;
};

/*! \brief Node name resolution failed. */
class mapping_error : public error
{
public:
  using error::error;
};

/*! \brief Brute-force guard exceeded or requested object too large to materialize. */
class resource_error : public error
{
public:
  using error::error;
};

/*! \brief Malformed source document.  Positions are 1-based; 0 means unknown. */
class parse_error : public error
{
public:
  parse_error( std::string const& what, int line = 0, int column = 0 )
      : error( position_prefix( line, column ) + what ), line_( line ), column_( column )
  {
  }

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string position_prefix( int line, int column )
  {
    if ( line <= 0 )
    {
      return "";
    }
    return "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": ";
  }

  int line_;
  int column_;
};

} // namespace boolnet
