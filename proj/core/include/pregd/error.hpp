#pragma once

#include <stdexcept>
#include <string>

namespace pregd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
  public:
	using Error::Error;
};

/// An argument outside the documented domain, such as β = 0 where β ≠ 0 is required.
class InvalidArgument : public Error
{
  public:
	using Error::Error;
};

class ContainmentError : public Error
{
  public:
	using Error::Error;
};

class UnknownOp : public Error
{
  public:
	using Error::Error;
};

class UnknownIdentity : public Error
{
  public:
	using Error::Error;
};

class MissingAuxMap : public Error
{
  public:
	using Error::Error;
};

class MissingMaps : public Error
{
  public:
	using Error::Error;
};

class MissingOps : public Error
{
  public:
	using Error::Error;
};

/// An input algebra fails the identity system an operation requires.
class IdentityError : public Error
{
  public:
	using Error::Error;
};

class CentralInputError : public Error
{
  public:
	using Error::Error;
};

class WindowMismatch : public Error
{
  public:
	using Error::Error;
};

/// No degree cap was given and none of V = V*V, V⋆V, V◁V, V▷V holds.
class SpanningConditionError : public Error
{
  public:
	using Error::Error;
};

/// Inconclusive outcome of the unit search, not a failure.
class NoUnitFound : public Error
{
  public:
	using Error::Error;
};

class TrivialAlgebra : public Error
{
  public:
	using Error::Error;
};

/// Malformed input file or value; `where` carries a location such as a JSON path.
class ParseError : public Error
{
  public:
	ParseError(std::string const &where, std::string const &what)
	    : Error(where.empty() ? what : where + ": " + what), where_(where)
	{}
	std::string const &where() const { return where_; }

  private:
	std::string where_;
};

} // namespace pregd
