#ifndef ONEPOINT_ERRORS_HPP
#define ONEPOINT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onepoint
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

class DimensionMismatch : public Error
{
public:
    using Error::Error;
};

class RankDeficient : public Error
{
public:
    using Error::Error;
};

// Operation requires a pointed semigroup.
class NotPointed : public Error
{
public:
    using Error::Error;
};

// A vector that must lie in the semigroup (or its lattice) does not.
class NotInSemigroup : public Error
{
public:
    using Error::Error;
};

// Homogeneous derivation would leave C[S]; carries the offending Hilbert basis element.
class ClosureViolation : public Error
{
public:
    ClosureViolation(const std::string &what, std::string offending)
        : Error(what), m_offending(std::move(offending))
    {
    }
    const std::string &offending() const { return m_offending; }

private:
    std::string m_offending;
};

// Generator images violate the semigroup relations.
class InconsistentImages : public Error
{
public:
    using Error::Error;
};

class CarrierMismatch : public Error
{
public:
    using Error::Error;
};

// A completion tower whose consecutive levels do not agree.
class IncompatibleTower : public Error
{
public:
    IncompatibleTower(const std::string &what, long level) : Error(what), m_level(level) {}
    long level() const { return m_level; }

private:
    long m_level;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          m_line(line), m_column(column)
    {
    }
    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }

private:
    std::size_t m_line;
    std::size_t m_column;
};

} // namespace onepoint

#endif
