#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qorder {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class AxiomKind { not_a_lattice, non_associative, unit_failure, non_distributive, trivial };

const char* to_string(AxiomKind kind);

class AxiomError : public Error {
public:
    AxiomError(AxiomKind kind, const std::string& detail)
        : Error(std::string("AxiomError(") + to_string(kind) + "): " + detail), kind_(kind) {}
    AxiomKind kind() const { return kind_; }

private:
    AxiomKind kind_;
};

class UnsupportedSize : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed its configured cap.
class SizeCap : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EntryOutOfDiagonal : public Error {
public:
    EntryOutOfDiagonal(std::size_t x, std::size_t y, const std::string& what)
        : Error(what), x_(x), y_(y) {}
    std::size_t x() const { return x_; }
    std::size_t y() const { return y_; }

private:
    std::size_t x_, y_;
};

enum class PreorderFailure { not_in_diagonal, not_reflexive, not_transitive };

const char* to_string(PreorderFailure kind);

// Raised by make_ordered; the witness is the first offending index triple in
// label order (z is unused except for transitivity failures).
class PreorderError : public Error {
public:
    PreorderError(PreorderFailure kind, std::size_t x, std::size_t y, std::size_t z, const std::string& what)
        : Error(what), kind_(kind), x_(x), y_(y), z_(z) {}
    PreorderFailure kind() const { return kind_; }
    std::size_t x() const { return x_; }
    std::size_t y() const { return y_; }
    std::size_t z() const { return z_; }

private:
    PreorderFailure kind_;
    std::size_t x_, y_, z_;
};

class InvalidMap : public Error {
public:
    using Error::Error;
};

class InvalidScalar : public Error {
public:
    using Error::Error;
};

class NotHoehlePreorder : public Error {
public:
    using Error::Error;
};

class NotAdjoint : public Error {
public:
    using Error::Error;
};

}  // namespace qorder
