#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigfit {

/// Two coefficient sets (or a coefficient set and a grid) disagree on degree,
/// node count, or parity convention.
class IncompatibleLayout : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A CSV line could not be parsed. `line` is 1-based within the file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Abscissae in a two-column samples CSV do not lie on the equidistant grid.
/// `row` is the 0-based index of the worst offender, `deviation` its distance
/// from the expected node.
class GridMismatch : public std::runtime_error {
public:
    GridMismatch(const std::string& message, std::size_t row, double deviation)
        : std::runtime_error(message), row_(row), deviation_(deviation) {}

    std::size_t row() const { return row_; }
    double deviation() const { return deviation_; }

private:
    std::size_t row_;
    double deviation_;
};

/// A file could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace trigfit
