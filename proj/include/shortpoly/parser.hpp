#pragma once

// Text formats.
//
// Polynomial:  terms joined by '+'/'-'; a term is an optional rational
// coefficient ("3", "7/2") followed by '*'-joined powers.  Variables are
// x<k> (flat) or x[<row>,<col>] (grid), 1-based; a power is var^<k>, k >= 1.
// The '*' between coefficient and first variable may be omitted.
// Whitespace is ignored.
//
// Ideal file:  first line "shape flat <n>" or "shape grid <m> <n>", then
// one generator per line.  Blank lines and lines starting with '#' are
// skipped.

#include <cstddef>
#include <stdexcept>
#include <string>

#include <shortpoly/polynomial.hpp>

namespace shortpoly {

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, unknown_variable, exponent_overflow, zero_polynomial, not_homogeneous, header };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    // 1-based; 0 when the error concerns a whole line.
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

/// Parses one nonzero polynomial.  `line` only labels errors.
QPolynomial parse_polynomial(const std::string& text, const Shape& shape, std::size_t line = 1);

Shape parse_shape_header(const std::string& line, std::size_t line_number = 1);

QGenerators parse_ideal(const std::string& text);
QGenerators read_ideal_file(const std::string& path);

/// Inverse of parse_ideal.
std::string format_ideal(const QGenerators& gens);

} // namespace shortpoly
