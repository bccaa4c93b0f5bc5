#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace shortpoly {

/// Largest total degree accepted anywhere in the library.
inline constexpr std::uint64_t max_degree = 1'000'000;

/// Variable layout: x1..xn (flat) or x[i,j] with an m x n grid.  Grid
/// exponents are stored flattened row-major.
class Shape {
public:
    static Shape flat(std::size_t n) { return Shape(false, 1, n); }
    static Shape grid(std::size_t m, std::size_t n) { return Shape(true, m, n); }

    bool is_grid() const { return grid_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t variables() const { return rows_ * cols_; }

    /// "x3" or "x[2,1]" for the flattened index (0-based).
    std::string variable_name(std::size_t index) const;
    /// "shape flat 3" / "shape grid 2 3"
    std::string header() const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    Shape(bool grid, std::size_t rows, std::size_t cols) : grid_(grid), rows_(rows), cols_(cols) {}

    bool grid_;
    std::size_t rows_;
    std::size_t cols_;
};

/// A multi-index.  The degree is cached and kept in sync by every mutator.
class Exponent {
public:
    using entry_type = std::uint32_t;

    Exponent() = default;
    explicit Exponent(std::size_t variables) : entries_(variables, 0) {}
    explicit Exponent(std::vector<entry_type> entries);
    Exponent(std::initializer_list<entry_type> entries) : Exponent(std::vector<entry_type>(entries)) {}

    std::size_t size() const { return entries_.size(); }
    std::uint64_t degree() const { return degree_; }
    entry_type operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<entry_type>& entries() const { return entries_; }

    void set(std::size_t i, entry_type value);

    /// Entrywise <=.
    bool divides(const Exponent& other) const;

    Exponent operator+(const Exponent& other) const;
    /// Requires divides(*this) of `other`; throws std::domain_error otherwise.
    Exponent operator-(const Exponent& other) const;

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.entries_ == b.entries_; }
    friend auto operator<=>(const Exponent& a, const Exponent& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<entry_type> entries_;
    std::uint64_t degree_ = 0;
};

/// The global monomial order: higher degree first, then lexicographically
/// larger first.  In a fixed degree over two variables this lists
/// (4,0),(3,1),(2,2),(1,3),(0,4).
bool precedes(const Exponent& a, const Exponent& b);

struct MonomialOrder {
    bool operator()(const Exponent& a, const Exponent& b) const { return precedes(a, b); }
};

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const;
};

/// All exponents of degree d in the global order.
std::vector<Exponent> monomial_basis(const Shape& shape, std::uint64_t d);

/// C(v+d-1, d), checked against overflow.
std::uint64_t monomial_count(std::size_t variables, std::uint64_t d);

/// Flattened text form; grid rows separated by '|' ("101|010").  Entries
/// above 9 switch the whole label to comma-separated entries ("10,0|0,1").
std::string exponent_label(const Exponent& e, const Shape& shape);
Exponent parse_exponent_label(const std::string& label, const Shape& shape);

} // namespace shortpoly
