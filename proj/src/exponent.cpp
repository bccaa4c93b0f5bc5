#include <shortpoly/exponent.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace shortpoly {

std::string Shape::variable_name(std::size_t index) const
{
    if (grid_) {
        return "x[" + std::to_string(index / cols_ + 1) + "," + std::to_string(index % cols_ + 1) + "]";
    }
    return "x" + std::to_string(index + 1);
}

std::string Shape::header() const
{
    if (grid_) {
        return "shape grid " + std::to_string(rows_) + " " + std::to_string(cols_);
    }
    return "shape flat " + std::to_string(cols_);
}

Exponent::Exponent(std::vector<entry_type> entries) : entries_(std::move(entries))
{
    for (auto v : entries_) {
        degree_ += v;
        if (degree_ > max_degree) {
            throw std::overflow_error("exponent degree exceeds " + std::to_string(max_degree));
        }
    }
}

void Exponent::set(std::size_t i, entry_type value)
{
    std::uint64_t d = degree_ - entries_[i] + value;
    if (d > max_degree) {
        throw std::overflow_error("exponent degree exceeds " + std::to_string(max_degree));
    }
    entries_[i] = value;
    degree_ = d;
}

bool Exponent::divides(const Exponent& other) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > other.entries_[i]) {
            return false;
        }
    }
    return true;
}

Exponent Exponent::operator+(const Exponent& other) const
{
    if (other.size() != size()) {
        throw std::invalid_argument("exponent size mismatch");
    }
    if (degree_ + other.degree_ > max_degree) {
        throw std::overflow_error("exponent degree exceeds " + std::to_string(max_degree));
    }
    Exponent out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] += other.entries_[i];
    }
    out.degree_ += other.degree_;
    return out;
}

Exponent Exponent::operator-(const Exponent& other) const
{
    if (other.size() != size() || !other.divides(*this)) {
        throw std::domain_error("exponent difference is negative");
    }
    Exponent out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] -= other.entries_[i];
    }
    out.degree_ -= other.degree_;
    return out;
}

bool precedes(const Exponent& a, const Exponent& b)
{
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    return a.entries() > b.entries();
}

std::size_t ExponentHash::operator()(const Exponent& e) const
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : e.entries()) {
        h ^= v;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

void fill_basis(std::vector<Exponent::entry_type>& cur, std::size_t pos, std::uint64_t remaining,
                std::vector<Exponent>& out)
{
    if (pos + 1 == cur.size()) {
        cur[pos] = static_cast<Exponent::entry_type>(remaining);
        out.emplace_back(cur);
        return;
    }
    for (std::uint64_t v = remaining + 1; v-- > 0;) {
        cur[pos] = static_cast<Exponent::entry_type>(v);
        fill_basis(cur, pos + 1, remaining - v, out);
    }
    cur[pos] = 0;
}

} // namespace

std::uint64_t monomial_count(std::size_t variables, std::uint64_t d)
{
    if (variables == 0) {
        return d == 0 ? 1 : 0;
    }
    // C(v-1+d, d) built up multiplicatively; each prefix is itself a binomial.
    unsigned __int128 c = 1;
    for (std::uint64_t k = 1; k <= d; ++k) {
        c = c * (variables - 1 + k) / k;
        if (c > UINT64_MAX) {
            throw std::overflow_error("monomial count overflows");
        }
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<Exponent> monomial_basis(const Shape& shape, std::uint64_t d)
{
    if (d > max_degree) {
        throw std::overflow_error("degree exceeds " + std::to_string(max_degree));
    }
    std::vector<Exponent> out;
    std::size_t v = shape.variables();
    if (v == 0) {
        if (d == 0) {
            out.emplace_back(0);
        }
        return out;
    }
    out.reserve(monomial_count(v, d));
    std::vector<Exponent::entry_type> cur(v, 0);
    fill_basis(cur, 0, d, out);
    return out;
}

std::string exponent_label(const Exponent& e, const Shape& shape)
{
    bool wide = std::any_of(e.entries().begin(), e.entries().end(), [](auto v) { return v > 9; });
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) {
            if (shape.is_grid() && i % shape.cols() == 0) {
                out += '|';
            } else if (wide) {
                out += ',';
            }
        }
        out += std::to_string(e[i]);
    }
    return out;
}

Exponent parse_exponent_label(const std::string& label, const Shape& shape)
{
    std::vector<Exponent::entry_type> entries;
    std::vector<std::string> rows;
    std::stringstream ss(label);
    std::string row;
    while (std::getline(ss, row, '|')) {
        rows.push_back(row);
    }
    if (rows.size() != (shape.is_grid() ? shape.rows() : 1)) {
        throw std::invalid_argument("label '" + label + "' does not match " + shape.header());
    }
    for (const auto& r : rows) {
        if (r.find(',') != std::string::npos) {
            std::stringstream rs(r);
            std::string cell;
            while (std::getline(rs, cell, ',')) {
                if (cell.empty() || !std::all_of(cell.begin(), cell.end(), ::isdigit)) {
                    throw std::invalid_argument("bad label entry in '" + label + "'");
                }
                entries.push_back(static_cast<Exponent::entry_type>(std::stoul(cell)));
            }
        } else {
            for (char c : r) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    throw std::invalid_argument("bad label character in '" + label + "'");
                }
                entries.push_back(static_cast<Exponent::entry_type>(c - '0'));
            }
        }
    }
    if (entries.size() != shape.variables()) {
        throw std::invalid_argument("label '" + label + "' does not match " + shape.header());
    }
    return Exponent(std::move(entries));
}

} // namespace shortpoly
