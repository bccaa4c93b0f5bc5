#pragma once

// Exact coefficient fields: the rationals (GMP) and prime fields F_p.
//
// A field is a small value object that owns the arithmetic; elements are
// plain values (mpq_class or uint32_t residues).  Every algorithm in the
// library is written against this interface so the same code runs over Q
// and over F_p.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace shortpoly {

using Rational = mpq_class;

/// Parses "3", "-7/2", "+4" into a canonical rational.  Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Always "num/den", the wire format for every exported number.
std::string rational_to_string(const Rational& q);

class RationalField {
public:
    using value_type = Rational;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_rational(const Rational& q) const { return q; }
    value_type from_int(long v) const { return value_type(v); }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const;
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

    // a <- a - f*b, the elimination kernel.
    void sub_mul(value_type& a, const value_type& f, const value_type& b) const { a -= f * b; }

    std::string to_string(const value_type& a) const { return rational_to_string(a); }
    // Short human form: "3", "-7/2".
    std::string to_display(const value_type& a) const { return a.get_str(); }
    bool is_one(const value_type& a) const { return a == 1; }
    bool is_minus_one(const value_type& a) const { return a == -1; }
    bool is_negative(const value_type& a) const { return sgn(a) < 0; }

    std::string name() const { return "rational"; }
    std::uint32_t characteristic() const { return 0; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime(std::uint64_t n);

class PrimeField {
public:
    using value_type = std::uint32_t;

    static constexpr std::uint32_t default_modulus = 32003;

    explicit PrimeField(std::uint32_t p = default_modulus);

    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    // Throws std::domain_error when p divides the denominator.
    value_type from_rational(const Rational& q) const;
    value_type from_int(long v) const;

    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }

    value_type add(value_type a, value_type b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(std::uint64_t(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    void sub_mul(value_type& a, value_type f, value_type b) const { a = sub(a, mul(f, b)); }

    std::string to_string(value_type a) const { return std::to_string(a) + "/1"; }
    std::string to_display(value_type a) const { return std::to_string(a); }
    bool is_one(value_type a) const { return a == 1; }
    bool is_minus_one(value_type a) const { return a == p_ - 1; }
    bool is_negative(value_type) const { return false; }

    std::string name() const { return "prime:" + std::to_string(p_); }
    std::uint32_t characteristic() const { return p_; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

/// Session-level field selection.
using FieldChoice = std::variant<RationalField, PrimeField>;

/// "rational", "prime" (p = 32003) or "prime:<p>".
FieldChoice parse_field_choice(const std::string& text);

} // namespace shortpoly
