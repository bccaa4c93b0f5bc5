#include <shortpoly/field.hpp>

#include <cctype>

namespace shortpoly {

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string rational_to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalField::value_type RationalField::inv(const value_type& a) const
{
    if (sgn(a) == 0) {
        throw std::domain_error("division by zero");
    }
    return 1 / a;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    // Products of two residues must fit in 64 bits.
    if (!is_prime(p) || p >= (1u << 31)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
}

PrimeField::value_type PrimeField::from_int(long v) const
{
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const
{
    mpz_class pm(p_);
    mpz_class n = q.get_num() % pm;
    mpz_class d = q.get_den() % pm;
    if (n < 0) {
        n += pm;
    }
    if (d == 0) {
        throw std::domain_error("denominator of " + rational_to_string(q) + " vanishes mod "
                                + std::to_string(p_));
    }
    return div(static_cast<value_type>(n.get_ui()), static_cast<value_type>(d.get_ui()));
}

PrimeField::value_type PrimeField::inv(value_type a) const
{
    if (a == 0) {
        throw std::domain_error("division by zero");
    }
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) {
        t += p_;
    }
    return static_cast<value_type>(t);
}

FieldChoice parse_field_choice(const std::string& text)
{
    if (text == "rational" || text == "Q") {
        return RationalField{};
    }
    if (text == "prime") {
        return PrimeField{};
    }
    if (text.rfind("prime:", 0) == 0) {
        std::string digits = text.substr(6);
        if (!all_digits(digits) || digits.size() > 10) {
            throw std::invalid_argument("bad prime modulus in '" + text + "'");
        }
        unsigned long long p = std::stoull(digits);
        if (p > 0xffffffffull) {
            throw std::invalid_argument("prime modulus too large in '" + text + "'");
        }
        return PrimeField{static_cast<std::uint32_t>(p)};
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected rational, prime or prime:<p>)");
}

} // namespace shortpoly
