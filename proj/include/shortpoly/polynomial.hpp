#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <shortpoly/exponent.hpp>
#include <shortpoly/field.hpp>

namespace shortpoly {

/// Sparse polynomial over F.  Zero coefficients are never stored, so the
/// key set is exactly the support.  Terms iterate in the global order.
template <class F>
class Polynomial {
public:
    using field_type = F;
    using value_type = typename F::value_type;
    using term_map = std::map<Exponent, value_type, MonomialOrder>;

    Polynomial() : shape_(Shape::flat(0)) {}
    explicit Polynomial(Shape shape, F field = F{}) : shape_(shape), field_(std::move(field)) {}

    static Polynomial constant(Shape shape, const value_type& c, F field = F{})
    {
        Polynomial p(shape, std::move(field));
        p.add_term(Exponent(shape.variables()), c);
        return p;
    }
    static Polynomial monomial(Shape shape, Exponent e, const value_type& c, F field = F{})
    {
        Polynomial p(shape, std::move(field));
        p.add_term(std::move(e), c);
        return p;
    }

    const Shape& shape() const { return shape_; }
    const F& field() const { return field_; }
    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::vector<Exponent> support() const
    {
        std::vector<Exponent> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            out.push_back(e);
        }
        return out;
    }

    value_type coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    /// Adds c*x^e, dropping the term if it cancels.
    void add_term(Exponent e, const value_type& c)
    {
        if (e.size() != shape_.variables()) {
            throw std::invalid_argument("exponent does not match polynomial shape");
        }
        if (field_.is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    /// Total degree of the leading term; nullopt for zero.
    std::optional<std::uint64_t> degree() const
    {
        if (terms_.empty()) {
            return std::nullopt;
        }
        return terms_.begin()->first.degree();
    }

    bool is_homogeneous() const
    {
        if (terms_.empty()) {
            return true;
        }
        auto d = terms_.begin()->first.degree();
        for (const auto& [e, c] : terms_) {
            if (e.degree() != d) {
                return false;
            }
        }
        return true;
    }

    Polynomial& operator+=(const Polynomial& other)
    {
        check_compatible(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    Polynomial& operator-=(const Polynomial& other)
    {
        check_compatible(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, field_.neg(c));
        }
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial scaled(const value_type& s) const
    {
        Polynomial out(shape_, field_);
        if (field_.is_zero(s)) {
            return out;
        }
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), e, field_.mul(c, s));
        }
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check_compatible(b);
        Polynomial out(a.shape_, a.field_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_term(ea + eb, a.field_.mul(ca, cb));
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.shape_ == b.shape_ && a.terms_ == b.terms_;
    }

    /// Parser-compatible text: "x1^2+x1*x2-7/2*x2^2", "0" for zero.
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            bool constant = e.degree() == 0;
            bool negative = field_.is_negative(c);
            value_type mag = negative ? field_.neg(c) : c;
            if (negative) {
                out += '-';
            } else if (!first) {
                out += '+';
            }
            first = false;
            bool unit = field_.is_one(mag);
            if (!unit || constant) {
                out += field_.to_display(mag);
            }
            bool need_star = !unit;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (need_star) {
                    out += '*';
                }
                need_star = true;
                out += shape_.variable_name(i);
                if (e[i] > 1) {
                    out += '^' + std::to_string(e[i]);
                }
            }
        }
        return out;
    }

private:
    void check_compatible(const Polynomial& other) const
    {
        if (!(shape_ == other.shape_)) {
            throw std::invalid_argument("polynomial shapes differ");
        }
    }

    Shape shape_;
    F field_{};
    term_map terms_;
};

/// Reduce (or copy) coefficients into another field.
template <class To, class From>
Polynomial<To> change_field(const Polynomial<From>& p, const To& field)
{
    Polynomial<To> out(p.shape(), field);
    for (const auto& [e, c] : p.terms()) {
        if constexpr (std::is_same_v<From, RationalField>) {
            out.add_term(e, field.from_rational(c));
        } else {
            static_assert(std::is_same_v<From, To>, "only Q -> F conversions are defined");
            out.add_term(e, c);
        }
    }
    return out;
}

/// Homogeneous nonzero forms f_1..f_r over one shape.  Degrees may differ.
template <class F>
class GeneratorSystem {
public:
    GeneratorSystem() = default;
    GeneratorSystem(Shape shape, std::vector<Polynomial<F>> gens, F field = F{})
        : shape_(shape), field_(std::move(field)), gens_(std::move(gens))
    {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (!(g.shape() == shape_)) {
                throw std::invalid_argument("generator " + std::to_string(i + 1) + " has a different shape");
            }
            if (g.is_zero()) {
                throw std::invalid_argument("generator " + std::to_string(i + 1) + " is zero");
            }
            if (!g.is_homogeneous()) {
                throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not homogeneous");
            }
        }
    }

    const Shape& shape() const { return shape_; }
    const F& field() const { return field_; }
    std::size_t size() const { return gens_.size(); }
    const Polynomial<F>& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    std::uint64_t degree(std::size_t i) const { return *gens_[i].degree(); }

    std::optional<std::uint64_t> min_degree() const
    {
        std::optional<std::uint64_t> d;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (!d || degree(i) < *d) {
                d = degree(i);
            }
        }
        return d;
    }

private:
    Shape shape_ = Shape::flat(0);
    F field_{};
    std::vector<Polynomial<F>> gens_;
};

template <class To, class From>
GeneratorSystem<To> change_field(const GeneratorSystem<From>& g, const To& field)
{
    std::vector<Polynomial<To>> gens;
    for (const auto& p : g.generators()) {
        auto q = change_field(p, field);
        gens.push_back(std::move(q));
    }
    return GeneratorSystem<To>(g.shape(), std::move(gens), field);
}

using QPolynomial = Polynomial<RationalField>;
using QGenerators = GeneratorSystem<RationalField>;

} // namespace shortpoly
