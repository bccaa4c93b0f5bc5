#pragma once

// Linear forms p_alpha.
//
// For generators f_1..f_r and a target degree D, the cofactor space has
// coordinates y_{i,gamma} with |gamma| = D - deg(f_i).  The form p_alpha
// reads off the x^alpha coefficient of sum_i g_i f_i:
//
//     p_alpha = sum_i sum_{beta + gamma = alpha} f_{i,beta} y_{i,gamma}.
//
// The coefficient matrix stacks these forms as columns (rows = y-variables,
// columns = monomials of degree D); its row space is the graded component
// I^(D) written in the monomial basis.

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <shortpoly/linalg.hpp>
#include <shortpoly/polynomial.hpp>

namespace shortpoly {

/// y_{i,gamma}; `generator` is 0-based.
struct YVar {
    std::size_t generator = 0;
    Exponent gamma;

    friend bool operator==(const YVar&, const YVar&) = default;
};

/// (generator, gamma) with gamma in the global monomial order.
struct YVarOrder {
    bool operator()(const YVar& a, const YVar& b) const
    {
        if (a.generator != b.generator) {
            return a.generator < b.generator;
        }
        return precedes(a.gamma, b.gamma);
    }
};

template <class F>
struct PForm {
    using value_type = typename F::value_type;

    Exponent alpha;
    std::map<YVar, value_type, YVarOrder> terms;
    F field{};

    bool is_zero() const { return terms.empty(); }

    value_type coefficient(const YVar& y) const
    {
        auto it = terms.find(y);
        return it == terms.end() ? field.zero() : it->second;
    }

    void add(const YVar& y, const value_type& c)
    {
        if (field.is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms.try_emplace(y, c);
        if (!inserted) {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) {
                terms.erase(it);
            }
        }
    }

    /// Adds the terms of `other`; alpha is kept.  Used to sum forms.
    PForm& accumulate(const PForm& other)
    {
        for (const auto& [y, c] : other.terms) {
            add(y, c);
        }
        return *this;
    }

    /// Same linear form (alpha is not compared).
    bool same_form(const PForm& other) const { return terms == other.terms; }
};

/// Row labels of the coefficient matrix: generator-major, gamma in the
/// global order.  Generators of degree above D contribute nothing.
template <class F>
std::vector<YVar> y_variables(const GeneratorSystem<F>& gens, std::uint64_t degree)
{
    std::vector<YVar> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens.degree(i) > degree) {
            continue;
        }
        for (auto& gamma : monomial_basis(gens.shape(), degree - gens.degree(i))) {
            out.push_back({i, std::move(gamma)});
        }
    }
    return out;
}

/// p_alpha for every alpha of degree D, in basis order.  Zero forms are kept.
template <class F>
std::vector<PForm<F>> build_pforms(const GeneratorSystem<F>& gens, std::uint64_t degree)
{
    const F& f = gens.field();
    std::vector<PForm<F>> out;
    for (auto& alpha : monomial_basis(gens.shape(), degree)) {
        PForm<F> p{alpha, {}, f};
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens.degree(i) > degree) {
                continue;
            }
            for (const auto& [beta, c] : gens[i].terms()) {
                if (beta.divides(alpha)) {
                    p.add({i, alpha - beta}, c);
                }
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

template <class F>
struct CoefficientMatrix {
    std::vector<YVar> rows;
    std::vector<Exponent> columns;
    Matrix<F> matrix;

    /// Column j read back as a linear form.
    PForm<F> column_form(std::size_t j) const
    {
        PForm<F> p{columns[j], {}, matrix.field()};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            p.add(rows[i], matrix(i, j));
        }
        return p;
    }

    std::size_t column_of(const Exponent& alpha) const
    {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] == alpha) {
                return j;
            }
        }
        throw std::out_of_range("exponent is not a column label");
    }
};

/// Entry [(i,gamma), alpha] = f_{i, alpha-gamma}.  Built by scattering each
/// shifted generator x^gamma f_i into its row.
template <class F>
CoefficientMatrix<F> coefficient_matrix(const GeneratorSystem<F>& gens, std::uint64_t degree)
{
    CoefficientMatrix<F> cm;
    cm.rows = y_variables(gens, degree);
    cm.columns = monomial_basis(gens.shape(), degree);
    cm.matrix = Matrix<F>(gens.field(), cm.rows.size(), cm.columns.size());
    std::unordered_map<Exponent, std::size_t, ExponentHash> index;
    for (std::size_t j = 0; j < cm.columns.size(); ++j) {
        index.emplace(cm.columns[j], j);
    }
    for (std::size_t r = 0; r < cm.rows.size(); ++r) {
        const auto& y = cm.rows[r];
        for (const auto& [beta, c] : gens[y.generator].terms()) {
            cm.matrix(r, index.at(beta + y.gamma)) = c;
        }
    }
    return cm;
}

/// dim I^(D): the rank of the coefficient matrix.
template <class F>
std::size_t graded_component_dim(const GeneratorSystem<F>& gens, std::uint64_t degree)
{
    return rank(coefficient_matrix(gens, degree).matrix);
}

/// Polynomial with the given coefficient vector over `columns`.
template <class F>
Polynomial<F> polynomial_from_vector(const Shape& shape, const F& field, std::span<const Exponent> columns,
                                     std::span<const typename F::value_type> v)
{
    Polynomial<F> p(shape, field);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        p.add_term(columns[j], v[j]);
    }
    return p;
}

/// Cofactors g_1..g_r assembled from a vector indexed by `rows`.
template <class F>
std::vector<Polynomial<F>> cofactors_from_vector(const GeneratorSystem<F>& gens, std::span<const YVar> rows,
                                                 std::span<const typename F::value_type> c)
{
    std::vector<Polynomial<F>> g(gens.size(), Polynomial<F>(gens.shape(), gens.field()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        g[rows[i].generator].add_term(rows[i].gamma, c[i]);
    }
    return g;
}

/// sum_i g_i f_i
template <class F>
Polynomial<F> combine(const GeneratorSystem<F>& gens, std::span<const Polynomial<F>> cofactors)
{
    if (cofactors.size() != gens.size()) {
        throw std::invalid_argument("cofactor count does not match generator count");
    }
    Polynomial<F> sum(gens.shape(), gens.field());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        sum += cofactors[i] * gens[i];
    }
    return sum;
}

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// p(g_1..g_r).  Each g_i must be zero or homogeneous of degree
/// deg(p.alpha) - deg(f_i).
template <class F>
typename F::value_type evaluate(const GeneratorSystem<F>& gens, const PForm<F>& p,
                                std::span<const Polynomial<F>> g)
{
    if (g.size() != gens.size()) {
        throw DegreeMismatch("expected " + std::to_string(gens.size()) + " cofactors, got "
                             + std::to_string(g.size()));
    }
    const auto target = p.alpha.degree();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (const auto& [e, c] : g[i].terms()) {
            if (gens.degree(i) > target || e.degree() != target - gens.degree(i)) {
                throw DegreeMismatch("cofactor " + std::to_string(i + 1) + " has the wrong degree");
            }
        }
    }
    const F& f = gens.field();
    auto sum = f.zero();
    for (const auto& [y, c] : p.terms) {
        sum = f.add(sum, f.mul(c, g[y.generator].coefficient(y.gamma)));
    }
    return sum;
}

} // namespace shortpoly
