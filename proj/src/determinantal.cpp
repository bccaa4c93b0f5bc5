#include <shortpoly/determinantal.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace shortpoly {

namespace {

void check_params(std::size_t m, std::size_t n, std::size_t t)
{
    if (t < 1 || t > m || t > n) {
        throw ParameterError("need 1 <= t <= min(m, n), got m=" + std::to_string(m) + " n=" + std::to_string(n)
                             + " t=" + std::to_string(t));
    }
    if (t > 12) {
        throw ParameterError("t=" + std::to_string(t) + " is too large to expand minors");
    }
}

int word_sign(const std::vector<std::size_t>& word)
{
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (word[i] > word[j]) {
                sign = -sign;
            }
        }
    }
    return sign;
}

void collect_subsets(std::size_t n, std::size_t t, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out)
{
    if (cur.size() == t) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (t - cur.size()) <= n; ++i) {
        cur.push_back(i);
        collect_subsets(n, t, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t t)
{
    std::vector<IndexSet> out;
    IndexSet cur;
    collect_subsets(n, t, 0, cur, out);
    return out;
}

Permutation::Permutation(IndexSet rows, IndexSet cols, std::vector<std::size_t> word)
    : rows_(std::move(rows)), cols_(std::move(cols)), word_(std::move(word))
{
    if (rows_.size() != cols_.size() || word_.size() != rows_.size()) {
        throw std::invalid_argument("permutation index sets differ in size");
    }
    std::vector<bool> seen(word_.size(), false);
    for (auto w : word_) {
        if (w >= word_.size() || seen[w]) {
            throw std::invalid_argument("permutation word is not a bijection");
        }
        seen[w] = true;
    }
    sign_ = word_sign(word_);
}

std::size_t Permutation::image(std::size_t row) const
{
    auto it = std::find(rows_.begin(), rows_.end(), row);
    if (it == rows_.end()) {
        throw std::out_of_range("row not in permutation domain");
    }
    return cols_[word_[static_cast<std::size_t>(it - rows_.begin())]];
}

std::vector<std::size_t> Permutation::one_line() const
{
    std::vector<std::size_t> out;
    for (auto w : word_) {
        out.push_back(cols_[w] + 1);
    }
    return out;
}

Exponent Permutation::matrix(std::size_t m, std::size_t n) const
{
    Exponent e(m * n);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k] >= m || cols_[word_[k]] >= n) {
            throw std::out_of_range("permutation does not fit the matrix");
        }
        e.set(rows_[k] * n + cols_[word_[k]], 1);
    }
    return e;
}

std::vector<Permutation> permutations(const IndexSet& rows, const IndexSet& cols)
{
    std::vector<std::size_t> word(rows.size());
    std::iota(word.begin(), word.end(), std::size_t{0});
    std::vector<Permutation> out;
    do {
        out.emplace_back(rows, cols, word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

DeterminantalIdeal::DeterminantalIdeal(std::size_t m, std::size_t n, std::size_t t) : m_(m), n_(n), t_(t)
{
    check_params(m, n, t);
    for (const auto& rows : index_subsets(m, t)) {
        for (const auto& cols : index_subsets(n, t)) {
            minors_.push_back({rows, cols});
            std::vector<Expansion> exp;
            for (auto& sigma : permutations(rows, cols)) {
                auto e = sigma.matrix(m, n);
                exp.push_back({std::move(sigma), std::move(e)});
            }
            expansions_.push_back(std::move(exp));
        }
    }
}

QGenerators DeterminantalIdeal::generators() const
{
    std::vector<QPolynomial> gens;
    for (const auto& exp : expansions_) {
        QPolynomial f(shape());
        for (const auto& [sigma, e] : exp) {
            f.add_term(e, Rational(sigma.sign()));
        }
        gens.push_back(std::move(f));
    }
    return QGenerators(shape(), std::move(gens));
}

PForm<RationalField> DeterminantalIdeal::pform(const Exponent& alpha) const
{
    if (alpha.size() != m_ * n_) {
        throw ParameterError("exponent does not have m*n entries");
    }
    if (alpha.degree() < t_) {
        throw ParameterError("exponent degree is below t");
    }
    PForm<RationalField> p{alpha, {}, {}};
    for (std::size_t g = 0; g < expansions_.size(); ++g) {
        for (const auto& [sigma, e] : expansions_[g]) {
            if (e.divides(alpha)) {
                p.add({g, alpha - e}, Rational(sigma.sign()));
            }
        }
    }
    return p;
}

QGenerators minors(std::size_t m, std::size_t n, std::size_t t)
{
    return DeterminantalIdeal(m, n, t).generators();
}

PForm<RationalField> pform_determinantal(std::size_t m, std::size_t n, std::size_t t, std::uint64_t d,
                                         const Exponent& alpha)
{
    DeterminantalIdeal ideal(m, n, t);
    if (alpha.degree() != t + d) {
        throw ParameterError("exponent degree " + std::to_string(alpha.degree()) + " differs from t+d = "
                             + std::to_string(t + d));
    }
    return ideal.pform(alpha);
}

std::size_t RelationGraph::index_of(const Exponent& alpha) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), alpha, MonomialOrder{});
    if (it == vertices.end() || !(*it == alpha)) {
        throw std::out_of_range("exponent is not a vertex of the relation graph");
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

bool RelationGraph::has_edge(std::size_t a, std::size_t b) const
{
    const auto& adj = adjacency.at(a);
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<std::vector<std::size_t>> RelationGraph::components() const
{
    std::vector<int> seen(vertices.size(), 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < vertices.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<std::size_t> comp;
        std::deque<std::size_t> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (auto w : adjacency[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

RelationGraph relation_graph(std::size_t m, std::size_t n, std::size_t t, std::uint64_t d)
{
    DeterminantalIdeal ideal(m, n, t);
    RelationGraph g;
    g.shape = ideal.shape();
    std::map<YVar, std::vector<std::size_t>, YVarOrder> occurrences;
    for (auto& alpha : monomial_basis(g.shape, t + d)) {
        auto p = ideal.pform(alpha);
        if (p.is_zero()) {
            continue;
        }
        std::size_t v = g.vertices.size();
        for (const auto& [y, c] : p.terms) {
            occurrences[y].push_back(v);
        }
        g.vertices.push_back(std::move(alpha));
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [y, vs] : occurrences) {
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                edges.emplace(std::min(vs[a], vs[b]), std::max(vs[a], vs[b]));
            }
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    g.adjacency.assign(g.vertices.size(), {});
    for (const auto& [a, b] : g.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    for (auto& adj : g.adjacency) {
        std::sort(adj.begin(), adj.end());
    }
    return g;
}

std::string to_dot(const RelationGraph& graph)
{
    std::ostringstream out;
    out << "graph relations {\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        out << "  v" << v << " [label=\"" << exponent_label(graph.vertices[v], graph.shape) << "\"];\n";
    }
    for (const auto& [a, b] : graph.edges) {
        out << "  v" << a << " -- v" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

Relation bfs_relation(std::size_t m, std::size_t n, std::size_t t, std::uint64_t d, const Exponent& beta,
                      const std::set<Exponent>& forbidden)
{
    DeterminantalIdeal ideal(m, n, t);
    if (beta.size() != m * n || beta.degree() != t + d) {
        throw ParameterError("beta must be an m x n exponent of degree t+d");
    }
    if (forbidden.count(beta)) {
        throw ParameterError("beta is in the forbidden set");
    }
    if (forbidden.size() > theorem_bound(t) - 1) {
        throw ParameterError("forbidden set larger than floor(t!/2)");
    }
    auto beta_form = ideal.pform(beta);
    if (beta_form.is_zero()) {
        throw ParameterError("p_beta is zero");
    }

    std::map<Exponent, PForm<RationalField>> forms;
    auto form_of = [&](const Exponent& alpha) -> const PForm<RationalField>& {
        auto it = forms.find(alpha);
        if (it == forms.end()) {
            it = forms.emplace(alpha, ideal.pform(alpha)).first;
        }
        return it->second;
    };
    forms.emplace(beta, beta_form);

    // matched[y][alpha] = partner of the y-occurrence in p_alpha.
    std::map<YVar, std::map<Exponent, Exponent>, YVarOrder> matched;
    auto is_matched = [&](const YVar& y, const Exponent& alpha) {
        auto it = matched.find(y);
        return it != matched.end() && it->second.count(alpha) > 0;
    };

    Relation rel;
    rel.beta = beta;
    std::set<Exponent> in_v{beta};
    rel.members.push_back(beta);
    std::deque<Exponent> queue{beta};

    auto one_line_of = [&](std::size_t g, const Exponent& e) {
        for (const auto& ex : ideal.expansion(g)) {
            if (ex.matrix == e) {
                return ex.sigma.one_line();
            }
        }
        throw std::logic_error("no permutation with the given matrix");
    };

    while (!queue.empty()) {
        Exponent alpha = queue.front();
        queue.pop_front();
        const auto form = form_of(alpha);
        for (const auto& [y, coeff] : form.terms) {
            if (is_matched(y, alpha)) {
                continue;
            }
            const int sigma_sign = sgn(coeff);
            std::optional<Exponent> target;
            const Permutation* tau = nullptr;
            for (const auto& ex : ideal.expansion(y.generator)) {
                if (ex.sigma.sign() == sigma_sign) {
                    continue;
                }
                Exponent candidate = y.gamma + ex.matrix;
                if (candidate == beta || forbidden.count(candidate) || is_matched(y, candidate)) {
                    continue;
                }
                target = std::move(candidate);
                tau = &ex.sigma;
                break;
            }
            if (!target) {
                throw RelationFailure("no admissible opposite-sign partner for y_(" + std::to_string(y.generator + 1)
                                      + "," + exponent_label(y.gamma, ideal.shape()) + ") in p_"
                                      + exponent_label(alpha, ideal.shape()));
            }
            matched[y][alpha] = *target;
            matched[y][*target] = alpha;
            rel.pairings.push_back({y, alpha, one_line_of(y.generator, alpha - y.gamma), *target, tau->one_line()});
            if (in_v.insert(*target).second) {
                rel.members.push_back(*target);
                queue.push_back(*target);
            }
        }
    }

    PForm<RationalField> sum{beta, {}, {}};
    for (const auto& alpha : rel.members) {
        sum.accumulate(form_of(alpha));
    }
    if (!sum.is_zero()) {
        throw std::logic_error("relation construction produced a nonzero sum");
    }
    return rel;
}

std::uint64_t factorial(std::size_t t)
{
    if (t > 20) {
        throw ParameterError("t! overflows 64 bits");
    }
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= t; ++k) {
        f *= k;
    }
    return f;
}

std::uint64_t theorem_bound(std::size_t t)
{
    if (t < 1) {
        throw ParameterError("t must be at least 1");
    }
    return factorial(t) / 2 + 1;
}

} // namespace shortpoly
