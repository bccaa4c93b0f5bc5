#pragma once

// Determinantal ideals I_t generated by the t-minors of a generic m x n
// matrix, with the combinatorial description of their p-forms:
//
//     p_alpha = sum_{(I,J)} sum_{sigma in S_{I,J}, E_sigma <= alpha} sgn(sigma) y_{(I,J), alpha - E_sigma}
//
// Index sets are 0-based internally and printed 1-based.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <shortpoly/pforms.hpp>

namespace shortpoly {

using IndexSet = std::vector<std::size_t>;

/// All t-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t t);

/// A bijection sigma: I -> J.  word()[k] is the position in J of
/// sigma(I[k]); the sign is the sign of that word as a permutation of
/// {0..t-1}, i.e. sigma conjugated by the order-preserving relabelings.
class Permutation {
public:
    Permutation(IndexSet rows, IndexSet cols, std::vector<std::size_t> word);

    const IndexSet& rows() const { return rows_; }
    const IndexSet& cols() const { return cols_; }
    const std::vector<std::size_t>& word() const { return word_; }
    std::size_t size() const { return word_.size(); }

    /// sigma(i) for a row i in I (0-based).
    std::size_t image(std::size_t row) const;
    int sign() const { return sign_; }
    /// One-line notation: the 1-based column sigma(I[k]) for each k.
    std::vector<std::size_t> one_line() const;
    /// E_sigma as a flattened m x n exponent.
    Exponent matrix(std::size_t m, std::size_t n) const;

private:
    IndexSet rows_;
    IndexSet cols_;
    std::vector<std::size_t> word_;
    int sign_;
};

/// S_{I,J} with words in lexicographic order.
std::vector<Permutation> permutations(const IndexSet& rows, const IndexSet& cols);

struct MinorIndex {
    IndexSet rows;
    IndexSet cols;
};

/// Thrown for m, n, t, d outside the supported range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The t-minors of an m x n matrix with their permutation expansions cached.
/// Generators are ordered by (I, J) lexicographically.
class DeterminantalIdeal {
public:
    struct Expansion {
        Permutation sigma;
        Exponent matrix;
    };

    DeterminantalIdeal(std::size_t m, std::size_t n, std::size_t t);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    std::size_t minor_size() const { return t_; }
    Shape shape() const { return Shape::grid(m_, n_); }

    const std::vector<MinorIndex>& minor_indices() const { return minors_; }
    /// Permutations of generator g in lexicographic word order.
    const std::vector<Expansion>& expansion(std::size_t g) const { return expansions_[g]; }

    QGenerators generators() const;

    /// The p-form of alpha from the permutation formula.
    PForm<RationalField> pform(const Exponent& alpha) const;

private:
    std::size_t m_, n_, t_;
    std::vector<MinorIndex> minors_;
    std::vector<std::vector<Expansion>> expansions_;
};

/// All C(m,t)*C(n,t) t-minors as a generator system on grid(m, n).
QGenerators minors(std::size_t m, std::size_t n, std::size_t t);

/// Requires |alpha| = t + d.
PForm<RationalField> pform_determinantal(std::size_t m, std::size_t n, std::size_t t, std::uint64_t d,
                                         const Exponent& alpha);

/// Vertices are the alpha with p_alpha != 0 in the global order; an edge
/// joins two vertices whose forms share a y-variable.
struct RelationGraph {
    Shape shape = Shape::flat(0);
    std::vector<Exponent> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j, sorted
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t index_of(const Exponent& alpha) const;
    bool has_edge(std::size_t a, std::size_t b) const;
    /// Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<std::size_t>> components() const;
};

RelationGraph relation_graph(std::size_t m, std::size_t n, std::size_t t, std::uint64_t d);

std::string to_dot(const RelationGraph& graph);

/// One matched occurrence: y appears in `from` via sigma and in `to` via
/// tau, with opposite signs.
struct Pairing {
    YVar y;
    Exponent from;
    std::vector<std::size_t> sigma; // one-line
    Exponent to;
    std::vector<std::size_t> tau;   // one-line
};

struct Relation {
    Exponent beta;
    std::vector<Exponent> members; // discovery order, members[0] == beta
    std::vector<Pairing> pairings;
};

/// Raised when no admissible partner exists for some occurrence.
class RelationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds V with beta in V, V \ {beta} avoiding `forbidden`, and
/// sum_{alpha in V} p_alpha = 0.  Each y-occurrence of a vertex is matched
/// with an occurrence of opposite sign: a reciprocal match if one was made
/// already, otherwise the lexicographically smallest opposite-sign tau whose
/// target is allowed and whose occurrence is still unmatched.  The result is
/// checked symbolically before it is returned.
Relation bfs_relation(std::size_t m, std::size_t n, std::size_t t, std::uint64_t d, const Exponent& beta,
                      const std::set<Exponent>& forbidden = {});

/// floor(t!/2) + 1
std::uint64_t theorem_bound(std::size_t t);

std::uint64_t factorial(std::size_t t);

} // namespace shortpoly
