#pragma once

// Shortness of a graded component I^(D).
//
// An element with support inside a set T of monomials exists iff deleting
// the columns T from the coefficient matrix drops its rank.  The search
// enumerates candidate supports of size s among the non-loop columns in
// colex order and stops at the first one that works.  Each candidate costs
// one rank test, which is the budget unit.
//
// Rank tests run against the reduced row echelon form E of the coefficient
// matrix (rows = a basis of I^(D)).  A vector cE is supported in T iff c is
// supported on the rows whose pivot lies in T and those rows, restricted to
// the non-pivot columns outside T, are linearly dependent.  That is a rank
// test on at most s rows.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <shortpoly/matroid.hpp>
#include <shortpoly/pforms.hpp>

namespace shortpoly {

struct SearchOptions {
    std::uint64_t budget = 10'000'000; // rank tests
    unsigned threads = 1;
    unsigned random_rounds = 0;       // information-set rounds before exhaustion
    std::uint64_t seed = 0;
    std::size_t matroid_limit = ColumnMatroid<RationalField>::default_limit;
};

/// polynomial = sum_i cofactors[i] * f_i, checked on construction.
template <class F>
struct Witness {
    Polynomial<F> polynomial;
    std::vector<Polynomial<F>> cofactors;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::size_t terms, std::size_t certified_absent_upto, std::uint64_t tests_used)
        : std::runtime_error("rank-test budget exhausted while testing " + std::to_string(terms) + "-term supports"),
          terms_(terms), certified_(certified_absent_upto), tests_(tests_used)
    {
    }

    /// The support size whose search did not finish.
    std::size_t terms() const { return terms_; }
    /// No nonzero element with at most this many terms exists (0: nothing known).
    std::size_t certified_absent_upto() const { return certified_; }
    std::uint64_t tests_used() const { return tests_; }

private:
    std::size_t terms_;
    std::size_t certified_;
    std::uint64_t tests_;
};

class ZeroComponentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(c);
}

struct SupportOutcome {
    enum class Kind { found, absent, budget_exhausted };
    Kind kind = Kind::absent;
    std::vector<std::size_t> support; // column indices, ascending
    std::uint64_t tests = 0;
};

template <class F>
class SupportSearch {
public:
    using value_type = typename F::value_type;

    SupportSearch(const GeneratorSystem<F>& gens, std::uint64_t degree)
        : gens_(gens), degree_(degree), cm_(coefficient_matrix(gens, degree))
    {
        auto ech = row_reduce(cm_.matrix);
        reduced_ = std::move(ech.reduced);
        pivots_ = std::move(ech.pivots);
        pivot_row_.assign(cm_.columns.size(), npos);
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            pivot_row_[pivots_[i]] = i;
        }
        for (std::size_t j = 0; j < cm_.columns.size(); ++j) {
            if (!reduced_.column_is_zero(j)) {
                non_loops_.push_back(j);
                if (pivot_row_[j] == npos) {
                    free_cols_.push_back(j);
                }
            }
        }
    }

    const CoefficientMatrix<F>& coefficients() const { return cm_; }
    std::size_t dimension() const { return pivots_.size(); }
    std::size_t monomials() const { return cm_.columns.size(); }
    const std::vector<std::size_t>& non_loops() const { return non_loops_; }

    /// True iff some nonzero element of I^(D) is supported inside `support`.
    bool admits(std::span<const std::size_t> support) const
    {
        const F& f = reduced_.field();
        std::vector<std::size_t> rows;
        for (auto j : support) {
            if (pivot_row_[j] != npos) {
                rows.push_back(pivot_row_[j]);
            }
        }
        if (rows.empty()) {
            return false;
        }
        // Eliminate the selected rows over the free columns outside the support.
        std::vector<std::vector<value_type>> work;
        work.reserve(rows.size());
        std::vector<std::size_t> cols;
        for (auto j : free_cols_) {
            if (std::find(support.begin(), support.end(), j) == support.end()) {
                cols.push_back(j);
            }
        }
        for (auto r : rows) {
            std::vector<value_type> v;
            v.reserve(cols.size());
            for (auto j : cols) {
                v.push_back(reduced_(r, j));
            }
            work.push_back(std::move(v));
        }
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols.size() && rank < work.size(); ++c) {
            std::size_t p = rank;
            while (p < work.size() && f.is_zero(work[p][c])) {
                ++p;
            }
            if (p == work.size()) {
                continue;
            }
            std::swap(work[p], work[rank]);
            auto inv = f.inv(work[rank][c]);
            for (std::size_t i = rank + 1; i < work.size(); ++i) {
                if (f.is_zero(work[i][c])) {
                    continue;
                }
                auto factor = f.mul(work[i][c], inv);
                for (std::size_t k = c; k < cols.size(); ++k) {
                    f.sub_mul(work[i][k], factor, work[rank][k]);
                }
            }
            ++rank;
        }
        return rank < work.size();
    }

    /// First support of size min(s, #non-loops) in colex order that admits a
    /// nonzero element.  Candidates beyond `budget` are never tested and the
    /// outcome does not depend on `threads`.
    SupportOutcome search(std::size_t s, std::uint64_t budget, unsigned threads = 1) const
    {
        SupportOutcome out;
        const std::size_t n = non_loops_.size();
        if (n == 0 || s == 0) {
            return out;
        }
        const std::size_t k = std::min(s, n);
        const std::uint64_t total = binomial_saturating(n, k);

        // Tops are processed in increasing order; found[a] is the colex rank
        // inside top a of its first hit.
        std::vector<std::optional<std::uint64_t>> found(n);
        std::atomic<std::size_t> next_top{k - 1};
        std::atomic<std::size_t> best_top{n};

        auto worker = [&]() {
            std::vector<std::size_t> cand(k);
            while (true) {
                std::size_t top = next_top.fetch_add(1);
                if (top >= n || top > best_top.load()) {
                    return;
                }
                const std::uint64_t before = binomial_saturating(top, k);
                if (before >= budget) {
                    return;
                }
                const std::uint64_t limit = std::min(binomial_saturating(top, k - 1), budget - before);
                std::vector<std::size_t> low(k - 1);
                std::iota(low.begin(), low.end(), std::size_t{0});
                for (std::uint64_t idx = 0; idx < limit; ++idx) {
                    if (top > best_top.load()) {
                        return;
                    }
                    for (std::size_t i = 0; i + 1 < k; ++i) {
                        cand[i] = non_loops_[low[i]];
                    }
                    cand[k - 1] = non_loops_[top];
                    if (admits(cand)) {
                        found[top] = idx;
                        std::size_t cur = best_top.load();
                        while (top < cur && !best_top.compare_exchange_weak(cur, top)) {
                        }
                        break;
                    }
                    next_colex(low, top);
                }
            }
        };

        unsigned count = std::max(1u, threads);
        if (count == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < count; ++i) {
                pool.emplace_back(worker);
            }
            for (auto& th : pool) {
                th.join();
            }
        }

        for (std::size_t top = k - 1; top < n; ++top) {
            if (!found[top]) {
                continue;
            }
            std::uint64_t index = binomial_saturating(top, k) + *found[top];
            out.kind = SupportOutcome::Kind::found;
            out.tests = index + 1;
            // Recover the candidate from its rank inside the top.
            std::vector<std::size_t> low(k - 1);
            std::iota(low.begin(), low.end(), std::size_t{0});
            for (std::uint64_t i = 0; i < *found[top]; ++i) {
                next_colex(low, top);
            }
            for (auto l : low) {
                out.support.push_back(non_loops_[l]);
            }
            out.support.push_back(non_loops_[top]);
            return out;
        }
        if (total > budget) {
            out.kind = SupportOutcome::Kind::budget_exhausted;
            out.tests = budget;
        } else {
            out.kind = SupportOutcome::Kind::absent;
            out.tests = total;
        }
        return out;
    }

    /// A normalized element supported inside `support` with its cofactors;
    /// the leading coefficient is 1.
    Witness<F> witness_for(std::span<const std::size_t> support) const
    {
        const F& f = cm_.matrix.field();
        auto c = solve_in_row_space(cm_.matrix, support);
        if (!c) {
            throw std::logic_error("support admits no element");
        }
        auto v = row_times<F>(*c, cm_.matrix);
        auto lead = std::find_if(v.begin(), v.end(), [&](const auto& x) { return !f.is_zero(x); });
        auto scale = f.inv(*lead);
        for (auto& x : *c) {
            x = f.mul(x, scale);
        }
        for (auto& x : v) {
            x = f.mul(x, scale);
        }
        Witness<F> w{polynomial_from_vector<F>(gens_.shape(), f, cm_.columns, v),
                     cofactors_from_vector<F>(gens_, cm_.rows, *c)};
        if (!(combine<F>(gens_, w.cofactors) == w.polynomial)) {
            throw std::logic_error("witness does not match its cofactors");
        }
        return w;
    }

    /// Information-set sampling: row-reduce with pivots taken in a random
    /// column order and keep the sparsest row seen.  Returns its support.
    std::optional<std::vector<std::size_t>> sample_sparse_support(unsigned rounds, std::uint64_t seed) const
    {
        if (rounds == 0 || pivots_.empty()) {
            return std::nullopt;
        }
        const F& f = reduced_.field();
        std::mt19937_64 rng(seed);
        std::optional<std::vector<std::size_t>> best;
        std::vector<std::size_t> order = non_loops_;
        for (unsigned round = 0; round < rounds; ++round) {
            std::shuffle(order.begin(), order.end(), rng);
            auto ech = row_reduce_in_order(reduced_, order);
            for (std::size_t i = 0; i < ech.rank(); ++i) {
                std::vector<std::size_t> supp;
                for (std::size_t j = 0; j < reduced_.cols(); ++j) {
                    if (!f.is_zero(ech.reduced(i, j))) {
                        supp.push_back(j);
                    }
                }
                if (!best || supp.size() < best->size()) {
                    best = std::move(supp);
                }
            }
        }
        return best;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Colex successor of a sorted subset of {0..bound-1}.
    static void next_colex(std::vector<std::size_t>& c, std::size_t bound)
    {
        const std::size_t k = c.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t ceiling = i + 1 < k ? c[i + 1] : bound;
            if (c[i] + 1 < ceiling) {
                ++c[i];
                for (std::size_t j = 0; j < i; ++j) {
                    c[j] = j;
                }
                return;
            }
        }
    }

    GeneratorSystem<F> gens_;
    std::uint64_t degree_;
    CoefficientMatrix<F> cm_;
    Matrix<F> reduced_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::size_t> non_loops_;
    std::vector<std::size_t> free_cols_;
};

/// Some nonzero element of I^(D) with at most s terms, or nullopt.  Throws
/// BudgetExceeded if the candidate supports do not fit in the budget.
template <class F>
std::optional<Witness<F>> exists_s_short(const GeneratorSystem<F>& gens, std::uint64_t degree, std::size_t s,
                                         const SearchOptions& opts = {})
{
    if (s == 0) {
        throw std::invalid_argument("s must be positive");
    }
    SupportSearch<F> search(gens, degree);
    auto outcome = search.search(s, opts.budget, opts.threads);
    switch (outcome.kind) {
    case SupportOutcome::Kind::found:
        return search.witness_for(outcome.support);
    case SupportOutcome::Kind::absent:
        return std::nullopt;
    case SupportOutcome::Kind::budget_exhausted:
        break;
    }
    throw BudgetExceeded(s, 0, outcome.tests);
}

/// |M_D| + 1 - dim I^(D): an upper bound on the shortness of I^(D).
template <class F>
std::uint64_t dim_bound(const GeneratorSystem<F>& gens, std::uint64_t degree)
{
    auto cm = coefficient_matrix(gens, degree);
    auto r = rank(cm.matrix);
    if (r == 0) {
        throw ZeroComponentError("component of degree " + std::to_string(degree) + " is zero");
    }
    return cm.columns.size() + 1 - r;
}

/// min over y-variables of the number of forms p_alpha containing it.  Each
/// y_{i,gamma} with n occurrences gives the n-term element x^gamma f_i, so
/// this bounds the shortness from above.
template <class F>
std::uint64_t occurrence_bound(const GeneratorSystem<F>& gens, std::uint64_t degree)
{
    auto cm = coefficient_matrix(gens, degree);
    const F& f = gens.field();
    std::optional<std::uint64_t> best;
    for (std::size_t i = 0; i < cm.matrix.rows(); ++i) {
        std::uint64_t count = 0;
        for (std::size_t j = 0; j < cm.matrix.cols(); ++j) {
            count += f.is_zero(cm.matrix(i, j)) ? 0 : 1;
        }
        if (count > 0 && (!best || count < *best)) {
            best = count;
        }
    }
    if (!best) {
        throw ZeroComponentError("component of degree " + std::to_string(degree) + " is zero");
    }
    return *best;
}

enum class ShortnessStatus { exact, lower_bound, zero_component };

template <class F>
struct ShortnessReport {
    std::uint64_t degree = 0;
    std::size_t monomials = 0;
    std::size_t dimension = 0;
    std::size_t non_loops = 0;
    ShortnessStatus status = ShortnessStatus::zero_component;
    std::size_t shortness = 0;          // exact: the shortness
    std::size_t absent_upto = 0;        // no element with <= this many terms
    bool budget_exhausted = false;
    std::optional<std::size_t> upper_bound;
    std::optional<Witness<F>> witness;
    std::optional<std::uint64_t> dim_bound;
    std::optional<std::uint64_t> occurrence_bound;
    std::optional<std::size_t> hyperplane_shortness;
    std::uint64_t rank_tests = 0;
    std::string field;
    bool certified = true; // false over F_p: shortness may depend on the characteristic
};

/// Increasing-s search.  exact(s) is only claimed after every smaller
/// support size was refuted exhaustively.
template <class F>
ShortnessReport<F> shortness(const GeneratorSystem<F>& gens, std::uint64_t degree, std::size_t max_s,
                             const SearchOptions& opts = {})
{
    if (max_s == 0) {
        throw std::invalid_argument("max_s must be positive");
    }
    SupportSearch<F> search(gens, degree);
    ShortnessReport<F> rep;
    rep.degree = degree;
    rep.monomials = search.monomials();
    rep.dimension = search.dimension();
    rep.non_loops = search.non_loops().size();
    rep.field = gens.field().name();
    rep.certified = gens.field().characteristic() == 0;
    if (rep.dimension == 0) {
        rep.status = ShortnessStatus::zero_component;
        return rep;
    }
    rep.dim_bound = rep.monomials + 1 - rep.dimension;
    rep.occurrence_bound = occurrence_bound(gens, degree);
    if (rep.non_loops <= opts.matroid_limit) {
        rep.hyperplane_shortness =
            ColumnMatroid<F>(search.coefficients().matrix, opts.matroid_limit).shortness_via_hyperplanes();
    }

    std::optional<std::vector<std::size_t>> sampled = search.sample_sparse_support(opts.random_rounds, opts.seed);
    if (sampled) {
        rep.upper_bound = sampled->size();
    }

    std::uint64_t budget = opts.budget;
    for (std::size_t s = 1; s <= max_s; ++s) {
        if (sampled && s >= sampled->size()) {
            // Everything below the sampled size was refuted.
            rep.status = ShortnessStatus::exact;
            rep.witness = search.witness_for(*sampled);
            rep.shortness = rep.witness->polynomial.size();
            return rep;
        }
        auto outcome = search.search(s, budget, opts.threads);
        rep.rank_tests += outcome.tests;
        budget -= std::min(budget, outcome.tests);
        if (outcome.kind == SupportOutcome::Kind::found) {
            rep.status = ShortnessStatus::exact;
            rep.witness = search.witness_for(outcome.support);
            rep.shortness = rep.witness->polynomial.size();
            return rep;
        }
        if (outcome.kind == SupportOutcome::Kind::budget_exhausted) {
            rep.status = ShortnessStatus::lower_bound;
            rep.budget_exhausted = true;
            return rep;
        }
        rep.absent_upto = s;
    }
    rep.status = ShortnessStatus::lower_bound;
    return rep;
}

} // namespace shortpoly
