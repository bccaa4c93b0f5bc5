#pragma once

// The column matroid of a representation matrix.  Ground-set elements are
// 1-based labels in column order; for a coefficient matrix these are the
// positions of the monomials in the global order, loops included.
//
// Enumerations are brute force over subsets of the non-loop elements with a
// rank table filled by depth-first incremental elimination, so they are
// limited to a small number of non-loops (16 by default).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <shortpoly/linalg.hpp>
#include <shortpoly/pforms.hpp>

namespace shortpoly {

using Label = std::size_t;
using LabelSet = std::vector<Label>;

/// "134" when every label is a single digit, "{1,12,13}" otherwise.
std::string format_label_set(const LabelSet& s);

class MatroidLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

class ZeroRankError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct BasesAndCircuits {
    std::vector<LabelSet> bases;
    std::vector<LabelSet> circuits;
};

template <class F>
class ColumnMatroid {
public:
    static constexpr std::size_t default_limit = 16;

    explicit ColumnMatroid(const Matrix<F>& representation, std::size_t limit = default_limit)
        : limit_(limit), ground_(representation.cols())
    {
        auto ech = row_reduce(representation);
        reduced_ = std::move(ech.reduced);
        rank_ = ech.rank();
        for (std::size_t j = 0; j < ground_; ++j) {
            if (reduced_.column_is_zero(j)) {
                loops_.push_back(j + 1);
            } else {
                non_loops_.push_back(j);
            }
        }
    }

    static ColumnMatroid from_coefficients(const CoefficientMatrix<F>& cm, std::size_t limit = default_limit)
    {
        return ColumnMatroid(cm.matrix, limit);
    }

    std::size_t ground_size() const { return ground_; }
    std::size_t rank() const { return rank_; }
    const LabelSet& loops() const { return loops_; }
    std::size_t non_loop_count() const { return non_loops_.size(); }

    std::size_t subset_rank(const LabelSet& labels) const
    {
        std::vector<std::size_t> cols;
        for (auto l : labels) {
            check_label(l);
            cols.push_back(l - 1);
        }
        return shortpoly::rank(reduced_.select_columns(cols));
    }

    LabelSet closure(const LabelSet& labels) const
    {
        auto r = subset_rank(labels);
        LabelSet out;
        for (Label l = 1; l <= ground_; ++l) {
            LabelSet with = labels;
            with.push_back(l);
            if (std::find(labels.begin(), labels.end(), l) != labels.end() || subset_rank(with) == r) {
                out.push_back(l);
            }
        }
        return out;
    }

    BasesAndCircuits enumerate_bases_circuits() const
    {
        auto table = rank_table();
        const std::size_t n = non_loops_.size();
        BasesAndCircuits out;
        for (auto l : loops_) {
            out.circuits.push_back({l});
        }
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            auto size = static_cast<std::size_t>(std::popcount(mask));
            if (size == rank_ && table[mask] == rank_) {
                out.bases.push_back(labels_of(mask));
            }
            if (size > 0 && std::size_t{table[mask]} + 1 == size) {
                bool minimal = true;
                for (std::size_t b = 0; b < n && minimal; ++b) {
                    if ((mask >> b) & 1u) {
                        minimal = table[mask & ~(1u << b)] == size - 1;
                    }
                }
                if (minimal) {
                    out.circuits.push_back(labels_of(mask));
                }
            }
        }
        std::sort(out.bases.begin(), out.bases.end());
        std::sort(out.circuits.begin(), out.circuits.end());
        return out;
    }

    /// Maximal non-spanning flats.  Each contains every loop.
    std::vector<LabelSet> hyperplanes() const
    {
        auto table = rank_table();
        const std::size_t n = non_loops_.size();
        std::vector<LabelSet> out;
        if (rank_ == 0) {
            return out;
        }
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::size_t{table[mask]} + 1 != rank_) {
                continue;
            }
            bool closed = true;
            for (std::size_t b = 0; b < n && closed; ++b) {
                if (!((mask >> b) & 1u)) {
                    closed = table[mask | (1u << b)] == rank_;
                }
            }
            if (closed) {
                auto h = labels_of(mask);
                h.insert(h.end(), loops_.begin(), loops_.end());
                std::sort(h.begin(), h.end());
                out.push_back(std::move(h));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// |ground| minus the largest hyperplane: the fewest terms of a nonzero
    /// vector in the row space.
    std::size_t shortness_via_hyperplanes() const
    {
        if (rank_ == 0) {
            throw ZeroRankError("matroid has rank 0 (zero component)");
        }
        std::size_t largest = 0;
        for (const auto& h : hyperplanes()) {
            largest = std::max(largest, h.size());
        }
        return ground_ - largest;
    }

private:
    void check_label(Label l) const
    {
        if (l < 1 || l > ground_) {
            throw std::out_of_range("label " + std::to_string(l) + " outside the ground set");
        }
    }

    LabelSet labels_of(std::uint32_t mask) const
    {
        LabelSet out;
        for (std::size_t b = 0; b < non_loops_.size(); ++b) {
            if ((mask >> b) & 1u) {
                out.push_back(non_loops_[b] + 1);
            }
        }
        return out;
    }

    struct Echelon {
        std::vector<std::vector<typename F::value_type>> rows;
        std::vector<std::size_t> pivots;
    };

    // Adds column `col` of the reduced representation; returns whether it
    // was independent of the current span.
    bool extend(Echelon& ech, std::size_t col) const
    {
        const F& f = reduced_.field();
        auto v = reduced_.column(col);
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            auto factor = v[ech.pivots[i]];
            if (f.is_zero(factor)) {
                continue;
            }
            for (std::size_t k = 0; k < v.size(); ++k) {
                f.sub_mul(v[k], factor, ech.rows[i][k]);
            }
        }
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!f.is_zero(v[k])) {
                auto inv = f.inv(v[k]);
                for (auto& x : v) {
                    x = f.mul(x, inv);
                }
                ech.rows.push_back(std::move(v));
                ech.pivots.push_back(k);
                return true;
            }
        }
        return false;
    }

    void fill(std::vector<std::uint8_t>& table, std::uint32_t mask, std::size_t next, const Echelon& ech) const
    {
        table[mask] = static_cast<std::uint8_t>(ech.rows.size());
        for (std::size_t b = next; b < non_loops_.size(); ++b) {
            Echelon child = ech;
            extend(child, non_loops_[b]);
            fill(table, mask | (1u << b), b + 1, child);
        }
    }

    std::vector<std::uint8_t> rank_table() const
    {
        if (non_loops_.size() > std::min<std::size_t>(limit_, 30)) {
            throw MatroidLimitError("matroid has " + std::to_string(non_loops_.size())
                                    + " non-loop elements; enumeration limit is " + std::to_string(limit_));
        }
        std::vector<std::uint8_t> table(std::size_t{1} << non_loops_.size(), 0);
        fill(table, 0, 0, Echelon{});
        return table;
    }

    std::size_t limit_;
    std::size_t ground_;
    Matrix<F> reduced_;
    std::size_t rank_ = 0;
    LabelSet loops_;
    std::vector<std::size_t> non_loops_;
};

inline std::string format_label_set(const LabelSet& s)
{
    bool compact = std::all_of(s.begin(), s.end(), [](Label l) { return l < 10; });
    std::string out = compact ? "" : "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!compact && i > 0) {
            out += ',';
        }
        out += std::to_string(s[i]);
    }
    if (!compact) {
        out += '}';
    }
    if (compact && s.empty()) {
        out = "{}";
    }
    return out;
}

} // namespace shortpoly
