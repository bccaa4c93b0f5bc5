#include <doctest.h>

#include <algorithm>
#include <random>

#include <shortpoly/determinantal.hpp>
#include <shortpoly/serialize.hpp>

using namespace shortpoly;

namespace {

Exponent lab(const std::string& s, std::size_t m, std::size_t n) { return parse_exponent_label(s, Shape::grid(m, n)); }

PForm<RationalField> sum_forms(std::size_t m, std::size_t n, std::size_t t, std::uint64_t d,
                               const std::vector<Exponent>& vs)
{
    PForm<RationalField> total{};
    for (const auto& a : vs) {
        total.accumulate(pform_determinantal(m, n, t, d, a));
    }
    return total;
}

// Nonzero iff some permutation matrix of some t-minor fits under alpha.
// Brute force over all placements of t non-attacking rooks.
bool some_rook_placement_fits(std::size_t m, std::size_t n, std::size_t t, const Exponent& alpha)
{
    std::vector<std::size_t> cells(m * n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != t) {
            continue;
        }
        std::vector<int> row_used(m, 0), col_used(n, 0);
        bool ok = true;
        for (std::size_t c = 0; c < m * n && ok; ++c) {
            if ((mask >> c) & 1) {
                ok = alpha[c] >= 1 && !row_used[c / n]++ && !col_used[c % n]++;
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("index subsets and permutations")
{
    CHECK(index_subsets(3, 2) == std::vector<IndexSet>{{0, 1}, {0, 2}, {1, 2}});
    auto ps = permutations({0, 1, 2}, {0, 1, 2});
    REQUIRE(ps.size() == 6);
    CHECK(ps[0].one_line() == std::vector<std::size_t>{1, 2, 3});
    CHECK(ps[0].sign() == 1);
    CHECK(ps[1].one_line() == std::vector<std::size_t>{1, 3, 2});
    CHECK(ps[1].sign() == -1);
    CHECK(ps[3].one_line() == std::vector<std::size_t>{2, 3, 1});
    CHECK(ps[3].sign() == 1);

    // Conjugation by the order-preserving relabelings keeps the sign.
    auto q = permutations({0, 2}, {1, 2});
    REQUIRE(q.size() == 2);
    CHECK(q[1].image(0) == 2);
    CHECK(q[1].image(2) == 1);
    CHECK(q[1].sign() == -1);
    CHECK(q[1].matrix(3, 3) == Exponent{0, 0, 1, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("minors examples")
{
    auto m22 = minors(2, 2, 2);
    REQUIRE(m22.size() == 1);
    CHECK(m22[0].to_string() == "x[1,1]*x[2,2]-x[1,2]*x[2,1]");

    auto m23 = minors(2, 3, 2);
    REQUIRE(m23.size() == 3);
    for (const auto& f : m23.generators()) {
        CHECK(f.size() == 2);
    }
    CHECK(m23[1].to_string() == "x[1,1]*x[2,3]-x[1,3]*x[2,1]");

    auto m33 = minors(3, 3, 3);
    REQUIRE(m33.size() == 1);
    CHECK(m33[0].size() == 6);
    Rational s = 0;
    for (const auto& [e, c] : m33[0].terms()) {
        s += c;
    }
    CHECK(s == 0);

    CHECK_THROWS_AS(minors(2, 3, 3), ParameterError);
    CHECK_THROWS_AS(minors(2, 3, 0), ParameterError);
}

TEST_CASE("property: signs of every minor sum to zero for t >= 2")
{
    for (std::size_t m = 2; m <= 4; ++m) {
        for (std::size_t n = 2; n <= 4; ++n) {
            for (std::size_t t = 2; t <= std::min(m, n); ++t) {
                DeterminantalIdeal ideal(m, n, t);
                for (std::size_t g = 0; g < ideal.minor_indices().size(); ++g) {
                    int total = 0;
                    for (const auto& e : ideal.expansion(g)) {
                        total += e.sigma.sign();
                    }
                    CHECK(total == 0);
                }
            }
        }
    }
}

TEST_CASE("pform_determinantal example at (2,3,2,1)")
{
    auto p = pform_determinantal(2, 3, 2, 1, lab("101|010", 2, 3));
    PForm<RationalField> expected{};
    expected.add({0, lab("001|000", 2, 3)}, Rational(1));
    expected.add({2, lab("100|000", 2, 3)}, Rational(-1));
    CHECK(p.same_form(expected));
    CHECK(p.terms.size() == 2);

    CHECK(pform_determinantal(2, 3, 2, 1, lab("300|000", 2, 3)).is_zero());
    CHECK_THROWS_AS(pform_determinantal(2, 3, 2, 1, lab("100|000", 2, 3)), ParameterError);
}

TEST_CASE("exactly 30 of the 56 forms are nonzero at (2,3,2,1)")
{
    auto basis = monomial_basis(Shape::grid(2, 3), 3);
    REQUIRE(basis.size() == 56);
    std::size_t nonzero = 0, oracle = 0;
    for (const auto& a : basis) {
        bool nz = !pform_determinantal(2, 3, 2, 1, a).is_zero();
        bool expect = some_rook_placement_fits(2, 3, 2, a);
        CHECK(nz == expect);
        nonzero += nz;
        oracle += expect;
    }
    CHECK(nonzero == 30);
    CHECK(oracle == 30);
}

TEST_CASE("property: specialization agrees with the generic construction")
{
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (std::size_t t = 1; t <= std::min(m, n); ++t) {
                for (std::uint64_t d = 0; d <= 1; ++d) {
                    auto generic = build_pforms(minors(m, n, t), t + d);
                    for (const auto& p : generic) {
                        CHECK(pform_determinantal(m, n, t, d, p.alpha).same_form(p));
                    }
                }
            }
        }
    }
}

TEST_CASE("relation graph at (2,3,2,1)")
{
    auto g = relation_graph(2, 3, 2, 1);
    CHECK(g.vertices.size() == 30);
    auto a = g.index_of(lab("101|010", 2, 3));
    auto b = g.index_of(lab("110|001", 2, 3));
    auto c = g.index_of(lab("011|100", 2, 3));
    CHECK(g.has_edge(a, b));
    CHECK(g.has_edge(b, c));
    CHECK(g.has_edge(a, c));
    CHECK_FALSE(g.has_edge(a, a));

    // Edge iff the forms share a y-variable.
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        auto pi = pform_determinantal(2, 3, 2, 1, g.vertices[i]);
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            auto pj = pform_determinantal(2, 3, 2, 1, g.vertices[j]);
            bool share = std::any_of(pi.terms.begin(), pi.terms.end(),
                                     [&](const auto& kv) { return pj.terms.count(kv.first) > 0; });
            CHECK(g.has_edge(i, j) == share);
        }
    }

    auto comp = g.components();
    auto triangle = std::find_if(comp.begin(), comp.end(),
                                 [&](const auto& cc) { return std::find(cc.begin(), cc.end(), a) != cc.end(); });
    REQUIRE(triangle != comp.end());
    CHECK(triangle->size() == 3);
}

TEST_CASE("relation graph at (2,2,2,0)")
{
    auto g = relation_graph(2, 2, 2, 0);
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 1);
}

TEST_CASE("DOT output")
{
    auto dot = to_dot(relation_graph(2, 2, 2, 0));
    CHECK(dot == "graph relations {\n  v0 [label=\"10|01\"];\n  v1 [label=\"01|10\"];\n  v0 -- v1;\n}\n");
    auto big = to_dot(relation_graph(2, 3, 2, 1));
    CHECK(big.find("label=\"101|010\"") != std::string::npos);
}

TEST_CASE("bfs_relation reproduces the three-term relation")
{
    auto beta = lab("101|010", 2, 3);
    auto r = bfs_relation(2, 3, 2, 1, beta);
    CHECK(r.members.front() == beta);
    std::vector<Exponent> got = r.members;
    std::sort(got.begin(), got.end());
    std::vector<Exponent> expected{beta, lab("110|001", 2, 3), lab("011|100", 2, 3)};
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    CHECK(sum_forms(2, 3, 2, 1, r.members).is_zero());
    for (const auto& pr : r.pairings) {
        CHECK(pr.sigma != pr.tau);
    }
}

TEST_CASE("bfs_relation from every vertex at (2,3,2,1) sums to zero")
{
    auto g = relation_graph(2, 3, 2, 1);
    auto comps = g.components();
    for (const auto& beta : g.vertices) {
        auto r = bfs_relation(2, 3, 2, 1, beta);
        // Unit coefficients: p_beta = -(sum of the others).
        CHECK(sum_forms(2, 3, 2, 1, r.members).is_zero());
        auto bi = g.index_of(beta);
        for (const auto& comp : comps) {
            if (std::find(comp.begin(), comp.end(), bi) == comp.end()) {
                continue;
            }
            for (const auto& a : r.members) {
                CHECK(std::find(comp.begin(), comp.end(), g.index_of(a)) != comp.end());
            }
        }
    }
}

TEST_CASE("each component of the (2,3,2,d) graphs carries a relation")
{
    for (std::uint64_t d = 0; d <= 1; ++d) {
        auto g = relation_graph(2, 3, 2, d);
        for (const auto& comp : g.components()) {
            auto r = bfs_relation(2, 3, 2, d, g.vertices[comp.front()]);
            CHECK(sum_forms(2, 3, 2, d, r.members).is_zero());
            std::vector<std::size_t> idx;
            for (const auto& a : r.members) {
                idx.push_back(g.index_of(a));
            }
            std::sort(idx.begin(), idx.end());
            CHECK(idx == comp);
        }
    }
}

TEST_CASE("bfs_relation with a random forbidden set at (3,3,3,1)")
{
    auto g = relation_graph(3, 3, 3, 1);
    auto basis = monomial_basis(Shape::grid(3, 3), 4);
    for (unsigned seed = 0; seed < 50; ++seed) {
        std::mt19937 rng(seed);
        auto beta = g.vertices[rng() % g.vertices.size()];
        std::set<Exponent> forbidden;
        while (forbidden.size() < 3) {
            auto a = basis[rng() % basis.size()];
            if (!(a == beta)) {
                forbidden.insert(a);
            }
        }
        auto r = bfs_relation(3, 3, 3, 1, beta, forbidden);
        CHECK(sum_forms(3, 3, 3, 1, r.members).is_zero());
        for (const auto& a : r.members) {
            CHECK(forbidden.count(a) == 0);
        }
    }
}

TEST_CASE("bfs_relation preconditions")
{
    auto beta = lab("101|010", 2, 3);
    CHECK_THROWS_AS(bfs_relation(2, 3, 2, 1, beta, {beta}), ParameterError);
    CHECK_THROWS_AS(bfs_relation(2, 3, 2, 1, beta, {lab("110|001", 2, 3), lab("011|100", 2, 3)}), ParameterError);
    CHECK_THROWS_AS(bfs_relation(2, 3, 2, 1, lab("300|000", 2, 3)), ParameterError);
}

TEST_CASE("bfs_relation reports failure when the only partner is forbidden")
{
    // Two vertices sharing one variable: forbidding the partner leaves no
    // admissible tau.
    CHECK_THROWS_AS(bfs_relation(2, 2, 2, 0, lab("10|01", 2, 2), {lab("01|10", 2, 2)}), RelationFailure);
}

TEST_CASE("relation JSON")
{
    auto r = bfs_relation(2, 3, 2, 1, lab("101|010", 2, 3));
    auto j = relation_to_json(r, Shape::grid(2, 3));
    CHECK(j["beta"] == "101|010");
    CHECK(j["members"].size() == 3);
}

TEST_CASE("theorem_bound")
{
    CHECK(theorem_bound(1) == 1);
    CHECK(theorem_bound(2) == 2);
    CHECK(theorem_bound(3) == 4);
    CHECK(theorem_bound(4) == 13);
    CHECK(factorial(5) == 120);
}
