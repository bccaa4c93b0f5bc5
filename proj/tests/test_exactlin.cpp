#include <doctest.h>

#include <random>

#include <shortpoly/linalg.hpp>

using namespace shortpoly;

namespace {

Matrix<RationalField> qmat(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<Rational>> q;
    for (const auto& r : rows) {
        q.emplace_back(r.begin(), r.end());
    }
    return Matrix<RationalField>::from_rows({}, q);
}

Matrix<RationalField> random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix<RationalField> m({}, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

} // namespace

TEST_CASE("rational parsing is canonical")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(rational_to_string(Rational(5)) == "5/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
}

TEST_CASE("prime field arithmetic")
{
    PrimeField f(7);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.from_rational(Rational(-1, 2)) == 3);
    CHECK(f.from_int(-1) == 6);
    CHECK_THROWS_AS(PrimeField(8), std::invalid_argument);
    CHECK_THROWS_AS(f.from_rational(Rational(1, 7)), std::domain_error);
    CHECK(PrimeField().modulus() == 32003);
    for (std::uint32_t a = 1; a < 7; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("field choice parsing")
{
    CHECK(std::holds_alternative<RationalField>(parse_field_choice("rational")));
    CHECK(std::get<PrimeField>(parse_field_choice("prime")).modulus() == 32003);
    CHECK(std::get<PrimeField>(parse_field_choice("prime:101")).modulus() == 101);
    CHECK_THROWS(parse_field_choice("prime:100"));
    CHECK_THROWS(parse_field_choice("reals"));
}

TEST_CASE("rank examples")
{
    CHECK(rank(Matrix<RationalField>({}, 0, 0)) == 0);
    CHECK(rank(Matrix<RationalField>::identity({}, 3)) == 3);
    CHECK(rank(qmat({{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}})) == 3);
    CHECK(rank(qmat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix<RationalField>({}, 3, 4)) == 0);
}

TEST_CASE("row reduce picks the first nonzero pivot in column order")
{
    auto ech = row_reduce(qmat({{0, 2, 4}, {1, 1, 1}, {1, 2, 3}}));
    CHECK(ech.rank() == 2);
    CHECK(ech.pivots == std::vector<std::size_t>{0, 1});
    CHECK(ech.reduced(0, 2) == -1);
    CHECK(ech.reduced(1, 2) == 2);
}

TEST_CASE("left kernel examples")
{
    CHECK(left_kernel_basis(Matrix<RationalField>::identity({}, 2)).empty());

    auto k = left_kernel_basis(qmat({{1, 1}, {1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(k[0][0] != 0);

    // Principal-ideal coefficient matrix on columns (4,0),(2,2),(1,3).  By
    // hand: rows (1,1,0),(0,1,1),(0,1,1); rows 2 and 3 coincide and the 2x2
    // minor [[1,1],[0,1]] is 1, so the kernel is spanned by (0,1,-1).
    auto restricted = qmat({{1, 1, 0}, {0, 1, 1}, {0, 1, 1}});
    auto kr = left_kernel_basis(restricted);
    REQUIRE(kr.size() == 1);
    CHECK(kr[0][0] == 0);
    CHECK(kr[0][1] == -kr[0][2]);
}

TEST_CASE("solve_in_row_space examples")
{
    auto principal = qmat({{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}});
    std::vector<std::size_t> all{0, 1, 2, 3, 4};
    CHECK(solve_in_row_space(principal, all).has_value());
    CHECK_FALSE(solve_in_row_space(Matrix<RationalField>::identity({}, 3), std::vector<std::size_t>{}).has_value());

    // {(4,0),(1,3)}: the binomial x^4 - x y^3, cofactor x^2 - xy.
    std::vector<std::size_t> supp{0, 3};
    auto c = solve_in_row_space(principal, supp);
    REQUIRE(c.has_value());
    auto v = row_times<RationalField>(*c, principal);
    CHECK(v[1] == 0);
    CHECK(v[2] == 0);
    CHECK(v[4] == 0);
    CHECK(v[0] == -v[3]);
    CHECK((*c)[0] == -(*c)[1]);
    CHECK((*c)[2] == 0);

    // No element is supported on a single monomial.
    for (std::size_t j = 0; j < 5; ++j) {
        std::vector<std::size_t> one{j};
        CHECK_FALSE(solve_in_row_space(principal, one).has_value());
    }
}

TEST_CASE("property: rank(M) == rank(M^T)")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto m = random_int_matrix(rng, r, c, -2, 2);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("property: solve_in_row_space returns c with cM nonzero and supported inside")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = 1 + rng() % 4, c = 1 + rng() % 6;
        auto m = random_int_matrix(rng, r, c, -1, 1);
        std::vector<std::size_t> supp;
        for (std::size_t j = 0; j < c; ++j) {
            if (rng() % 2) {
                supp.push_back(j);
            }
        }
        auto sol = solve_in_row_space(m, supp);
        std::vector<std::size_t> comp;
        for (std::size_t j = 0; j < c; ++j) {
            if (std::find(supp.begin(), supp.end(), j) == supp.end()) {
                comp.push_back(j);
            }
        }
        bool expected = rank(m.select_columns(comp)) < rank(m);
        CHECK(sol.has_value() == expected);
        if (sol) {
            auto v = row_times<RationalField>(*sol, m);
            bool nonzero = false;
            for (std::size_t j = 0; j < c; ++j) {
                bool inside = std::find(supp.begin(), supp.end(), j) != supp.end();
                if (!inside) {
                    CHECK(v[j] == 0);
                }
                nonzero |= v[j] != 0;
            }
            CHECK(nonzero);
        }
    }
}

TEST_CASE("property: prime-field rank matches rational rank for a large prime")
{
    std::mt19937 rng(17);
    PrimeField fp(1000003);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto m = random_int_matrix(rng, r, c, -3, 3);
        Matrix<PrimeField> mp(fp, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                mp(i, j) = fp.from_rational(m(i, j));
            }
        }
        CHECK(rank(m) == rank(mp));
    }
}

TEST_CASE("left kernel vectors annihilate and have the right count")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto m = random_int_matrix(rng, r, c, -2, 2);
        auto k = left_kernel_basis(m);
        CHECK(k.size() == r - rank(m));
        for (const auto& v : k) {
            for (const auto& x : row_times<RationalField>(v, m)) {
                CHECK(x == 0);
            }
        }
    }
}
