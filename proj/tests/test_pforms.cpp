#include <doctest.h>

#include <random>

#include <shortpoly/determinantal.hpp>
#include <shortpoly/parser.hpp>
#include <shortpoly/pforms.hpp>
#include <shortpoly/serialize.hpp>

using namespace shortpoly;

namespace {

using QForm = PForm<RationalField>;

QGenerators ideal(const std::string& text) { return parse_ideal(text); }

QForm form(const Exponent& alpha, std::initializer_list<std::pair<YVar, long>> terms)
{
    QForm p{alpha, {}, {}};
    for (const auto& [y, c] : terms) {
        p.add(y, Rational(c));
    }
    return p;
}

std::vector<QPolynomial> random_cofactors(std::mt19937& rng, const QGenerators& g, std::uint64_t degree)
{
    std::vector<QPolynomial> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        QPolynomial p(g.shape());
        if (g.degree(i) <= degree) {
            for (const auto& gamma : monomial_basis(g.shape(), degree - g.degree(i))) {
                p.add_term(gamma, Rational(static_cast<long>(rng() % 7) - 3));
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

QGenerators random_ideal(std::mt19937& rng, std::size_t max_vars, std::size_t max_gens, std::uint64_t max_deg)
{
    auto shape = Shape::flat(1 + rng() % max_vars);
    std::vector<QPolynomial> gens;
    std::size_t r = 1 + rng() % max_gens;
    while (gens.size() < r) {
        std::uint64_t deg = 1 + rng() % max_deg;
        auto basis = monomial_basis(shape, deg);
        QPolynomial p(shape);
        for (std::size_t k = 0, terms = 1 + rng() % 3; k < terms; ++k) {
            p.add_term(basis[rng() % basis.size()], Rational(static_cast<long>(rng() % 5) - 2));
        }
        if (!p.is_zero()) {
            gens.push_back(std::move(p));
        }
    }
    return QGenerators(shape, std::move(gens));
}

} // namespace

TEST_CASE("build_pforms: monomial ideal <x1, x2> in degree 2")
{
    auto forms = build_pforms(ideal("shape flat 2\nx1\nx2\n"), 2);
    REQUIRE(forms.size() == 3);
    CHECK(forms[0].same_form(form({2, 0}, {{{0, {1, 0}}, 1}})));
    CHECK(forms[1].same_form(form({1, 1}, {{{0, {0, 1}}, 1}, {{1, {1, 0}}, 1}})));
    CHECK(forms[2].same_form(form({0, 2}, {{{1, {0, 1}}, 1}})));
    CHECK(forms[1].alpha == Exponent{1, 1});
}

TEST_CASE("build_pforms: principal ideal in degree 4")
{
    auto forms = build_pforms(ideal("shape flat 2\nx1^2+x1*x2+x2^2\n"), 4);
    REQUIRE(forms.size() == 5);
    YVar a{0, {2, 0}}, b{0, {1, 1}}, c{0, {0, 2}};
    CHECK(forms[0].same_form(form({4, 0}, {{a, 1}})));
    CHECK(forms[1].same_form(form({3, 1}, {{a, 1}, {b, 1}})));
    CHECK(forms[2].same_form(form({2, 2}, {{a, 1}, {b, 1}, {c, 1}})));
    CHECK(forms[3].same_form(form({1, 3}, {{b, 1}, {c, 1}})));
    CHECK(forms[4].same_form(form({0, 4}, {{c, 1}})));
}

TEST_CASE("build_pforms: single generator x1^2 in degree 2")
{
    auto forms = build_pforms(ideal("shape flat 2\nx1^2\n"), 2);
    REQUIRE(forms.size() == 3);
    CHECK(forms[0].same_form(form({2, 0}, {{{0, {0, 0}}, 1}})));
    CHECK(forms[1].is_zero());
    CHECK(forms[2].is_zero());
}

TEST_CASE("build_pforms below the generator degree is all zero")
{
    auto forms = build_pforms(ideal("shape flat 2\nx1^2+x1*x2+x2^2\n"), 1);
    CHECK(forms.size() == 2);
    for (const auto& p : forms) {
        CHECK(p.is_zero());
    }
}

TEST_CASE("mixed-degree systems use per-generator cofactor degrees")
{
    auto g = ideal("shape flat 3\nx1^2-2*x1*x3+x3^2\n3*x1-x2-2*x3\n");
    auto rows = y_variables(g, 3);
    // 6 cofactor monomials of degree 1 for f1, 6 of degree 2 for f2.
    CHECK(rows.size() == 3 + 6);
    CHECK(rows[0].generator == 0);
    CHECK(rows[0].gamma.degree() == 1);
    CHECK(rows.back().generator == 1);
    CHECK(rows.back().gamma.degree() == 2);
}

TEST_CASE("evaluate: monomial ideal example")
{
    auto g = ideal("shape flat 2\nx1\nx2\n");
    auto forms = build_pforms(g, 2);
    const Rational a = 2, b = 3;
    QPolynomial g1(g.shape()), g2(g.shape());
    g1.add_term({1, 0}, 3);
    g1.add_term({0, 1}, a);
    g2.add_term({1, 0}, b);
    g2.add_term({0, 1}, 7);
    std::vector<QPolynomial> cof{g1, g2};
    CHECK(evaluate<RationalField>(g, forms[0], cof) == 3);
    CHECK(evaluate<RationalField>(g, forms[1], cof) == 5);
    CHECK(evaluate<RationalField>(g, forms[2], cof) == 7);

    std::vector<QPolynomial> zero(2, QPolynomial(g.shape()));
    for (const auto& p : forms) {
        CHECK(evaluate<RationalField>(g, p, zero) == 0);
    }
}

TEST_CASE("evaluate rejects cofactors of the wrong degree or count")
{
    auto g = ideal("shape flat 2\nx1\nx2\n");
    auto forms = build_pforms(g, 2);
    QPolynomial quad(g.shape());
    quad.add_term({2, 0}, 1);
    std::vector<QPolynomial> bad{quad, QPolynomial(g.shape())};
    CHECK_THROWS_AS(evaluate<RationalField>(g, forms[0], bad), DegreeMismatch);
    std::vector<QPolynomial> one{QPolynomial(g.shape())};
    CHECK_THROWS_AS(evaluate<RationalField>(g, forms[0], one), DegreeMismatch);
}

TEST_CASE("property: evaluate equals the coefficient of sum g_i f_i")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_ideal(rng, 3, 3, 3);
        std::uint64_t degree = *g.min_degree() + rng() % 3;
        if (degree > 5) {
            degree = 5;
        }
        auto cof = random_cofactors(rng, g, degree);
        // Oracle: expand with multiply and add.
        QPolynomial sum(g.shape());
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g.degree(i) <= degree) {
                sum += cof[i] * g[i];
            }
        }
        for (const auto& p : build_pforms(g, degree)) {
            CHECK(evaluate<RationalField>(g, p, cof) == sum.coefficient(p.alpha));
        }
    }
}

TEST_CASE("coefficient_matrix examples")
{
    auto principal = coefficient_matrix(ideal("shape flat 2\nx1^2+x1*x2+x2^2\n"), 4);
    std::vector<std::vector<Rational>> expected{{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}};
    CHECK(principal.matrix == Matrix<RationalField>::from_rows({}, expected));
    CHECK(principal.rows[0].gamma == Exponent{2, 0});
    CHECK(principal.rows[2].gamma == Exponent{0, 2});

    auto single = coefficient_matrix(ideal("shape flat 1\nx1\n"), 1);
    REQUIRE(single.matrix.rows() == 1);
    REQUIRE(single.matrix.cols() == 1);
    CHECK(single.matrix(0, 0) == 1);

    auto m23 = minors(2, 3, 2);
    auto big = coefficient_matrix(m23, 3);
    CHECK(big.matrix.rows() == 18);
    CHECK(big.matrix.cols() == 56);
    auto r = rank(big.matrix);
    CHECK(r <= 18);
    CHECK(r == graded_component_dim(m23, 3));
}

TEST_CASE("property: coefficient matrix columns are the p-forms")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_ideal(rng, 3, 3, 2);
        std::uint64_t degree = *g.min_degree() + rng() % 3;
        auto cm = coefficient_matrix(g, degree);
        auto forms = build_pforms(g, degree);
        REQUIRE(forms.size() == cm.columns.size());
        for (std::size_t j = 0; j < forms.size(); ++j) {
            CHECK(cm.columns[j] == forms[j].alpha);
            CHECK(cm.column_form(j).same_form(forms[j]));
            bool divisible = false;
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (const auto& beta : g[i].support()) {
                    divisible |= beta.divides(forms[j].alpha);
                }
            }
            if (!divisible) {
                CHECK(forms[j].is_zero());
            }
        }
    }
}

TEST_CASE("property: every row-space vector is the coefficient vector of combine")
{
    std::mt19937 rng(91);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_ideal(rng, 3, 2, 2);
        std::uint64_t degree = *g.min_degree() + rng() % 2;
        auto cm = coefficient_matrix(g, degree);
        std::vector<Rational> c;
        for (std::size_t i = 0; i < cm.rows.size(); ++i) {
            c.emplace_back(static_cast<long>(rng() % 5) - 2);
        }
        auto v = row_times<RationalField>(c, cm.matrix);
        auto cof = cofactors_from_vector<RationalField>(g, cm.rows, c);
        auto p = polynomial_from_vector<RationalField>(g.shape(), {}, cm.columns, v);
        CHECK(combine<RationalField>(g, cof) == p);
    }
}

TEST_CASE("p-form JSON shape")
{
    auto forms = build_pforms(ideal("shape flat 2\nx1\nx2\n"), 2);
    auto j = pform_to_json(forms[1]);
    CHECK(j.dump() == R"({"alpha":[1,1],"terms":[{"gen":1,"gamma":[0,1],"coeff":"1/1"},{"gen":2,"gamma":[1,0],"coeff":"1/1"}]})");
}
