#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourcover/eliminate.hpp"
#include "fourcover/polymatrix.hpp"
#include "test_util.hpp"

using namespace fourcover;
using fctest::det_cofactor;
using fctest::random_poly;

TEST_CASE("parser: direct grammar cases") {
    auto ctx = make_context("x1 x2");
    MultiPoly p = parse_poly("3*x1*x2 - x2^2", ctx);
    CHECK(p.num_terms() == 2);
    CHECK(p.to_string() == "3*x1*x2 - x2^2");
    CHECK(parse_poly(p.to_string(), ctx) == p);

    auto ctx4 = make_context("x0 x1 x2 x3 t");
    MultiPoly q = parse_poly("t*(x0^2+x2^2)+2*x1*x3", ctx4);
    CHECK(q == parse_poly("t*x0^2 + t*x2^2 + 2*x1*x3", ctx4));

    CHECK_THROWS_AS(parse_poly("x1^^2", ctx), SyntaxError);
    try {
        parse_poly("x1^^2", ctx);
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("x1+y", ctx), UnknownVariable);
}

TEST_CASE("parser: rational literals and whitespace") {
    auto ctx = make_context("x");
    CHECK(parse_poly("2/3*x - 1/6", ctx) == parse_poly("  2/3 * x-1/6 ", ctx));
    CHECK(parse_poly("-x^2", ctx).lead_coeff() == rat(-1));
    CHECK(parse_poly("(x+1)^2", ctx) == parse_poly("x^2+2*x+1", ctx));
}

TEST_CASE("print/parse round trip on random canonical polys") {
    std::mt19937 rng(20260810);
    auto ctx = make_context("x1 x2 x3 t");
    for (int i = 0; i < 120; ++i) {
        MultiPoly p = random_poly(rng, ctx, 5, 8);
        if (p.is_zero()) continue;
        CHECK(parse_poly(p.to_string(), ctx) == p);
    }
}

TEST_CASE("det_adj: identity and diagonal") {
    auto ctx = make_context("p q");
    PolyMatrix I4 = PolyMatrix::identity(4, ctx);
    auto [d, adj] = det_adj(I4);
    CHECK(d == MultiPoly::constant(ctx, rat(1)));
    CHECK(adj == I4);

    PolyMatrix D(2, 2, ctx);
    D.at(0, 0) = MultiPoly::variable(ctx, std::size_t(0));
    D.at(1, 1) = MultiPoly::variable(ctx, std::size_t(1));
    auto [dd, dadj] = det_adj(D);
    CHECK(dd == parse_poly("p*q", ctx));
    CHECK(dadj.at(0, 0) == parse_poly("q", ctx));
    CHECK(dadj.at(1, 1) == parse_poly("p", ctx));
    CHECK(dadj.at(0, 1).is_zero());
}

TEST_CASE("det_adj: the level-4 family pencil") {
    // quadrics t(x0^2+x2^2)+2 x1 x3 and t(x1^2+x3^2)+2 x0 x2
    auto ctx = make_context("x0 x1 x2 x3 t X Z");
    std::vector<std::size_t> xs = {0, 1, 2, 3};
    MultiPoly Q1 = parse_poly("t*(x0^2+x2^2)+2*x1*x3", ctx);
    MultiPoly Q2 = parse_poly("t*(x1^2+x3^2)+2*x0*x2", ctx);
    PolyMatrix A1 = PolyMatrix::from_quadratic_form(Q1, xs);
    PolyMatrix A2 = PolyMatrix::from_quadratic_form(Q2, xs);
    MultiPoly X = MultiPoly::variable(ctx, std::string("X"));
    MultiPoly Z = MultiPoly::variable(ctx, std::string("Z"));
    PolyMatrix pencil = A1 * X + A2 * Z;
    MultiPoly d = det(pencil);
    MultiPoly expect = parse_poly("16*(t^2*X^2-Z^2)*(t^2*Z^2-X^2)", ctx);
    CHECK(d == expect);
    CHECK(d == det_cofactor(pencil));
}

TEST_CASE("property: M*adj(M) = det(M)*I on random matrices") {
    std::mt19937 rng(7);
    auto ctx = make_context("a b");
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 1 + trial % 5;
        PolyMatrix M(n, n, ctx);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M.at(i, j) = random_poly(rng, ctx, 2, 3);
        auto [d, adj] = det_adj(M);
        CHECK(d == det_cofactor(M));
        PolyMatrix prod = M * adj;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) CHECK(prod.at(i, j) == d);
                else CHECK(prod.at(i, j).is_zero());
            }
    }
}

TEST_CASE("perfect_square_root") {
    auto ctx = make_context("x1 x2");
    MultiPoly s = parse_poly("x1+2*x2", ctx);
    CHECK(perfect_square_root(s * s) == s);
    CHECK(perfect_square_root(parse_poly("4*x1^4", ctx)) == parse_poly("2*x1^2", ctx));
    CHECK_THROWS_AS(perfect_square_root(parse_poly("x1^2+1", ctx)), NotASquare);

    std::mt19937 rng(99);
    for (int i = 0; i < 110; ++i) {
        MultiPoly q = random_poly(rng, ctx, 4, 5);
        if (q.is_zero()) continue;
        MultiPoly r = perfect_square_root(q * q);
        bool ok = (r == q) || (r == -q);
        CHECK(ok);
        CHECK(sgn(r.lead_coeff()) > 0);
    }
}

TEST_CASE("normalize_form") {
    auto ctx = make_context("x1 x2");
    CHECK(normalize_form(parse_poly("2/3*x1^2 - 4/3*x2^2", ctx)) ==
          parse_poly("x1^2 - 2*x2^2", ctx));
    CHECK(normalize_form(parse_poly("-x1*x2", ctx)) == parse_poly("x1*x2", ctx));
    CHECK(normalize_form(parse_poly("6*x1+9*x2", ctx)) == parse_poly("2*x1+3*x2", ctx));
    CHECK_THROWS_AS(normalize_form(MultiPoly::zero(ctx)), ZeroPolynomial);
}

TEST_CASE("eliminate: one-dimensional kernel and full span") {
    auto ctx = make_context("X Z y1 y2");
    MultiPoly X2 = parse_poly("X^2", ctx);
    MultiPoly q1 = parse_poly("y1^2", ctx);
    MultiPoly q2 = parse_poly("y1*y2+y2^2", ctx);
    Monomial killX2 = X2.lead_monomial();

    LinearSpan s = eliminate({{X2, q1}, {X2, q2}}, {killX2});
    CHECK(s.dim() == 1);
    CHECK(s.contains(q1 - q2));

    LinearSpan full = eliminate({{X2, q1}, {X2, q2}}, {});
    CHECK(full.dim() == 2);
    CHECK(full.contains(q1));
    CHECK(full.contains(q2));
}

TEST_CASE("eliminate: output invariant under permutation of pairs") {
    std::mt19937 rng(4242);
    auto ctx = make_context("X Z y1 y2 y3");
    auto X = MultiPoly::variable(ctx, std::string("X"));
    auto Z = MultiPoly::variable(ctx, std::string("Z"));
    std::vector<Monomial> kill = {parse_poly("X^2", ctx).lead_monomial(),
                                  parse_poly("X*Z", ctx).lead_monomial(),
                                  parse_poly("Z^2", ctx).lead_monomial()};
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::pair<MultiPoly, MultiPoly>> pairs;
        for (int i = 0; i < 5; ++i) {
            MultiPoly t = X * X * fctest::random_rational(rng) +
                          X * Z * fctest::random_rational(rng) +
                          Z * Z * fctest::random_rational(rng);
            MultiPoly src(ctx);
            for (int v = 2; v < 5; ++v)
                src += MultiPoly::variable(ctx, std::size_t(v)) *
                       MultiPoly::variable(ctx, std::size_t(v)) * fctest::random_rational(rng);
            pairs.emplace_back(t, src);
        }
        LinearSpan a = eliminate(pairs, kill);
        std::vector<std::pair<MultiPoly, MultiPoly>> shuffled = pairs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        LinearSpan b = eliminate(shuffled, kill);
        REQUIRE(a.dim() == b.dim());
        CHECK(a.basis == b.basis);
    }
}

TEST_CASE("ideal membership helper") {
    auto ctx = make_context("x1 x2 x3 x4");
    MultiPoly q1 = parse_poly("x1*x2 - x3^2", ctx);
    MultiPoly q2 = parse_poly("x2*x4 + x1^2", ctx);
    LinearSpan deg3 = span_of(ideal_degree_part({q1, q2}, 3));
    CHECK(deg3.contains(q1 * MultiPoly::variable(ctx, std::size_t(3))));
    CHECK(deg3.contains(q2 * MultiPoly::variable(ctx, std::size_t(0)) - q1 * MultiPoly::variable(ctx, std::size_t(1))));
    CHECK(!deg3.contains(parse_poly("x1^3", ctx)));
}
