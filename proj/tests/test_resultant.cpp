#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "susp/resultant.hpp"
#include "susp/univariate.hpp"

using namespace susp;
using namespace susp::testing;

TEST(Univariate, GcdIsMonic) {
    auto ctx = make_context({"y"});
    EXPECT_EQ(univariate_gcd(P("2*y^2 - 2", ctx), P("3*y^2 + 3*y", ctx)), P("y + 1", ctx));
    EXPECT_EQ(univariate_gcd(P("y^2 + 1", ctx), P("y", ctx)), P("1", ctx));
    auto two = make_context({"x", "y"});
    EXPECT_THROW(univariate_gcd(P("x", two), P("y", two)), ShapeError);
    EXPECT_THROW(univariate_gcd(P("x*y", two), P("y", two)), ShapeError);
}

TEST(Univariate, Squarefree) {
    auto ctx = make_context({"y"});
    EXPECT_TRUE(is_squarefree(P("y^2 - 1", ctx)));
    EXPECT_TRUE(is_squarefree(P("y*(y+1)*(y+2)", ctx)));
    EXPECT_FALSE(is_squarefree(P("y^2", ctx)));
    EXPECT_FALSE(is_squarefree(P("(y-1)^2*(y+3)", ctx)));
    EXPECT_THROW(is_squarefree(P("5", ctx)), DegreeError);
}

TEST(Univariate, ProductsOfDistinctLinearFactorsAreSquarefree) {
    std::mt19937 rng(23);
    auto ctx = make_context({"y"});
    auto y = Polynomial::variable(ctx, 0);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> roots;
        Polynomial f = Polynomial::constant(ctx, 1);
        std::uniform_int_distribution<int> count(1, 5);
        for (int k = count(rng); k > 0; --k) {
            Rational r = random_rational(rng, 6, 3);
            f *= y - r;
            roots.push_back(r);
        }
        std::sort(roots.begin(), roots.end());
        const bool distinct = std::adjacent_find(roots.begin(), roots.end()) == roots.end();
        EXPECT_EQ(is_squarefree(f), distinct) << to_string(f);
    }
}

TEST(Univariate, SubstituteAffineMatchesEvaluation) {
    std::mt19937 rng(29);
    auto ctx = make_context({"y"});
    for (int i = 0; i < 30; ++i) {
        auto f = random_polynomial(rng, ctx, 5, 4);
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        if (a == 0 || b == 0) continue;
        auto g = substitute_affine(f, a, b, c);
        for (int k = 0; k < 3; ++k) {
            Rational t = random_rational(rng, 9, 5);
            std::vector<Rational> inner{b * t + c}, outer{t};
            EXPECT_EQ(evaluate(g, outer), a * evaluate(f, inner));
        }
    }
    EXPECT_THROW(substitute_affine(P("y", ctx), 0, 1, 0), InvalidTransformationError);
    EXPECT_THROW(substitute_affine(P("y", ctx), 1, 0, 0), InvalidTransformationError);
}

struct FrozenResultant {
    const char* p;
    const char* q;
    const char* var;
    const char* expected;
    std::vector<std::string> vars;
};

// Reference values computed with sympy (tests/oracle/derive.py).
class ResultantFrozen : public ::testing::TestWithParam<FrozenResultant> {};

TEST_P(ResultantFrozen, BothRoutesMatchReference) {
    const auto& c = GetParam();
    auto ctx = make_context(c.vars);
    auto p = P(c.p, ctx), q = P(c.q, ctx), want = P(c.expected, ctx);
    EXPECT_EQ(resultant(p, q, c.var), want);
    EXPECT_EQ(sylvester_resultant(p, q, c.var), want);
}

INSTANTIATE_TEST_SUITE_P(
    Reference, ResultantFrozen,
    ::testing::Values(FrozenResultant{"x^2 + y", "x*y - 1", "x", "y^3 + 1", {"x", "y"}},
                      FrozenResultant{"x^3 - 2*x + y", "3*x^2 - 2", "x", "27*y^2 - 32", {"x", "y"}},
                      FrozenResultant{"x*y + y^3 + 1", "x*y + y^3 + 2", "x", "y", {"x", "y"}},
                      FrozenResultant{"x*y + y^3 + 1", "x*y + y^3 + 2", "y", "1", {"x", "y"}},
                      FrozenResultant{"y^2 - 1", "y^2 - 4", "y", "9", {"y"}},
                      FrozenResultant{"x^2*y - 3*z + 1", "x*z^2 - y", "z", "x^5*y^2 + 2*x^3*y + x - 9*y",
                                      {"x", "y", "z"}},
                      FrozenResultant{"1/2*x^2 - y", "x - 3*y^2", "x", "9/2*y^4 - y", {"x", "y"}}));

TEST(Resultant, SubresultantAgreesWithSylvester) {
    std::mt19937 rng(31);
    auto ctx = make_context({"x", "y", "z"});
    int compared = 0;
    for (int i = 0; i < 80; ++i) {
        auto p = random_polynomial(rng, ctx, 4, 4);
        auto q = random_polynomial(rng, ctx, 3, 4);
        if (p.degree(0) < 1 || q.degree(0) < 1) continue;
        EXPECT_EQ(resultant(p, q, 0), sylvester_resultant(p, q, 0)) << to_string(p) << " | " << to_string(q);
        ++compared;
    }
    EXPECT_GT(compared, 30);
}

TEST(Resultant, VanishesIffCommonFactor) {
    std::mt19937 rng(37);
    auto ctx = make_context({"x", "y"});
    auto x = Polynomial::variable(ctx, 0);
    for (int i = 0; i < 30; ++i) {
        auto h = x + random_polynomial(rng, ctx, 2, 2);
        if (h.degree(0) < 1) continue;
        auto a = random_polynomial(rng, ctx, 2, 3) + Rational(1);
        auto b = random_polynomial(rng, ctx, 2, 3) + Rational(2);
        EXPECT_TRUE(resultant(h * a, h * b, 0).is_zero());
    }
    // Coprime univariate pairs give a nonzero resultant.
    auto uni = make_context({"x"});
    EXPECT_FALSE(resultant(P("x^2 - 2", uni), P("x^3 - x", uni), 0).is_zero());
    EXPECT_TRUE(resultant(P("x^2 - 1", uni), P("x^3 - x", uni), 0).is_zero());
}

TEST(Resultant, ProductOfRootDifferences) {
    // Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j) for monic split polynomials.
    std::mt19937 rng(41);
    auto ctx = make_context({"x"});
    auto x = Polynomial::variable(ctx, 0);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rational> as, bs;
        Polynomial f = Polynomial::constant(ctx, 1), g = Polynomial::constant(ctx, 1);
        for (int k = 0; k < 3; ++k) {
            as.push_back(random_rational(rng));
            f *= x - as.back();
        }
        for (int k = 0; k < 2; ++k) {
            bs.push_back(random_rational(rng));
            g *= x - bs.back();
        }
        Rational want = 1;
        for (const auto& a : as)
            for (const auto& b : bs) want *= a - b;
        EXPECT_EQ(resultant(f, g, 0), Polynomial::constant(ctx, want));
    }
}

TEST(Resultant, RejectsDegreeZeroOperands) {
    auto ctx = make_context({"x", "y"});
    EXPECT_THROW(resultant(P("y", ctx), P("x", ctx), "x"), ShapeError);
    EXPECT_THROW(sylvester_resultant(P("x", ctx), P("y + 1", ctx), "x"), ShapeError);
}
