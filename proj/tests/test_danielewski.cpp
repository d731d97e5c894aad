#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "susp/danielewski.hpp"
#include "susp/groebner.hpp"

using namespace susp;
using namespace susp::testing;

namespace {

DanielewskiSurface surface(unsigned n, const std::string& f) { return DanielewskiSurface(n, P(f, make_context({"y"}))); }

// Checks b^d f1(y) = a_scale f2(b y + c_slope b + c_shift) in Q[b, y]
// modulo b^g - beta, i.e. for every root b of b^g = beta.
bool witness_holds(const IsomorphismWitness& w, const DanielewskiSurface& s1, const DanielewskiSurface& s2) {
    auto ctx = make_context({"b", "y"});
    const auto b = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1);
    const auto c1 = s1.coefficients(), c2 = s2.coefficients();
    Polynomial lhs(ctx), rhs(ctx), arg = b * y + w.c_slope * b + w.c_shift;
    for (std::size_t i = c1.size(); i-- > 0;) lhs = lhs * y + c1[i];
    for (std::size_t i = c2.size(); i-- > 0;) rhs = rhs * arg + c2[i];
    const auto diff = b.pow(static_cast<unsigned>(w.degree)) * lhs - w.a_scale * rhs;
    const auto modulus = b.pow(static_cast<unsigned>(w.root_degree)) - w.beta;
    return normal_form(diff, {modulus}, MonomialOrder::lex()).is_zero();
}

bool direct_holds(const IsomorphismWitness::Triple& t, const DanielewskiSurface& s1, const DanielewskiSurface& s2) {
    return substitute_affine(s2.f(), t.a, t.b, t.c) == s1.f();
}

}  // namespace

TEST(Danielewski, ConstructorValidation) {
    EXPECT_THROW(surface(0, "y^2 - 1"), DomainError);
    EXPECT_THROW(surface(1, "3"), DegreeError);
    EXPECT_THROW(DanielewskiSurface(1, P("x*y", make_context({"x", "y"}))), ShapeError);
    EXPECT_EQ(surface(2, "y^3 - 1").degree(), 3u);
}

struct TableRow {
    unsigned n;
    const char* f;
    DanielewskiLabel label;
    bool homogeneous_variety;
    bool homogeneous_space;
    std::optional<std::size_t> picard;
};

class DanielewskiTable : public ::testing::TestWithParam<TableRow> {};

TEST_P(DanielewskiTable, Classification) {
    const auto& row = GetParam();
    const auto s = surface(row.n, row.f);
    const auto v = classify(s);
    EXPECT_EQ(v.label, row.label);
    EXPECT_EQ(v.homogeneous_variety, row.homogeneous_variety);
    EXPECT_EQ(v.homogeneous_space, row.homogeneous_space);
    EXPECT_FALSE(v.reason.empty());
    if (row.picard) {
        EXPECT_EQ(picard_rank(s), *row.picard);
    } else {
        EXPECT_THROW(picard_rank(s), UnsupportedCaseError);
    }
}

INSTANTIATE_TEST_SUITE_P(
    Rows, DanielewskiTable,
    ::testing::Values(TableRow{1, "y^2 - 1", DanielewskiLabel::SL2_mod_T, true, true, 1},
                      TableRow{1, "y*(y+1)*(y+2)", DanielewskiLabel::HomogeneousNotSpace, true, false, 2},
                      TableRow{1, "y^2", DanielewskiLabel::NotHomogeneous, false, false, std::nullopt},
                      TableRow{2, "y^3 - 1", DanielewskiLabel::NotHomogeneous, false, false, std::nullopt},
                      TableRow{7, "y - 4", DanielewskiLabel::AffinePlane, true, true, std::nullopt},
                      TableRow{1, "y - 4", DanielewskiLabel::AffinePlane, true, true, 0},
                      TableRow{1, "y^4 - 5*y + 1", DanielewskiLabel::HomogeneousNotSpace, true, false, 3}));

TEST(Danielewski, LabelNames) {
    EXPECT_STREQ(to_string(DanielewskiLabel::SL2_mod_T), "SL2_mod_T");
    EXPECT_STREQ(to_string(DanielewskiLabel::HomogeneousNotSpace), "HomogeneousNotSpace");
}

TEST(Isomorphism, FamilyGridMatchesReference) {
    // Rational b on the grid with y(y+1)(y+2) ~ y(y+1)(y+b), from root
    // matching in tests/oracle/derive.py.
    const std::vector<std::string> grid{"2", "-1", "1/2", "3", "-2", "1/3", "2/3", "3/2", "-1/2", "4",
                                        "5", "-3", "1/4", "3/4", "5/2", "-3/2", "7", "1/5", "6/5", "-5"};
    const std::set<std::string> expected{"2", "-1", "1/2"};
    const auto s1 = surface(1, "y*(y+1)*(y+2)");
    for (const auto& b : grid) {
        const auto s2 = surface(1, "y*(y+1)*(y+(" + b + "))");
        const auto w = isomorphic(s1, s2);
        EXPECT_EQ(w.has_value(), expected.contains(b)) << "b = " << b;
        if (w) {
            EXPECT_TRUE(witness_holds(*w, s1, s2));
            ASSERT_TRUE(w->direct) << "b = " << b;
            EXPECT_TRUE(direct_holds(*w->direct, s1, s2));
        }
    }
}

TEST(Isomorphism, SignFlipWitnessAlsoValid) {
    const auto s1 = surface(1, "y*(y+1)*(y+2)");
    const auto s2 = surface(1, "y*(y-1)*(y-2)");
    const auto w = isomorphic(s1, s2);
    ASSERT_TRUE(w);
    EXPECT_TRUE(witness_holds(*w, s1, s2));
    ASSERT_TRUE(w->direct);
    EXPECT_TRUE(direct_holds(*w->direct, s1, s2));
    // The witness is not unique: (a, b, c) = (-1, -1, 0) works as well.
    EXPECT_TRUE(direct_holds({-1, -1, 0}, s1, s2));
    // It is one of the roots b of b^g = beta.
    EXPECT_EQ(pow(Rational(-1), static_cast<long>(w->root_degree)), w->beta);
    EXPECT_EQ(w->a_for(-1), -1);
    EXPECT_EQ(w->c_for(-1), 0);
}

TEST(Isomorphism, IrrationalScaling) {
    const auto s1 = surface(1, "y^2 - 1");
    const auto s2 = surface(1, "y^2 - 2");
    const auto w = isomorphic(s1, s2);
    ASSERT_TRUE(w);
    EXPECT_FALSE(w->direct);
    EXPECT_TRUE(witness_holds(*w, s1, s2));
}

TEST(Isomorphism, InvariantsSeparate) {
    EXPECT_FALSE(isomorphic(surface(1, "y^2 - 1"), surface(2, "y^2 - 1")));
    EXPECT_FALSE(isomorphic(surface(1, "y^2 - 1"), surface(1, "y^3 - 1")));
    EXPECT_FALSE(isomorphic(surface(1, "y*(y+1)*(y+2)"), surface(1, "y*(y+1)*(y+3)")));
    EXPECT_FALSE(isomorphic(surface(1, "y^3"), surface(1, "y^3 - 1")));
}

TEST(Isomorphism, RandomAffineImagesAreRecognized) {
    std::mt19937 rng(61);
    auto ctx = make_context({"y"});
    for (int i = 0; i < 40; ++i) {
        auto f2 = random_polynomial(rng, ctx, 5, 4);
        if (f2.degree(0) < 2) continue;
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        if (a == 0 || b == 0) continue;
        const auto f1 = substitute_affine(f2, a, b, c);
        const DanielewskiSurface s1(1, f1), s2(1, f2);
        const auto w = isomorphic(s1, s2);
        ASSERT_TRUE(w) << to_string(f1) << " vs " << to_string(f2);
        EXPECT_TRUE(witness_holds(*w, s1, s2));
        EXPECT_TRUE(direct_holds({a, b, c}, s1, s2));
        if (w->direct) {
            EXPECT_TRUE(direct_holds(*w->direct, s1, s2));
        }
        // Symmetric.
        EXPECT_TRUE(isomorphic(s2, s1));
    }
}

TEST(Isomorphism, IdenticalSurfacesMayHaveRootDegreeAboveOne) {
    // Depressed y^3 + 1 has only the constant term, so b^3 = 1.
    const auto s = surface(1, "y^3 + 1");
    const auto w = isomorphic(s, s);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->root_degree, 3u);
    EXPECT_EQ(w->beta, 1);
    ASSERT_TRUE(w->direct);
    EXPECT_EQ(w->direct->b, 1);
}

TEST(RootForm, AlternateBezoutVectorsAgree) {
    // rho_i = b^k_i with b = 2/3, k = (6, 10, 15): m = k, gcd 1.
    const Rational b = make_rational(2, 3);
    const std::vector<long> k{6, 10, 15};
    std::vector<Rational> rho;
    for (long ki : k) rho.push_back(pow(b, ki));
    const auto u = detail::bezout_coefficients(k);
    long check = 0;
    for (std::size_t i = 0; i < k.size(); ++i) check += u[i] * k[i];
    EXPECT_EQ(check, 1);
    // Shifting along the kernel (10, -6, 0) changes u but not the answer.
    std::vector<long> v = u;
    v[0] += 10;
    v[1] -= 6;
    const auto r1 = detail::root_form(rho, k, u), r2 = detail::root_form(rho, k, v);
    ASSERT_TRUE(r1 && r2);
    EXPECT_EQ(r1->root_degree, 1u);
    EXPECT_EQ(r1->beta, b);
    EXPECT_EQ(r2->beta, b);
    // An inconsistent system is rejected for every choice.
    rho[2] *= 2;
    EXPECT_FALSE(detail::root_form(rho, k, u));
    EXPECT_FALSE(detail::root_form(rho, k, v));
}

TEST(RootForm, CommonFactorInExponents) {
    // k = (4, 6): g = 2, so b^2 = beta with b^4 = 4, b^6 = 8 gives beta = 2.
    const std::vector<long> k{4, 6};
    const std::vector<Rational> rho{4, 8};
    const auto form = detail::root_form(rho, k, detail::bezout_coefficients({2, 3}));
    ASSERT_TRUE(form);
    EXPECT_EQ(form->root_degree, 2u);
    EXPECT_EQ(form->beta, 2);
}

TEST(TaylorShift, MatchesEvaluation) {
    std::mt19937 rng(67);
    auto ctx = make_context({"y"});
    for (int i = 0; i < 20; ++i) {
        const auto f = random_polynomial(rng, ctx, 5, 4);
        const Rational s = random_rational(rng);
        const auto shifted = from_dense(ctx, 0, detail::taylor_shift(dense_coefficients(f, 0), s));
        EXPECT_EQ(shifted, substitute_affine(f, 1, 1, s));
    }
}
