#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "susp/analyzer.hpp"

using namespace susp;
using namespace susp::testing;

namespace {

FactoredSuspension factored(const std::vector<std::string>& vars, const std::vector<std::string>& factors,
                            std::optional<std::vector<std::string>> witness, bool attested) {
    auto ctx = make_context(vars);
    std::optional<std::vector<Polynomial>> w;
    if (witness) w = Ps(*witness, ctx);
    return FactoredSuspension(ctx, Ps(factors, ctx), w, attested);
}

FactoredSuspension picard_four() {
    return factored({"x", "y"}, {"x + y^2", "x*y + y^3 + 1", "x*y + y^3 + 2", "x*y + y^3 + 3", "x*y + y^3 + 4"},
                    std::vector<std::string>{"y"}, true);
}

bool has_rule(const Report& r, const std::string& field, Rule rule) {
    for (const auto& reason : r.reasons)
        if (reason.field == field && reason.rule == rule) return true;
    return false;
}

}  // namespace

TEST(RuleIds, FixedStrings) {
    EXPECT_STREQ(rule_id(Rule::SuspSmoothCriterion), "susp-smooth-criterion");
    EXPECT_STREQ(rule_id(Rule::IterSuspHomog), "iter-susp-homog");
    EXPECT_STREQ(rule_id(Rule::DanielewskiThmI), "danielewski-thm-i");
    EXPECT_STREQ(rule_id(Rule::DanielewskiThmII), "danielewski-thm-ii");
    EXPECT_STREQ(rule_id(Rule::PicRankDanielewski), "pic-rank-danielewski");
    EXPECT_STREQ(rule_id(Rule::PicRankSuspension), "pic-rank-suspension");
    EXPECT_STREQ(rule_id(Rule::PicDimObstruction), "pic-dim-obstruction");
    EXPECT_STREQ(rule_id(Rule::VariableWitness), "variable-witness");
}

TEST(PicardObstruction, RankAboveDimension) {
    EXPECT_TRUE(picard_obstruction(4, 3).obstructed);
    EXPECT_FALSE(picard_obstruction(3, 3).obstructed);
    EXPECT_FALSE(picard_obstruction(0, 1).obstructed);
    EXPECT_THROW(picard_obstruction(-1, 3), DomainError);
    EXPECT_THROW(picard_obstruction(1, 0), DomainError);
}

TEST(Report, ValidateEnforcesInvariants) {
    Report r;
    r.kind = "tower";
    r.smooth = true;
    EXPECT_THROW(r.validate(), InconsistencyError);
    r.reasons.push_back({"smooth", Rule::SuspSmoothCriterion, "ok"});
    EXPECT_NO_THROW(r.validate());
    r.homogeneous_space = true;
    r.reasons.push_back({"homogeneous_space", Rule::IterSuspHomog, "claimed"});
    EXPECT_THROW(r.validate(), InconsistencyError);
}

TEST(FactoredSuspension, ConstructorValidation) {
    auto ctx = make_context({"y"});
    EXPECT_THROW(FactoredSuspension(ctx, Ps({"y"}, ctx), std::nullopt, false), ShapeError);
    EXPECT_THROW(FactoredSuspension(ctx, Ps({"y", "2"}, ctx), std::nullopt, false), DegreeError);
    EXPECT_EQ(picard_four().dim(), 3u);
    EXPECT_EQ(picard_four().d(), 4u);
}

TEST(VerifyFactored, PicardFour) {
    const auto v = verify_factored_suspension(picard_four());
    EXPECT_TRUE(v.smooth);
    EXPECT_EQ(v.witness, WitnessStatus::Verified);
    EXPECT_EQ(v.picard_rank, 4);
    EXPECT_EQ(v.homogeneous_space, false);
    for (const auto& c : v.checks) EXPECT_TRUE(c.passed) << c.name;
    // distinct + 5 component checks + 10 pairs + product + witness
    EXPECT_EQ(v.checks.size(), 1u + 5u + 10u + 1u + 1u);
}

TEST(VerifyFactored, ProportionalFactors) {
    const auto fs = factored({"x", "y"}, {"x + y", "2*x + 2*y", "x - 1"}, std::nullopt, false);
    EXPECT_THROW(verify_factored_suspension(fs), DistinctnessError);
    const auto r = analyze(fs);
    EXPECT_EQ(r.smooth, false);
    EXPECT_EQ(r.homogeneous_variety, false);
    EXPECT_EQ(r.homogeneous_space, false);
}

TEST(VerifyFactored, InvalidWitness) {
    const auto fs = factored({"x", "y"}, {"x + y^2", "x + y^2 + 1"}, std::vector<std::string>{"x"}, true);
    EXPECT_THROW(verify_factored_suspension(fs), WitnessInvalidError);
    const auto r = analyze(fs);
    EXPECT_EQ(r.smooth, true);
    EXPECT_FALSE(r.picard_rank);
    EXPECT_TRUE(has_rule(r, "picard_rank", Rule::VariableWitness));
    const auto wrong_count = factored({"x", "y"}, {"x + y^2", "x - 1"}, std::vector<std::string>{}, true);
    EXPECT_THROW(verify_factored_suspension(wrong_count), WitnessInvalidError);
}

TEST(VerifyFactored, SingularComponentOrMeetingComponents) {
    const auto meeting = factored({"x", "y"}, {"x", "x + y"}, std::nullopt, false);
    EXPECT_FALSE(verify_factored_suspension(meeting).smooth);
    // {x^2 - y^3 = 0} is a cusp.
    const auto cusp_only = factored({"x", "y"}, {"x - 10", "x^2 - y^3"}, std::nullopt, false);
    const auto v = verify_factored_suspension(cusp_only);
    EXPECT_FALSE(v.smooth);
    for (const auto& c : v.checks)
        if (c.name == "smooth p_1") {
            EXPECT_FALSE(c.passed);
        }
}

TEST(Analyze, Sl2Tower) {
    auto base = make_context({"x", "y"});
    auto lvl2 = make_context({"x", "y", "z", "t"});
    SuspensionTower tower({"x", "y"}, {P("x*y - 1", base), P("x^3*z + y*t^2", lvl2)}, {{"z", "t"}, {"u", "v"}});
    const auto r = analyze(tower);
    EXPECT_EQ(r.kind, "tower");
    EXPECT_EQ(r.dim, 4u);
    EXPECT_EQ(r.smooth, true);
    EXPECT_EQ(r.homogeneous_variety, true);
    EXPECT_FALSE(r.picard_rank);
    EXPECT_TRUE(has_rule(r, "homogeneous_variety", Rule::IterSuspHomog));
}

TEST(Analyze, FactoredPicardFour) {
    const auto r = analyze(picard_four());
    EXPECT_EQ(r.picard_rank, 4);
    EXPECT_EQ(r.homogeneous_space, false);
    bool found = false;
    for (const auto& reason : r.reasons)
        if (reason.rule == Rule::PicDimObstruction) found = reason.detail == "rank 4 > dim 3";
    EXPECT_TRUE(found);
    EXPECT_EQ(r.assumptions.size(), 1u);
}

TEST(Analyze, NoAttestationLeavesRankUnknown) {
    auto fs = picard_four();
    fs.irreducibility_attested = false;
    const auto r = analyze(fs);
    EXPECT_FALSE(r.picard_rank);
    EXPECT_FALSE(r.homogeneous_space);
    EXPECT_TRUE(has_rule(r, "picard_rank", Rule::PicRankSuspension));
}

TEST(Analyze, DanielewskiObstructionReason) {
    const auto r = analyze(DanielewskiSurface(1, P("y*(y-1)*(y-2)*(y-3)", make_context({"y"}))));
    EXPECT_EQ(r.picard_rank, 3);
    EXPECT_EQ(r.homogeneous_space, false);
    EXPECT_TRUE(has_rule(r, "homogeneous_space", Rule::PicDimObstruction));
    const auto sl2 = analyze(DanielewskiSurface(1, P("y^2 - 1", make_context({"y"}))));
    EXPECT_EQ(sl2.homogeneous_space, true);
    EXPECT_FALSE(has_rule(sl2, "homogeneous_space", Rule::PicDimObstruction));
}

TEST(Analyze, ResourceLimitBecomesUndecided) {
    auto base = make_context({"y"});
    SuspensionTower tower({"y"}, {P("y", base), P("y - 1", base), P("y - 2", base)});
    AnalyzeOptions opts;
    opts.engine.max_minor_order = 2;
    const auto r = analyze(tower, opts);
    EXPECT_FALSE(r.smooth);
    ASSERT_FALSE(r.reasons.empty());
    EXPECT_EQ(r.reasons[0].detail.rfind("undecided:", 0), 0u);
}

TEST(Analyze, OracleAuditsEveryVerdict) {
    AnalyzeOptions opts;
    opts.oracle_check = true;
    const auto r = analyze(picard_four(), opts);
    ASSERT_TRUE(r.oracle);
    EXPECT_TRUE(r.oracle->consistent);
    EXPECT_GT(r.oracle->audited, 10u);
    EXPECT_EQ(r.oracle->skipped, 0u);
}

TEST(Analyze, OracleSkipsWideSystems) {
    auto base = make_context({"x", "y"});
    auto lvl2 = make_context({"x", "y", "z", "t"});
    SuspensionTower tower({"x", "y"}, {P("x*y - 1", base), P("x^3*z + y*t^2", lvl2)}, {{"z", "t"}, {"u", "v"}});
    AnalyzeOptions opts;
    opts.oracle_check = true;
    opts.oracle_limits.max_variables = 3;
    const auto r = analyze(tower, opts);
    ASSERT_TRUE(r.oracle);
    EXPECT_GT(r.oracle->skipped, 0u);
}

TEST(Analyze, DanielewskiAndFactoredAgreeOnLinearProducts) {
    std::mt19937 rng(73);
    auto ctx = make_context({"y"});
    auto y = Polynomial::variable(ctx, 0);
    int compared = 0;
    for (int i = 0; i < 15; ++i) {
        std::vector<Polynomial> factors;
        std::set<std::string> roots;
        std::uniform_int_distribution<int> count(2, 4);
        for (int k = count(rng); k > 0; --k) {
            const Rational r = random_rational(rng, 6, 3);
            if (!roots.insert(to_string(r)).second) continue;
            factors.push_back(y - r);
        }
        if (factors.size() < 2) continue;
        Polynomial f = Polynomial::constant(ctx, 1);
        for (const auto& p : factors) f *= p;
        const auto dan = analyze(DanielewskiSurface(1, f));
        const auto fac = analyze(FactoredSuspension(ctx, factors, std::vector<Polynomial>{}, true));
        EXPECT_EQ(dan.smooth, fac.smooth);
        EXPECT_EQ(dan.homogeneous_variety, fac.homogeneous_variety);
        EXPECT_EQ(dan.picard_rank, fac.picard_rank);
        ++compared;
    }
    EXPECT_GT(compared, 10);
}
