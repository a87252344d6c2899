#include <gtest/gtest.h>

#include <random>

#include "indkernel/generators.hpp"
#include "indkernel/inddef.hpp"
#include "oracles.hpp"

using namespace indkernel;

namespace {

const Carrier abc{"a", "b", "c"};

InductiveDefinition chain() {
    return InductiveDefinition(abc, {make_rule(abc, {"a"}, "b"), make_rule(abc, {"b"}, "c")});
}

Subset names(std::initializer_list<std::string_view> n) { return Subset::of_names(abc, n); }

} // namespace

TEST(IsPhiClosed, VacuousWithoutRules) {
    InductiveDefinition phi(abc);
    EXPECT_TRUE(is_phi_closed(phi, names({"a"})));
    EXPECT_TRUE(is_phi_closed(phi, Subset(abc)));
}

TEST(IsPhiClosed, FiringRuleNeedsConclusion) {
    InductiveDefinition phi(abc, {make_rule(abc, {"a"}, "b")});
    EXPECT_FALSE(is_phi_closed(phi, names({"a"})));
    EXPECT_TRUE(is_phi_closed(phi, names({"a", "b"})));
}

TEST(Closure, NoRulesReturnsSeed) {
    InductiveDefinition phi(abc);
    EXPECT_EQ(closure(phi, names({"b"})), names({"b"}));
}

TEST(Closure, NullaryRuleIsForced) {
    InductiveDefinition phi(abc, {make_rule(abc, {}, "a")});
    EXPECT_EQ(closure(phi, Subset(abc)), names({"a"}));
}

TEST(Closure, Chain) {
    EXPECT_EQ(closure(chain(), names({"a"})), names({"a", "b", "c"}));
}

TEST(ClosureStages, NoRules) {
    InductiveDefinition phi(abc);
    auto stages = closure_stages(phi, names({"a"}));
    ASSERT_EQ(stages.size(), 1u);
    EXPECT_EQ(stages[0], names({"a"}));
}

TEST(ClosureStages, Chain) {
    auto stages = closure_stages(chain(), names({"a"}));
    ASSERT_EQ(stages.size(), 3u);
    EXPECT_EQ(stages[0], names({"a"}));
    EXPECT_EQ(stages[1], names({"a", "b"}));
    EXPECT_EQ(stages[2], names({"a", "b", "c"}));
}

TEST(ClosureStages, AlreadyClosed) {
    InductiveDefinition phi(abc, {make_rule(abc, {}, "a")});
    auto stages = closure_stages(phi, names({"a"}));
    ASSERT_EQ(stages.size(), 1u);
    EXPECT_EQ(stages[0], names({"a"}));
}

TEST(NaiveOracle, SameExamplesAsClosure) {
    EXPECT_EQ(naive_closure_oracle(InductiveDefinition(abc), names({"b"})), names({"b"}));
    EXPECT_EQ(naive_closure_oracle(InductiveDefinition(abc, {make_rule(abc, {}, "a")}), Subset(abc)), names({"a"}));
    EXPECT_EQ(naive_closure_oracle(chain(), names({"a"})), names({"a", "b", "c"}));
}

TEST(NaiveOracle, ConclusionsAlreadyPresent) {
    InductiveDefinition phi(abc, {make_rule(abc, {"c"}, "a"), make_rule(abc, {}, "b")});
    EXPECT_EQ(naive_closure_oracle(phi, names({"a", "b"})), names({"a", "b"}));
}

TEST(NaiveOracle, FullRelationOnTwoPoints) {
    Carrier xy{"x", "y"};
    InductiveDefinition phi(xy, {make_rule(xy, {"x"}, "x"), make_rule(xy, {"x"}, "y"), make_rule(xy, {"y"}, "x"),
                                 make_rule(xy, {"y"}, "y")});
    EXPECT_EQ(naive_closure_oracle(phi, Subset::of_names(xy, {"x"})), Subset::full(xy));
}

TEST(InductiveDefinition, DropsDuplicateRules) {
    InductiveDefinition phi(abc, {make_rule(abc, {"a"}, "b"), make_rule(abc, {"a"}, "b"), make_rule(abc, {"b"}, "b")});
    EXPECT_EQ(phi.rules().size(), 2u);
    EXPECT_EQ(phi.duplicates_removed(), 1u);
    EXPECT_EQ(phi.describe(0), "a -> b");
}

TEST(InductiveDefinition, RejectsForeignRules) {
    Carrier other{"a"};
    EXPECT_THROW(InductiveDefinition(abc, {Rule{Subset(other), 0}}), CodomainMismatch);
    EXPECT_THROW(InductiveDefinition(abc, {Rule{Subset(abc), 9}}), UnknownElement);
}

TEST(Saturation, ProvenanceUsesFirstRuleAtEarliestStage) {
    InductiveDefinition phi(abc, {make_rule(abc, {"b"}, "c"), make_rule(abc, {"a"}, "c"), make_rule(abc, {"a"}, "b")});
    auto sat = saturate(phi, names({"a"}));
    EXPECT_EQ(sat.entry_stage[2], 1u);
    EXPECT_EQ(sat.first_rule[2], std::optional<std::size_t>(1));
    EXPECT_EQ(sat.first_rule[0], std::nullopt);
}

TEST(ClosureProperties, ClosureOperatorLaws) {
    std::mt19937_64 rng(11);
    DefinitionShape shape;
    for (int i = 0; i < 500; ++i) {
        auto phi = random_definition(rng, shape);
        auto u = random_subset(rng, phi.carrier(), 0.3);
        auto bigger = u | random_subset(rng, phi.carrier(), 0.3);
        auto cu = closure(phi, u);
        EXPECT_TRUE(u.is_subset_of(cu));
        EXPECT_TRUE(cu.is_subset_of(closure(phi, bigger)));
        EXPECT_EQ(closure(phi, cu), cu);
        EXPECT_EQ(cu, naive_closure_oracle(phi, u));
        auto stages = closure_stages(phi, u);
        EXPECT_LE(stages.size(), phi.carrier().size() + 1);
        for (std::size_t s = 0; s + 1 < stages.size(); ++s) EXPECT_TRUE(stages[s].is_subset_of(stages[s + 1]));
        EXPECT_EQ(stages.back(), cu);
    }
}

TEST(ClosureProperties, LeastAmongClosedSupersetsUpToSixElements) {
    std::mt19937_64 rng(12);
    DefinitionShape shape;
    for (int i = 0; i < 300; ++i) {
        auto phi = random_definition(rng, shape);
        auto u = random_subset(rng, phi.carrier());
        auto cu = closure(phi, u);
        EXPECT_TRUE(is_phi_closed(phi, cu));
        EXPECT_EQ(cu, oracle::least_closed_superset(phi, u));
    }
}

TEST(ClosureProperties, RuleOrderDoesNotMatter) {
    std::mt19937_64 rng(13);
    DefinitionShape shape;
    for (int i = 0; i < 200; ++i) {
        auto phi = random_definition(rng, shape);
        auto rules = phi.rules();
        std::shuffle(rules.begin(), rules.end(), rng);
        InductiveDefinition shuffled(phi.carrier(), rules);
        auto u = random_subset(rng, phi.carrier());
        EXPECT_EQ(closure(phi, u), closure(shuffled, u));
    }
}
