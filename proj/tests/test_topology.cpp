#include <gtest/gtest.h>

#include <random>

#include "indkernel/generators.hpp"
#include "indkernel/topology.hpp"

using namespace indkernel;

namespace {

CoverPresentation random_presentation(std::mt19937_64& rng) {
    auto base = numbered_carrier("o", 1 + rng() % 6);
    std::vector<CoverAxiom> axioms;
    for (std::size_t k = 0, n = rng() % 10; k < n; ++k) {
        axioms.push_back({static_cast<std::size_t>(rng() % base.size()), random_subset(rng, base, 0.3)});
    }
    return CoverPresentation(base, axioms);
}

} // namespace

TEST(ToInductiveDefinition, NoAxioms) {
    CoverPresentation cp(Carrier{"a", "b"});
    EXPECT_TRUE(to_inductive_definition(cp).rules().empty());
}

TEST(ToInductiveDefinition, TranscribesAxiom) {
    Carrier base{"a", "b", "c"};
    CoverPresentation cp(base, {{0, Subset::of_names(base, {"b", "c"})}});
    auto phi = to_inductive_definition(cp);
    ASSERT_EQ(phi.rules().size(), 1u);
    EXPECT_EQ(phi.rules()[0].conclusion, 0u);
    EXPECT_EQ(phi.rules()[0].premises.to_string(), "{b, c}");
}

TEST(ToInductiveDefinition, SierpinskiStyle) {
    Carrier base{"bot", "top"};
    CoverPresentation cp(base, {{0, Subset::of_names(base, {"top"})}});
    EXPECT_EQ(closure(to_inductive_definition(cp), Subset::of_names(base, {"top"})), Subset::full(base));
}

TEST(CoverPresentation, RejectsForeignAxioms) {
    Carrier base{"a"};
    EXPECT_THROW(CoverPresentation(base, {{3, Subset(base)}}), UnknownElement);
    EXPECT_THROW(CoverPresentation(base, {{0, Subset(Carrier{"z"})}}), CodomainMismatch);
}

TEST(Covers, Examples) {
    Carrier base{"a", "b", "c"};
    CoverPresentation none(base);
    EXPECT_TRUE(covers(none, 0, Subset::of_names(base, {"a"})));
    EXPECT_FALSE(covers(none, 0, Subset::of_names(base, {"b"})));
    EXPECT_THROW(covers(none, 9, Subset(base)), UnknownElement);

    CoverPresentation chain(base, {{0, Subset::of_names(base, {"b"})}, {1, Subset::of_names(base, {"c"})}});
    EXPECT_TRUE(covers(chain, 0, Subset::of_names(base, {"c"})));
    EXPECT_FALSE(covers(chain, 2, Subset::of_names(base, {"a"})));
}

TEST(CompactSubcover, Examples) {
    Carrier base{"a", "b", "c"};
    CoverPresentation cp(base, {{0, Subset::of_names(base, {"b"})}, {0, Subset::of_names(base, {"c"})}});
    auto u = Subset::of_names(base, {"b", "c"});
    EXPECT_EQ(compact_subcover(cp, 1, u)->to_string(), "{b}");
    EXPECT_EQ(compact_subcover(cp, 0, u)->to_string(), "{b}");
    EXPECT_TRUE(covers(cp, 0, Subset::of_names(base, {"c"})));
    EXPECT_FALSE(compact_subcover(cp, 1, Subset::of_names(base, {"c"})).has_value());
}

TEST(CoverProperties, AgreesWithBothEngines) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 400; ++i) {
        auto cp = random_presentation(rng);
        auto phi = to_inductive_definition(cp);
        auto u = random_subset(rng, cp.base());
        auto expected = naive_closure_oracle(phi, u);
        for (std::size_t a = 0; a < cp.base().size(); ++a) {
            EXPECT_EQ(covers(cp, a, u), expected.contains(a));
            auto v = compact_subcover(cp, a, u);
            EXPECT_EQ(v.has_value(), expected.contains(a));
            if (v) {
                EXPECT_TRUE(v->is_subset_of(u));
                EXPECT_TRUE(covers(cp, a, *v));
            }
        }
    }
}

TEST(CoverProperties, Transitivity) {
    std::mt19937_64 rng(52);
    int exercised = 0;
    for (int i = 0; i < 600; ++i) {
        auto cp = random_presentation(rng);
        auto u = random_subset(rng, cp.base());
        auto w = random_subset(rng, cp.base());
        bool u_below_w = true;
        for (auto x : u.indices()) u_below_w = u_below_w && covers(cp, x, w);
        if (!u_below_w) continue;
        for (std::size_t a = 0; a < cp.base().size(); ++a) {
            if (!covers(cp, a, u)) continue;
            ++exercised;
            EXPECT_TRUE(covers(cp, a, w));
        }
    }
    EXPECT_GT(exercised, 100);
}
