#include <gtest/gtest.h>

#include <random>

#include "indkernel/finite.hpp"
#include "indkernel/generators.hpp"

using namespace indkernel;

namespace {

FinMap table_map(const Carrier& dom, const Carrier& cod, std::vector<std::size_t> table) {
    return FinMap(dom, cod, std::move(table));
}

} // namespace

TEST(Carrier, KeepsDeclarationOrder) {
    Carrier c{"z", "a", "m"};
    EXPECT_EQ(c.size(), 3u);
    EXPECT_EQ(c.name(0), "z");
    EXPECT_EQ(c.index_of("m"), 2u);
    EXPECT_FALSE(c.find("q").has_value());
    EXPECT_THROW(c.index_of("q"), UnknownElement);
}

TEST(Carrier, RejectsDuplicateNames) {
    EXPECT_THROW((Carrier{"a", "b", "a"}), DuplicateName);
}

TEST(Subset, SetAlgebra) {
    Carrier c{"a", "b", "c", "d"};
    auto x = Subset::of_names(c, {"a", "c"});
    auto y = Subset::of_names(c, {"c", "d"});
    EXPECT_EQ((x | y).to_string(), "{a, c, d}");
    EXPECT_EQ((x & y).to_string(), "{c}");
    EXPECT_TRUE((x & y).is_subset_of(x));
    EXPECT_FALSE(x.is_subset_of(y));
    EXPECT_EQ(Subset(c).to_string(), "{}");
    EXPECT_EQ(Subset::full(c).count(), 4u);
}

TEST(Subset, RejectsForeignCarrier) {
    Carrier c{"a"};
    Carrier d{"b"};
    EXPECT_THROW(Subset(c) | Subset(d), CodomainMismatch);
    EXPECT_THROW(Subset::of_names(c, {"b"}), UnknownElement);
}

TEST(Subset, WideCarriersSpanSeveralWords) {
    auto c = numbered_carrier("x", 130);
    Subset s(c, {0, 64, 129});
    EXPECT_EQ(s.count(), 3u);
    EXPECT_TRUE(s.contains(129));
    s.erase(64);
    EXPECT_EQ(s.names(), (std::vector<std::string>{"x0", "x129"}));
}

TEST(FinMap, ValidatesTable) {
    Carrier a{"a"};
    Carrier b{"b0", "b1"};
    EXPECT_THROW(table_map(b, a, {0}), InvalidArgument);
    EXPECT_THROW(table_map(b, a, {0, 1}), UnknownElement);
}

TEST(Fiber, IdentityFiber) {
    Carrier xy{"x", "y"};
    EXPECT_EQ(fiber(FinMap::identity(xy), "x").to_string(), "{x}");
}

TEST(Fiber, ConstantMap) {
    Carrier b{"b0", "b1"};
    Carrier a{"a"};
    EXPECT_EQ(fiber(table_map(b, a, {0, 0}), "a").to_string(), "{b0, b1}");
}

TEST(Fiber, ScansTable) {
    Carrier b{"b0", "b1", "b2"};
    Carrier a{"a0", "a1"};
    auto f = table_map(b, a, {0, 0, 1});
    EXPECT_EQ(fiber(f, "a1").to_string(), "{b2}");
    EXPECT_THROW(fiber(f, "zz"), UnknownElement);
    EXPECT_THROW(fiber(f, std::size_t{7}), UnknownElement);
}

TEST(IsSurjection, Examples) {
    Carrier xy{"x", "y"};
    EXPECT_TRUE(is_surjection(FinMap::identity(xy)));
    EXPECT_FALSE(is_surjection(table_map(Carrier{"x"}, xy, {0})));
    EXPECT_TRUE(is_surjection(table_map(Carrier{"b0", "b1"}, Carrier{"a"}, {0, 0})));
}

TEST(Pullback, Singleton) {
    Carrier a{"a"};
    auto pb = pullback(FinMap::identity(a), FinMap::identity(a));
    EXPECT_EQ(pb.carrier.names(), (std::vector<std::string>{"(a,a)"}));
}

TEST(Pullback, EnumeratesMatchingPairs) {
    Carrier a{"a"};
    auto f = table_map(Carrier{"b0", "b1"}, a, {0, 0});
    auto p = table_map(Carrier{"c0"}, a, {0});
    auto pb = pullback(f, p);
    EXPECT_EQ(pb.carrier.names(), (std::vector<std::string>{"(b0,c0)", "(b1,c0)"}));
}

TEST(Pullback, DisjointImages) {
    Carrier a{"a0", "a1"};
    auto f = table_map(Carrier{"b"}, a, {0});
    auto p = table_map(Carrier{"c"}, a, {1});
    EXPECT_TRUE(pullback(f, p).carrier.empty());
    EXPECT_THROW(pullback(f, FinMap::identity(Carrier{"z"})), CodomainMismatch);
}

TEST(FiniteProperties, RandomMaps) {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        auto a = numbered_carrier("a", 1 + rng() % 4);
        auto b = numbered_carrier("b", rng() % 6);
        auto c = numbered_carrier("c", rng() % 6);
        auto f = random_map(rng, b, a);
        auto p = random_map(rng, c, a);

        // fibers partition the domain
        Subset seen(b);
        bool onto = true;
        for (std::size_t x = 0; x < a.size(); ++x) {
            auto fib = fiber(f, x);
            EXPECT_TRUE((seen & fib).empty());
            seen |= fib;
            onto = onto && !fib.empty();
        }
        EXPECT_EQ(seen, Subset::full(b));
        EXPECT_EQ(is_surjection(f), onto);

        // projections commute
        auto pb = pullback(f, p);
        for (std::size_t i = 0; i < pb.carrier.size(); ++i) {
            EXPECT_EQ(f(pb.first(i)), p(pb.second(i)));
        }
        std::size_t expected = 0;
        for (std::size_t x = 0; x < a.size(); ++x) expected += fiber(f, x).count() * fiber(p, x).count();
        EXPECT_EQ(pb.carrier.size(), expected);
    }
}

TEST(Compose, ChecksCarriers) {
    Carrier a{"a"};
    Carrier b{"b0", "b1"};
    auto f = table_map(b, a, {0, 0});
    EXPECT_EQ(compose(f, FinMap::identity(b)), f);
    EXPECT_THROW(compose(FinMap::identity(b), f), CodomainMismatch);
}
