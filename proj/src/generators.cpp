#include "indkernel/generators.hpp"

#include <algorithm>
#include <numeric>

namespace indkernel {

namespace {
std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
} // namespace

Carrier numbered_carrier(std::string_view prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return Carrier(std::move(names));
}

InductiveDefinition random_definition(std::mt19937_64& rng, const DefinitionShape& shape) {
    auto n = uniform(rng, shape.min_elements, std::max(shape.min_elements, shape.max_elements));
    auto carrier = numbered_carrier("s", n);
    if (n == 0) return InductiveDefinition(carrier);

    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);

    std::vector<Rule> rules;
    auto rule_count = uniform(rng, 0, shape.max_rules);
    for (std::size_t r = 0; r < rule_count; ++r) {
        auto k = uniform(rng, 0, std::min(shape.max_premises, n));
        std::shuffle(pool.begin(), pool.end(), rng);
        Subset premises(carrier, std::span<const std::size_t>(pool.data(), k));
        rules.push_back(Rule{std::move(premises), uniform(rng, 0, n - 1)});
    }
    return InductiveDefinition(carrier, std::move(rules));
}

Subset random_subset(std::mt19937_64& rng, const Carrier& carrier, double density) {
    std::bernoulli_distribution coin(density);
    Subset s(carrier);
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (coin(rng)) s.insert(i);
    }
    return s;
}

FinMap random_map(std::mt19937_64& rng, const Carrier& dom, const Carrier& cod) {
    std::vector<std::size_t> table(dom.size());
    if (!dom.empty()) {
        if (cod.empty()) throw InvalidArgument("no map from an inhabited set into the empty set");
        for (auto& y : table) y = uniform(rng, 0, cod.size() - 1);
    }
    return FinMap(dom, cod, std::move(table));
}

FinMap random_surjection(std::mt19937_64& rng, std::string_view prefix, std::size_t domain_size,
                         const Carrier& cod) {
    if (domain_size < cod.size() || (cod.empty() && domain_size > 0)) {
        throw InvalidArgument("no surjection of that size onto the codomain");
    }
    std::vector<std::size_t> table(domain_size);
    for (std::size_t i = 0; i < domain_size; ++i) {
        table[i] = i < cod.size() ? i : uniform(rng, 0, cod.size() - 1);
    }
    std::shuffle(table.begin(), table.end(), rng);
    return FinMap(numbered_carrier(prefix, domain_size), cod, std::move(table));
}

Square random_square(std::mt19937_64& rng, std::size_t max_size) {
    auto a = numbered_carrier("a", uniform(rng, 1, std::max<std::size_t>(max_size, 1)));
    auto b = numbered_carrier("b", uniform(rng, 0, max_size));
    auto c = numbered_carrier("c", uniform(rng, 0, max_size));
    auto f = random_map(rng, b, a);
    auto p = random_map(rng, c, a);

    std::vector<std::pair<std::size_t, std::size_t>> matched;
    for (std::size_t x = 0; x < b.size(); ++x) {
        for (std::size_t y = 0; y < c.size(); ++y) {
            if (f(x) == p(y)) matched.emplace_back(x, y);
        }
    }
    auto d_size = matched.empty() ? 0 : uniform(rng, 0, max_size);
    auto d = numbered_carrier("d", d_size);
    std::vector<std::size_t> g_table;
    std::vector<std::size_t> q_table;
    for (std::size_t i = 0; i < d_size; ++i) {
        auto [x, y] = matched[uniform(rng, 0, matched.size() - 1)];
        q_table.push_back(x);
        g_table.push_back(y);
    }
    return Square(f, p, FinMap(d, c, std::move(g_table)), FinMap(d, b, std::move(q_table)));
}

} // namespace indkernel
