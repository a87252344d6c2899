#include "indkernel/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "indkernel/dsl.hpp"
#include "indkernel/generators.hpp"
#include "indkernel/proof.hpp"
#include "indkernel/square.hpp"
#include "indkernel/wtype.hpp"

namespace indkernel {

std::optional<std::uint64_t> seed_from_env() {
    const char* raw = std::getenv("INDKERNEL_SEED");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    auto value = std::strtoull(raw, &end, 10);
    if (*end != '\0') return std::nullopt;
    return value;
}

namespace {

// A suite returns an empty string on success, else a description of the
// first failing case.
struct Suite {
    const char* name;
    std::size_t cases;
    std::function<std::string(std::mt19937_64&, std::size_t)> run_case;
};

std::vector<Suite> suites() {
    DefinitionShape shape;
    return {
        {"closure matches naive oracle", 300,
         [shape](std::mt19937_64& rng, std::size_t) -> std::string {
             auto phi = random_definition(rng, shape);
             auto u = random_subset(rng, phi.carrier());
             if (closure(phi, u) != naive_closure_oracle(phi, u)) return "closure differs on seed " + u.to_string();
             return {};
         }},
        {"closure is a closure operator", 300,
         [shape](std::mt19937_64& rng, std::size_t) -> std::string {
             auto phi = random_definition(rng, shape);
             auto u = random_subset(rng, phi.carrier(), 0.3);
             auto bigger = u | random_subset(rng, phi.carrier(), 0.3);
             auto cu = closure(phi, u);
             if (!u.is_subset_of(cu)) return "not extensive";
             if (!cu.is_subset_of(closure(phi, bigger))) return "not monotone";
             if (closure(phi, cu) != cu) return "not idempotent";
             if (!is_phi_closed(phi, cu)) return "closure is not closed";
             auto stages = closure_stages(phi, u);
             if (stages.size() > phi.carrier().size() + 1) return "too many stages";
             return {};
         }},
        {"bounded proof search characterizes the closure", 300,
         [shape](std::mt19937_64& rng, std::size_t) -> std::string {
             auto phi = random_definition(rng, shape);
             auto u = random_subset(rng, phi.carrier());
             if (characterize(phi, u, phi.carrier().size() + 1) != closure(phi, u)) return "mismatch";
             return {};
         }},
        {"witnesses are compact and in the basis", 150,
         [shape](std::mt19937_64& rng, std::size_t) -> std::string {
             auto phi = random_definition(rng, shape);
             auto u = random_subset(rng, phi.carrier());
             auto basis = compactness_basis(phi);
             for (auto x : closure(phi, u).indices()) {
                 auto v = witness(phi, u, x);
                 if (!v) return "no witness for a member of the closure";
                 if (!v->is_subset_of(u)) return "witness not inside the seed";
                 if (!closure(phi, *v).contains(x)) return "witness does not generate the goal";
                 if (std::find(basis.begin(), basis.end(), *v) == basis.end()) return "witness outside the basis";
             }
             return {};
         }},
        {"synthesized derivations are proofs", 200,
         [shape](std::mt19937_64& rng, std::size_t) -> std::string {
             auto phi = random_definition(rng, shape);
             ProofSignature ps(phi);
             auto u = random_subset(rng, phi.carrier());
             auto sat = saturate(phi, u);
             for (auto x : sat.closure().indices()) {
                 auto w = synthesize_proof(ps, u, x);
                 if (!w || !is_proof(ps, *w)) return "not a proof";
                 if (conc(ps, *w) != x) return "wrong conclusion";
                 if (!ass(ps, *w).is_subset_of(u)) return "assumption outside the seed";
                 if (w->depth() > sat.entry_stage[x] + 1) return "proof deeper than its stage";
                 for (const auto& t : subtrees(*w)) {
                     if (!is_proof(ps, t)) return "subtree of a proof is not a proof";
                 }
             }
             return {};
         }},
        {"W-type fold rebuilds trees", 200,
         [](std::mt19937_64& rng, std::size_t) -> std::string {
             auto labels = numbered_carrier("l", 1 + rng() % 4);
             std::vector<Carrier> arities;
             for (std::size_t a = 0; a < labels.size(); ++a) arities.push_back(numbered_carrier("x", a == 0 ? 0 : rng() % 3));
             Signature sig(labels, arities);
             auto t = TreeGenerator(sig, 5)(rng);
             auto rebuilt = fold<WTree>(t, [&](std::size_t label, std::span<const WTree> kids) {
                 return sup(sig, label, std::vector<WTree>(kids.begin(), kids.end()));
             });
             if (!(rebuilt == t)) return "fold with sup is not the identity";
             if (subtrees(t).size() != t.node_count()) return "subtree count differs from node count";
             return {};
         }},
        {"covering squares are collection squares", 200,
         [](std::mt19937_64& rng, std::size_t) -> std::string {
             auto sq = random_square(rng, 4);
             if (!check_covering_square(sq)) return {};
             for (std::size_t bound = 1; bound <= 6; ++bound) {
                 if (!check_collection_square(sq, bound)) return "covering square fails collection";
             }
             return {};
         }},
        {"multiple-choice squares pass both checks", 100,
         [](std::mt19937_64& rng, std::size_t) -> std::string {
             auto a = numbered_carrier("a", 1 + rng() % 3);
             auto b = numbered_carrier("b", rng() % 5);
             auto f = random_map(rng, b, a);
             std::vector<std::vector<FinMap>> families(a.size());
             for (std::size_t x = 0; x < a.size(); ++x) {
                 auto fib = fiber_carrier(f, x);
                 auto members = 1 + rng() % 3;
                 for (std::size_t t = 0; t < members; ++t) {
                     auto size = fib.empty() ? 0 : fib.size() + rng() % 3;
                     families[x].push_back(random_surjection(rng, "y", size, fib));
                 }
             }
             auto sq = build_amc_square(f, families);
             if (!check_covering_square(sq)) return "not covering";
             if (!check_collection_square(sq, default_square_bound(sq))) return "not a collection square";
             return {};
         }},
        {"refinement is a preorder", 200,
         [](std::mt19937_64& rng, std::size_t) -> std::string {
             auto x = numbered_carrier("x", 1 + rng() % 4);
             auto p = random_surjection(rng, "p", x.size() + rng() % 3, x);
             auto q = random_surjection(rng, "q", x.size() + rng() % 3, x);
             auto r = random_surjection(rng, "r", x.size() + rng() % 3, x);
             auto self = refines(p, p);
             if (!self || !(compose(p, *self) == p)) return "not reflexive";
             auto pq = refines(p, q);
             auto qr = refines(q, r);
             if (!pq || !qr) return "surjections must refine each other";
             if (!(compose(r, compose(*qr, *pq)) == p)) return "composite does not witness transitivity";
             return {};
         }},
        {"rule files round-trip", 200,
         [shape](std::mt19937_64& rng, std::size_t) -> std::string {
             auto phi = random_definition(rng, shape);
             RuleFileAst ast;
             ast.carrier = phi.carrier().names();
             for (const auto& rule : phi.rules()) {
                 ast.rules.push_back({rng() % 2 ? RuleDecl::Form::Rule : RuleDecl::Form::Axiom,
                                      rule.premises.names(), phi.carrier().name(rule.conclusion)});
             }
             if (rng() % 2) ast.seed = random_subset(rng, phi.carrier()).names();
             if (rng() % 2) ast.goal = phi.carrier().name(rng() % phi.carrier().size());
             if (!(parse_rule_file(emit_rule_file(ast)) == ast)) return "round trip changed the file";
             return {};
         }},
    };
}

} // namespace

int run_selftest(std::ostream& out, std::uint64_t seed) {
    out << "selftest seed " << seed << "\n";
    int failures = 0;
    std::size_t index = 0;
    for (const auto& suite : suites()) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * ++index);
        std::string problem;
        std::size_t failed_case = 0;
        for (std::size_t i = 0; i < suite.cases && problem.empty(); ++i) {
            try {
                problem = suite.run_case(rng, i);
            } catch (const std::exception& e) {
                problem = std::string("exception: ") + e.what();
            }
            failed_case = i;
        }
        if (problem.empty()) {
            out << "ok   " << suite.name << " (" << suite.cases << " cases)\n";
        } else {
            ++failures;
            out << "FAIL " << suite.name << ": case " << failed_case << ": " << problem << "\n";
        }
    }
    return failures;
}

} // namespace indkernel
