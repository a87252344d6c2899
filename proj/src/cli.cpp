#include "indkernel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "indkernel/dsl.hpp"
#include "indkernel/instance.hpp"
#include "indkernel/proof.hpp"
#include "indkernel/selftest.hpp"
#include "indkernel/square.hpp"
#include "indkernel/topology.hpp"

namespace indkernel {

namespace {

using json = nlohmann::ordered_json;

// Input failures carry the message the user sees.
struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedRules {
    RuleFileAst ast;
    InductiveDefinition phi;
    Subset seed;
};

LoadedRules load_rules(const std::string& path, std::ostream& err) {
    auto text = read_file(path);
    RuleFileAst ast;
    try {
        ast = parse_rule_file(text);
    } catch (const ParseError& e) {
        throw InputFailure(path + ":" + e.what());
    }
    auto phi = to_definition(ast);
    if (phi.duplicates_removed() > 0) {
        err << "warning: " << phi.duplicates_removed() << " duplicate rule(s) ignored\n";
    }
    auto seed = seed_of(ast, phi.carrier());
    return LoadedRules{std::move(ast), std::move(phi), std::move(seed)};
}

std::size_t resolve_goal(const LoadedRules& rules, const std::string& flag, const char* option) {
    std::string name = flag;
    if (name.empty()) {
        if (!rules.ast.goal) throw InputFailure(std::string("no goal: pass ") + option + " or add a 'goal' line");
        name = *rules.ast.goal;
    }
    if (auto i = rules.phi.carrier().find(name)) return *i;
    throw InputFailure("'" + name + "' is not a declared element");
}

Instance load_json_instance(const std::string& path) {
    auto text = read_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputFailure(path + ": invalid JSON: " + e.what());
    }
    return load_instance(doc);
}

int cmd_close(const std::string& file, std::ostream& out, std::ostream& err) {
    auto rules = load_rules(file, err);
    out << closure(rules.phi, rules.seed).to_string() << "\n";
    return exit_ok;
}

int cmd_prove(const std::string& file, const std::string& goal_flag, const std::string& dot_path, bool as_json,
              std::ostream& out, std::ostream& err) {
    auto rules = load_rules(file, err);
    auto goal = resolve_goal(rules, goal_flag, "--goal");
    ProofSignature ps(rules.phi);
    auto proof = synthesize_proof(ps, rules.seed, goal);
    if (!proof) {
        out << "unprovable\n";
        return exit_negative;
    }
    if (as_json) {
        out << proof_to_json(ps, *proof).dump(2) << "\n";
    } else if (dot_path != "-") {
        out << proof_to_text(ps, *proof);
    }
    if (!dot_path.empty()) {
        auto dot = proof_to_dot(ps, *proof);
        if (dot_path == "-") {
            out << dot;
        } else {
            std::ofstream f(dot_path, std::ios::binary);
            if (!(f << dot)) throw InputFailure("cannot write '" + dot_path + "'");
        }
    }
    return exit_ok;
}

int cmd_witness(const std::string& file, const std::string& goal_flag, std::ostream& out, std::ostream& err) {
    auto rules = load_rules(file, err);
    auto goal = resolve_goal(rules, goal_flag, "--goal");
    auto v = witness(rules.phi, rules.seed, goal);
    if (!v) {
        out << "unprovable\n";
        return exit_negative;
    }
    out << v->to_string() << "\n";
    return exit_ok;
}

int cmd_basis(const std::string& file, std::ostream& out, std::ostream& err) {
    auto rules = load_rules(file, err);
    for (const auto& v : compactness_basis(rules.phi)) out << v.to_string() << "\n";
    return exit_ok;
}

int cmd_cover(const std::string& file, const std::string& point_flag, std::ostream& out, std::ostream& err) {
    auto rules = load_rules(file, err);
    auto point = resolve_goal(rules, point_flag, "--point");
    auto cp = to_presentation(rules.ast);
    const auto& name = cp.base().name(point);
    auto v = compact_subcover(cp, point, rules.seed);
    if (!v) {
        out << name << " is not covered by " << rules.seed.to_string() << "\n";
        return exit_negative;
    }
    out << name << " is covered by " << rules.seed.to_string() << "\n";
    out << "subcover " << v->to_string() << "\n";
    return exit_ok;
}

json bound_fields(std::size_t bound, bool from_flag) {
    return {{"bound", bound}, {"bound_source", from_flag ? "flag" : "default"}};
}

int cmd_check_square(const std::string& file, std::size_t bound_flag, bool has_bound, std::ostream& out) {
    auto inst = load_json_instance(file);
    auto sq = square_from_instance(inst);
    auto bound = has_bound ? bound_flag : default_square_bound(sq);
    auto covering = covering_report(sq);
    auto collection = collection_report(sq, bound);

    json report = {{"instance", "square"}};
    report.update(bound_fields(bound, has_bound));
    report["covering"] = covering_to_json(sq, covering);
    report["collection"] = collection_to_json(sq, collection);
    bool holds = covering.holds && collection.holds;
    report["holds"] = holds;
    out << report.dump(2) << "\n";
    return holds ? exit_ok : exit_negative;
}

int cmd_check_family(const std::string& file, std::size_t bound_flag, bool has_bound, std::ostream& out) {
    auto inst = load_json_instance(file);
    json report;
    bool holds = false;
    if (inst.document.contains("family")) {
        auto fam = surjection_family_from_instance(inst);
        auto bound = has_bound ? bound_flag : fam.base().size() + 2;
        auto r = amc_family_report(fam, bound);
        report = {{"instance", "family"}};
        report.update(bound_fields(bound, has_bound));
        report.update(amc_family_to_json(r));
        holds = r.holds;
    } else if (inst.document.contains("collection_family")) {
        auto ys = collection_family_from_instance(inst);
        std::size_t widest = 0;
        for (const auto& y : ys) widest = std::max(widest, y.size());
        auto bound = has_bound ? bound_flag : widest + 2;
        auto r = collection_family_report(ys, bound);
        report = {{"instance", "collection_family"}};
        report.update(bound_fields(bound, has_bound));
        report.update(collection_family_to_json(r));
        holds = r.holds;
    } else {
        throw InputFailure(file + ": expected a 'family' or 'collection_family' entry");
    }
    out << report.dump(2) << "\n";
    return holds ? exit_ok : exit_negative;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Least fixed points, derivations and compactness witnesses for finite inductive definitions",
                 "indkernel"};
    app.require_subcommand(1);

    std::string file;
    std::string goal;
    std::string point;
    std::string dot_path;
    bool as_json = false;
    std::size_t bound = 0;

    auto* close = app.add_subcommand("close", "print the closure of the seed");
    close->add_option("FILE", file, "rule file")->required();

    auto* prove = app.add_subcommand("prove", "print a derivation of the goal from the seed");
    prove->add_option("FILE", file, "rule file")->required();
    prove->add_option("--goal", goal, "element to derive (defaults to the file's goal)");
    prove->add_option("--dot", dot_path, "write Graphviz output to PATH ('-' for stdout)");
    prove->add_flag("--json", as_json, "print the derivation as JSON");

    auto* wit = app.add_subcommand("witness", "print a finite subset of the seed that already derives the goal");
    wit->add_option("FILE", file, "rule file")->required();
    wit->add_option("--goal", goal, "element to derive (defaults to the file's goal)");

    auto* basis = app.add_subcommand("basis", "print the assumption sets of all bounded-depth proofs");
    basis->add_option("FILE", file, "rule file")->required();

    auto* cover = app.add_subcommand("cover", "decide whether the seed covers a point");
    cover->add_option("FILE", file, "rule file")->required();
    cover->add_option("--point", point, "basic open to test (defaults to the file's goal)");

    const auto positive = CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max());

    auto* check_square = app.add_subcommand("check-square", "check the covering and collection conditions");
    check_square->add_option("FILE", file, "JSON instance")->required();
    auto* square_bound = check_square->add_option("--bound", bound, "largest cover size to test")
                             ->check(positive);

    auto* check_family = app.add_subcommand("check-family", "check a surjection family or collection family");
    check_family->add_option("FILE", file, "JSON instance")->required();
    auto* family_bound = check_family->add_option("--bound", bound, "largest cover size to test")
                             ->check(positive);

    auto* selftest = app.add_subcommand("selftest", "run the randomized invariant suites (seed: INDKERNEL_SEED)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*close) return cmd_close(file, out, err);
        if (*prove) return cmd_prove(file, goal, dot_path, as_json, out, err);
        if (*wit) return cmd_witness(file, goal, out, err);
        if (*basis) return cmd_basis(file, out, err);
        if (*cover) return cmd_cover(file, point, out, err);
        if (*check_square) return cmd_check_square(file, bound, square_bound->count() > 0, out);
        if (*check_family) return cmd_check_family(file, bound, family_bound->count() > 0, out);
        if (*selftest) {
            auto seed = seed_from_env().value_or(default_selftest_seed);
            return run_selftest(out, seed) == 0 ? exit_ok : exit_negative;
        }
    } catch (const InputFailure& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

} // namespace indkernel
