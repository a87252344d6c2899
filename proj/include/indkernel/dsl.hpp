#pragma once

// Line-oriented rule files:
//
//   # comment
//   set a b c           declare elements (may repeat, names must be new)
//   rule a b -> c       premises -> conclusion (premises may be empty)
//   axiom c <- a b      cover axiom: c is covered by {a, b}
//   seed a              the set U (at most once, may be empty)
//   goal c              at most once
//
// Names are runs of letters, digits, '_', '\'', '.' or non-ASCII bytes and
// must be declared by a `set` line before use.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indkernel/inddef.hpp"
#include "indkernel/topology.hpp"

namespace indkernel {

struct RuleDecl {
    enum class Form { Rule, Axiom };

    Form form = Form::Rule;
    std::vector<std::string> premises;
    std::string conclusion;

    friend bool operator==(const RuleDecl&, const RuleDecl&) = default;
};

struct RuleFileAst {
    std::vector<std::string> carrier;
    std::vector<RuleDecl> rules;
    std::optional<std::vector<std::string>> seed;
    std::optional<std::string> goal;

    friend bool operator==(const RuleFileAst&, const RuleFileAst&) = default;
};

/// Throws ParseError (syntax, undeclared name or duplicate name) with the
/// 1-based line and column of the offending token.
RuleFileAst parse_rule_file(std::string_view text);

/// Canonical text: one `set` line, the rules in order, then seed and goal.
/// parse_rule_file(emit_rule_file(ast)) == ast.
std::string emit_rule_file(const RuleFileAst& ast);

bool is_name_char(char c) noexcept;

InductiveDefinition to_definition(const RuleFileAst& ast);
/// The declared seed, or the empty set.
Subset seed_of(const RuleFileAst& ast, const Carrier& carrier);
/// Every rule and axiom line read as a cover axiom.
CoverPresentation to_presentation(const RuleFileAst& ast);

} // namespace indkernel
