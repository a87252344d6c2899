#include "indkernel/dsl.hpp"

#include <unordered_set>

namespace indkernel {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool is_name_char(char c) noexcept {
    auto u = static_cast<unsigned char>(c);
    return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9') || u == '_' ||
           u == '\'' || u == '.' || u >= 0x80;
}

namespace {

struct Token {
    enum class Kind { Name, Arrow, BackArrow, End };
    Kind kind;
    std::string_view text;
    std::size_t column;
};

const char* describe(Token::Kind k) {
    switch (k) {
    case Token::Kind::Name: return "name";
    case Token::Kind::Arrow: return "'->'";
    case Token::Kind::BackArrow: return "'<-'";
    case Token::Kind::End: return "end of line";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '-' || c == '<') {
            char want = c == '-' ? '>' : '-';
            if (i + 1 >= line.size() || line[i + 1] != want) {
                throw ParseError(ParseError::Kind::Syntax, line_no, i + 1,
                                 std::string("unexpected character '") + c + "'",
                                 {c == '-' ? "'->'" : "'<-'"});
            }
            out.push_back({c == '-' ? Token::Kind::Arrow : Token::Kind::BackArrow, line.substr(i, 2), i + 1});
            i += 2;
        } else if (is_name_char(c)) {
            auto start = i;
            while (i < line.size() && is_name_char(line[i])) ++i;
            out.push_back({Token::Kind::Name, line.substr(start, i - start), start + 1});
        } else {
            std::string shown = (static_cast<unsigned char>(c) < 0x20 || c == 0x7f)
                                    ? "\\x" + std::to_string(static_cast<unsigned char>(c))
                                    : std::string(1, c);
            throw ParseError(ParseError::Kind::Syntax, line_no, i + 1, "unexpected character '" + shown + "'",
                             {"name", "'->'", "'<-'", "'#'"});
        }
    }
    out.push_back({Token::Kind::End, {}, line.size() + 1});
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line_no, const std::unordered_set<std::string>& declared)
        : tokens_(std::move(tokens)), line_(line_no), declared_(declared) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    const Token& expect(Token::Kind kind) {
        if (peek().kind != kind) fail_expected({describe(kind)});
        return next();
    }

    [[noreturn]] void fail_expected(std::vector<std::string> expected) const {
        const auto& t = peek();
        std::string found = t.kind == Token::Kind::End ? "end of line" : "'" + std::string(t.text) + "'";
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
        msg += ", found " + found;
        throw ParseError(ParseError::Kind::Syntax, line_, t.column, msg, std::move(expected));
    }

    std::string declared_name(const Token& t) const {
        std::string name(t.text);
        if (!declared_.count(name)) {
            throw ParseError(ParseError::Kind::UndeclaredName, line_, t.column,
                             "name '" + name + "' used before it is declared by 'set'");
        }
        return name;
    }

    // NAME* up to (not including) a token of another kind.
    std::vector<std::string> names() {
        std::vector<std::string> out;
        while (peek().kind == Token::Kind::Name) out.push_back(declared_name(next()));
        return out;
    }

    void end() { expect(Token::Kind::End); }

    std::size_t line() const { return line_; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_;
    const std::unordered_set<std::string>& declared_;
};

} // namespace

RuleFileAst parse_rule_file(std::string_view text) {
    RuleFileAst ast;
    std::unordered_set<std::string> declared;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        auto line = text.substr(start, stop - start);
        start = stop + 1;
        ++line_no;

        LineParser p(tokenize(line, line_no), line_no, declared);
        if (p.peek().kind == Token::Kind::End) continue;
        if (p.peek().kind != Token::Kind::Name) p.fail_expected({"'set'", "'rule'", "'axiom'", "'seed'", "'goal'"});

        const auto keyword_token = p.next();
        const auto keyword = keyword_token.text;
        if (keyword == "set") {
            if (p.peek().kind != Token::Kind::Name) p.fail_expected({"name"});
            while (p.peek().kind == Token::Kind::Name) {
                const auto& t = p.next();
                std::string name(t.text);
                if (!declared.insert(name).second) {
                    throw ParseError(ParseError::Kind::DuplicateName, line_no, t.column,
                                     "name '" + name + "' is already declared");
                }
                ast.carrier.push_back(std::move(name));
            }
            p.end();
        } else if (keyword == "rule") {
            RuleDecl decl;
            decl.form = RuleDecl::Form::Rule;
            decl.premises = p.names();
            p.expect(Token::Kind::Arrow);
            decl.conclusion = p.declared_name(p.expect(Token::Kind::Name));
            p.end();
            ast.rules.push_back(std::move(decl));
        } else if (keyword == "axiom") {
            RuleDecl decl;
            decl.form = RuleDecl::Form::Axiom;
            decl.conclusion = p.declared_name(p.expect(Token::Kind::Name));
            p.expect(Token::Kind::BackArrow);
            decl.premises = p.names();
            p.end();
            ast.rules.push_back(std::move(decl));
        } else if (keyword == "seed") {
            if (ast.seed) {
                throw ParseError(ParseError::Kind::Syntax, line_no, keyword_token.column,
                                 "seed is already given");
            }
            ast.seed = p.names();
            p.end();
        } else if (keyword == "goal") {
            if (ast.goal) {
                throw ParseError(ParseError::Kind::Syntax, line_no, keyword_token.column,
                                 "goal is already given");
            }
            ast.goal = p.declared_name(p.expect(Token::Kind::Name));
            p.end();
        } else {
            throw ParseError(ParseError::Kind::Syntax, line_no, keyword_token.column,
                             "unknown keyword '" + std::string(keyword) + "'",
                             {"'set'", "'rule'", "'axiom'", "'seed'", "'goal'"});
        }
    }
    return ast;
}

std::string emit_rule_file(const RuleFileAst& ast) {
    std::string out;
    if (!ast.carrier.empty()) {
        out += "set";
        for (const auto& n : ast.carrier) out += " " + n;
        out += "\n";
    }
    for (const auto& r : ast.rules) {
        if (r.form == RuleDecl::Form::Rule) {
            out += "rule";
            for (const auto& n : r.premises) out += " " + n;
            out += " -> " + r.conclusion + "\n";
        } else {
            out += "axiom " + r.conclusion + " <-";
            for (const auto& n : r.premises) out += " " + n;
            out += "\n";
        }
    }
    if (ast.seed) {
        out += "seed";
        for (const auto& n : *ast.seed) out += " " + n;
        out += "\n";
    }
    if (ast.goal) out += "goal " + *ast.goal + "\n";
    return out;
}

InductiveDefinition to_definition(const RuleFileAst& ast) {
    Carrier carrier(ast.carrier);
    std::vector<Rule> rules;
    rules.reserve(ast.rules.size());
    for (const auto& r : ast.rules) {
        rules.push_back(Rule{Subset::of_names(carrier, r.premises), carrier.index_of(r.conclusion)});
    }
    return InductiveDefinition(carrier, std::move(rules));
}

Subset seed_of(const RuleFileAst& ast, const Carrier& carrier) {
    if (!ast.seed) return Subset(carrier);
    return Subset::of_names(carrier, *ast.seed);
}

CoverPresentation to_presentation(const RuleFileAst& ast) {
    Carrier base(ast.carrier);
    std::vector<CoverAxiom> axioms;
    axioms.reserve(ast.rules.size());
    for (const auto& r : ast.rules) {
        axioms.push_back(CoverAxiom{base.index_of(r.conclusion), Subset::of_names(base, r.premises)});
    }
    return CoverPresentation(base, std::move(axioms));
}

} // namespace indkernel
