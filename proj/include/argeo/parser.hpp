#pragma once

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "argeo/error.hpp"
#include "argeo/program.hpp"

namespace argeo {

namespace detail {

class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : text_(text) {}

    Program run() {
        while (true) {
            skip_space(true);
            if (at_end()) break;
            if (peek() == '#')
                directive();
            else
                statement();
        }
        assign_ids();
        resolve_references();
        validate(program_);
        return std::move(program_);
    }

private:
    struct Pos {
        std::size_t line, column;
    };
    struct PendingRule {
        Rule rule;
        bool labelled;
        Pos where;
    };
    struct PendingRef {
        std::string id;
        Pos where;
        bool needs_defeasible;
    };

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Program program_;
    std::vector<PendingRule> strict_;
    std::vector<PendingRule> defeasible_;
    std::vector<PendingRef> refs_;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
    Pos here() const { return {line_, column_}; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column_, msg); }
    [[noreturn]] static void fail_at(Pos p, const std::string& msg) { throw ParseError(p.line, p.column, msg); }

    // Skips blanks and '%' comments; stays on the current line unless cross_lines.
    void skip_space(bool cross_lines) {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == '\n') {
                if (!cross_lines) return;
                advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string identifier(const char* what) {
        if (!ident_char(peek())) fail(std::string("expected ") + what);
        std::string out;
        while (ident_char(peek())) {
            out += peek();
            advance();
        }
        return out;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    Literal literal() {
        bool neg = false;
        if (peek() == '~') {
            neg = true;
            advance();
        }
        return Literal(identifier("literal"), neg);
    }

    void statement() {
        Pos start = here();
        std::string label;
        bool labelled = false;
        if (peek() == '[') {
            advance();
            skip_space(true);
            label = identifier("rule label");
            skip_space(true);
            expect(']');
            skip_space(true);
            labelled = true;
        }
        Literal head = literal();
        skip_space(true);
        if (peek() == '.') {
            if (labelled) fail_at(start, "facts cannot carry a label");
            advance();
            program_.facts.insert(head);
            return;
        }
        RuleKind kind;
        if (peek() == '<' && peek(1) == '-') {
            kind = RuleKind::Strict;
        } else if (peek() == '-' && peek(1) == '<') {
            kind = RuleKind::Defeasible;
        } else {
            fail("expected '.', '<-' or '-<'");
        }
        advance();
        advance();
        skip_space(true);
        Rule rule;
        rule.id = label;
        rule.head = head;
        rule.kind = kind;
        if (peek() != '.') {
            while (true) {
                rule.body.push_back(literal());
                skip_space(true);
                if (peek() != ',') break;
                advance();
                skip_space(true);
            }
        }
        if (kind == RuleKind::Strict && rule.body.empty()) fail("strict rule needs a non-empty body");
        expect('.');
        (kind == RuleKind::Strict ? strict_ : defeasible_).push_back({std::move(rule), labelled, start});
    }

    std::vector<std::string> argset() {
        expect('{');
        skip_space(false);
        std::vector<std::string> ids;
        if (peek() != '}') {
            while (true) {
                Pos where = here();
                ids.push_back(identifier("rule id"));
                refs_.push_back({ids.back(), where, true});
                skip_space(false);
                if (peek() != ',') break;
                advance();
                skip_space(false);
            }
        }
        expect('}');
        return ids;
    }

    void directive() {
        Pos start = here();
        advance();
        std::string name = identifier("directive name");
        skip_space(false);
        if (name == "prio") {
            Pos where = here();
            std::string id = identifier("rule id");
            skip_space(false);
            std::string digits;
            if (peek() == '-') {
                digits += '-';
                advance();
            }
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            if (digits.empty() || digits == "-") fail("expected integer priority");
            if (program_.rule_priorities.count(id)) fail_at(where, "duplicate priority for rule '" + id + "'");
            program_.rule_priorities[id] = std::stoi(digits);
            refs_.push_back({id, where, true});
        } else if (name == "prefer") {
            ArgumentPreference pref;
            pref.stronger = argset();
            skip_space(false);
            expect('>');
            skip_space(false);
            pref.weaker = argset();
            program_.argument_preferences.push_back(std::move(pref));
        } else if (name == "ordering") {
            std::string mode = identifier("ordering mode");
            if (mode == "explicit")
                program_.ordering_mode = OrderingMode::Explicit;
            else if (mode == "simple")
                program_.ordering_mode = OrderingMode::Simple;
            else if (mode == "lastlink")
                program_.ordering_mode = OrderingMode::LastLink;
            else
                fail_at(start, "unknown ordering mode '" + mode + "'");
        } else {
            fail_at(start, "unknown directive '#" + name + "'");
        }
        skip_space(false);
        if (peek() == '.') advance();
        skip_space(false);
        if (!at_end() && peek() != '\n') fail("unexpected text after directive");
    }

    void assign_ids() {
        std::set<std::string> seen;
        auto take = [&](std::vector<PendingRule>& rules, const char* prefix, std::vector<Rule>& into) {
            for (std::size_t i = 0; i < rules.size(); ++i) {
                auto& pr = rules[i];
                if (!pr.labelled) pr.rule.id = prefix + std::to_string(i + 1);
                if (!seen.insert(pr.rule.id).second) fail_at(pr.where, "duplicate rule label '" + pr.rule.id + "'");
                into.push_back(std::move(pr.rule));
            }
        };
        take(strict_, "s", program_.strict_rules);
        take(defeasible_, "d", program_.defeasible_rules);
    }

    void resolve_references() const {
        for (const auto& ref : refs_) {
            const Rule* r = program_.find_rule(ref.id);
            if (!r) fail_at(ref.where, "unknown rule '" + ref.id + "'");
            if (ref.needs_defeasible && r->kind != RuleKind::Defeasible)
                fail_at(ref.where, "rule '" + ref.id + "' is not defeasible");
        }
    }
};

}  // namespace detail

inline Program parse_program(std::string_view text) { return detail::ProgramParser(text).run(); }

inline Program load_program(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_program(ss.str());
}

}  // namespace argeo
