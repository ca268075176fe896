#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "argeo/literal.hpp"
#include "argeo/program.hpp"
#include "argeo/rule_set.hpp"

namespace argeo {

// Interned literals: ids come in complementary pairs, so complement(i) == i ^ 1.
class LiteralTable {
public:
    LiteralTable() = default;
    explicit LiteralTable(const Program& p) {
        for (const auto& l : p.literals()) intern(l);
    }

    std::size_t intern(const Literal& l) {
        Literal positive(l.atom, false);
        auto it = index_.find(positive);
        std::size_t base;
        if (it == index_.end()) {
            base = literals_.size();
            index_.emplace(positive, base);
            literals_.push_back(positive);
            literals_.push_back(positive.complement());
        } else {
            base = it->second;
        }
        return base + (l.negated ? 1 : 0);
    }

    std::optional<std::size_t> find(const Literal& l) const {
        auto it = index_.find(Literal(l.atom, false));
        if (it == index_.end()) return std::nullopt;
        return it->second + (l.negated ? 1 : 0);
    }

    const Literal& at(std::size_t i) const { return literals_.at(i); }
    std::size_t size() const { return literals_.size(); }
    static std::size_t complement(std::size_t i) { return i ^ 1U; }

private:
    std::vector<Literal> literals_;
    std::map<Literal, std::size_t> index_;
};

struct CompiledRule {
    std::size_t head;
    std::vector<std::size_t> body;
};

using LiteralMask = std::vector<char>;

// Program compiled to literal ids for fast forward chaining.
class RuleBase {
public:
    explicit RuleBase(const Program& p) : table_(p) {
        for (const auto& f : p.facts) facts_.push_back(table_.intern(f));
        auto compile = [&](const Rule& r) {
            CompiledRule c{table_.intern(r.head), {}};
            for (const auto& b : r.body) c.body.push_back(table_.intern(b));
            return c;
        };
        for (const auto& r : p.strict_rules) strict_.push_back(compile(r));
        for (const auto& r : p.defeasible_rules) defeasible_.push_back(compile(r));
    }

    const LiteralTable& table() const { return table_; }
    const std::vector<std::size_t>& facts() const { return facts_; }
    const std::vector<CompiledRule>& strict() const { return strict_; }
    const std::vector<CompiledRule>& defeasible() const { return defeasible_; }

    LiteralMask empty_mask() const { return LiteralMask(table_.size(), 0); }

    // Closes `known` under the strict rules and the defeasible rules in `extra`.
    void close(LiteralMask& known, RuleSet extra = {}) const {
        bool changed = true;
        auto fire = [&](const CompiledRule& r) {
            if (known[r.head]) return;
            for (auto b : r.body)
                if (!known[b]) return;
            known[r.head] = 1;
            changed = true;
        };
        while (changed) {
            changed = false;
            for (const auto& r : strict_) fire(r);
            extra.for_each([&](std::size_t i) { fire(defeasible_[i]); });
        }
    }

    // Literals derivable from the facts, the strict rules and the defeasible rules in extra.
    LiteralMask derivable(RuleSet extra = {}) const {
        LiteralMask m = empty_mask();
        for (auto f : facts_) m[f] = 1;
        close(m, extra);
        return m;
    }

    static bool consistent(const LiteralMask& m) {
        for (std::size_t i = 0; i + 1 < m.size(); i += 2)
            if (m[i] && m[i + 1]) return false;
        return true;
    }

private:
    LiteralTable table_;
    std::vector<std::size_t> facts_;
    std::vector<CompiledRule> strict_;
    std::vector<CompiledRule> defeasible_;
};

}  // namespace argeo
