#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argeo/error.hpp"
#include "argeo/literal.hpp"
#include "argeo/rule_set.hpp"

namespace argeo {

enum class RuleKind { Strict, Defeasible };

struct Rule {
    std::string id;
    Literal head;
    std::vector<Literal> body;
    RuleKind kind = RuleKind::Defeasible;

    bool is_presumption() const { return kind == RuleKind::Defeasible && body.empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
};

// "{stronger} > {weaker}", both given as defeasible rule ids.
struct ArgumentPreference {
    std::vector<std::string> stronger;
    std::vector<std::string> weaker;

    friend bool operator==(const ArgumentPreference&, const ArgumentPreference&) = default;
};

enum class OrderingMode { Explicit, Simple, LastLink };

inline std::string_view to_string(OrderingMode m) {
    switch (m) {
        case OrderingMode::Explicit: return "explicit";
        case OrderingMode::Simple: return "simple";
        case OrderingMode::LastLink: return "lastlink";
    }
    return "explicit";
}

inline std::string rule_to_string(const Rule& r) {
    std::string out = r.head.str() + (r.kind == RuleKind::Strict ? " <- " : " -< ");
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        if (i) out += ", ";
        out += r.body[i].str();
    }
    return out;
}

struct Program {
    LiteralSet facts;
    std::vector<Rule> strict_rules;
    std::vector<Rule> defeasible_rules;
    std::map<std::string, int> rule_priorities;
    std::vector<ArgumentPreference> argument_preferences;
    OrderingMode ordering_mode = OrderingMode::Explicit;

    friend bool operator==(const Program&, const Program&) = default;

    const Rule* find_rule(std::string_view id) const {
        for (const auto& r : strict_rules)
            if (r.id == id) return &r;
        for (const auto& r : defeasible_rules)
            if (r.id == id) return &r;
        return nullptr;
    }

    std::optional<std::size_t> defeasible_index(std::string_view id) const {
        for (std::size_t i = 0; i < defeasible_rules.size(); ++i)
            if (defeasible_rules[i].id == id) return i;
        return std::nullopt;
    }

    RuleSet rule_set(const std::vector<std::string>& ids) const {
        RuleSet s;
        for (const auto& id : ids) {
            auto idx = defeasible_index(id);
            if (!idx) throw ProgramError("unknown defeasible rule '" + id + "'");
            s.insert(*idx);
        }
        return s;
    }

    // Rule ids of s, sorted as strings.
    std::vector<std::string> rule_ids(RuleSet s) const {
        std::vector<std::string> ids;
        s.for_each([&](std::size_t i) { ids.push_back(defeasible_rules.at(i).id); });
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    std::string describe(RuleSet s) const {
        std::string out = "{";
        bool first = true;
        for (const auto& id : rule_ids(s)) {
            if (!first) out += ",";
            out += id;
            first = false;
        }
        return out + "}";
    }

    // Every literal mentioned anywhere, plus complements.
    LiteralSet literals() const {
        LiteralSet out;
        auto add = [&](const Literal& l) {
            out.insert(l);
            out.insert(l.complement());
        };
        for (const auto& f : facts) add(f);
        for (const auto* rules : {&strict_rules, &defeasible_rules})
            for (const auto& r : *rules) {
                add(r.head);
                for (const auto& b : r.body) add(b);
            }
        return out;
    }
};

// Smallest superset of s closed under the strict rules in rs.
inline LiteralSet strict_closure(const LiteralSet& s, const std::vector<Rule>& rs) {
    LiteralSet out = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rs) {
            if (out.count(r.head)) continue;
            bool fires = std::all_of(r.body.begin(), r.body.end(), [&](const Literal& b) { return out.count(b) > 0; });
            if (fires) {
                out.insert(r.head);
                changed = true;
            }
        }
    }
    return out;
}

inline std::optional<std::pair<Literal, Literal>> complementary_pair(const LiteralSet& s) {
    for (const auto& l : s)
        if (!l.negated && s.count(l.complement())) return std::make_pair(l, l.complement());
    return std::nullopt;
}

inline bool is_directly_consistent(const LiteralSet& s) { return !complementary_pair(s).has_value(); }

inline bool is_indirectly_consistent(const LiteralSet& s, const std::vector<Rule>& rs) {
    return is_directly_consistent(strict_closure(s, rs));
}

// Closes rs under transposition. New rules get ids "<origin>_t<k>" where k is the 1-based body position.
inline std::vector<Rule> transpose(const std::vector<Rule>& rs) {
    using Key = std::pair<Literal, std::set<Literal>>;
    std::set<Key> seen;
    std::vector<Rule> out;
    auto key_of = [](const Rule& r) { return Key(r.head, std::set<Literal>(r.body.begin(), r.body.end())); };
    for (const auto& r : rs)
        if (seen.insert(key_of(r)).second) out.push_back(r);
    for (std::size_t next = 0; next < out.size(); ++next) {
        const Rule origin = out[next];
        for (std::size_t i = 0; i < origin.body.size(); ++i) {
            Rule t;
            t.kind = RuleKind::Strict;
            t.id = origin.id + "_t" + std::to_string(i + 1);
            t.head = origin.body[i].complement();
            t.body = origin.body;
            t.body[i] = origin.head.complement();
            if (seen.insert(key_of(t)).second) out.push_back(std::move(t));
        }
    }
    return out;
}

// Transitive closure of the declared preferences as (weaker, stronger) rule-set pairs.
inline std::set<std::pair<RuleSet, RuleSet>> preference_closure(const Program& p) {
    std::set<std::pair<RuleSet, RuleSet>> rel;
    for (const auto& pref : p.argument_preferences) rel.emplace(p.rule_set(pref.weaker), p.rule_set(pref.stronger));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<RuleSet, RuleSet>> add;
        for (const auto& [a, b] : rel)
            for (const auto& [c, d] : rel)
                if (b == c && !rel.count({a, d})) add.emplace_back(a, d);
        for (auto& e : add) changed |= rel.insert(e).second;
    }
    return rel;
}

// Load-time invariants that do not depend on source positions.
inline void validate(const Program& p) {
    if (p.defeasible_rules.size() > RuleSet::capacity)
        throw ProgramError("too many defeasible rules (at most " + std::to_string(RuleSet::capacity) + ")");
    for (const auto& r : p.strict_rules)
        if (r.body.empty()) throw ProgramError("strict rule '" + r.id + "' has an empty body");
    LiteralSet closure = strict_closure(p.facts, p.strict_rules);
    if (auto pair = complementary_pair(closure))
        throw ProgramError("contradictory strict part: derives both " + pair->first.str() + " and " +
                           pair->second.str());
    for (const auto& [a, b] : preference_closure(p))
        if (a == b) throw ProgramError("cyclic argument preferences involving " + p.describe(a));
}

inline std::string print_program(const Program& p) {
    std::string out;
    for (const auto& f : p.facts) out += f.str() + ".\n";
    for (const auto* rules : {&p.strict_rules, &p.defeasible_rules})
        for (const auto& r : *rules) {
            out += "[" + r.id + "] " + rule_to_string(r) + ".\n";
        }
    for (const auto& [id, rank] : p.rule_priorities) out += "#prio " + id + " " + std::to_string(rank) + "\n";
    auto set_str = [](const std::vector<std::string>& ids) {
        std::string s = "{";
        for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
        return s + "}";
    };
    for (const auto& pref : p.argument_preferences)
        out += "#prefer " + set_str(pref.stronger) + " > " + set_str(pref.weaker) + "\n";
    out += "#ordering " + std::string(to_string(p.ordering_mode)) + "\n";
    return out;
}

}  // namespace argeo
