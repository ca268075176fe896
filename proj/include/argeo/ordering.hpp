#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argeo/error.hpp"
#include "argeo/program.hpp"
#include "argeo/rule_set.hpp"

namespace argeo {

enum class Comparison { Less, Greater, Incomparable };

// What an ordering needs to know about an argument, for either engine.
struct Strength {
    RuleSet defrules;
    RuleSet last_rules;
};

class ArgumentOrdering {
public:
    explicit ArgumentOrdering(const Program& p) : ArgumentOrdering(p, p.ordering_mode) {}

    ArgumentOrdering(const Program& p, OrderingMode mode) : mode_(mode), ranks_(p.defeasible_rules.size()) {
        for (std::size_t i = 0; i < p.defeasible_rules.size(); ++i) {
            ids_.push_back(p.defeasible_rules[i].id);
            auto it = p.rule_priorities.find(p.defeasible_rules[i].id);
            if (it != p.rule_priorities.end()) ranks_[i] = it->second;
        }
        for (const auto& [weaker, stronger] : preference_closure(p)) prefs_.emplace(weaker.bits(), stronger.bits());
    }

    OrderingMode mode() const { return mode_; }

    // Less means a is strictly weaker than b.
    Comparison compare(const Strength& a, const Strength& b) const {
        switch (mode_) {
            case OrderingMode::Simple:
                if (!a.defrules.empty() && b.defrules.empty()) return Comparison::Less;
                if (a.defrules.empty() && !b.defrules.empty()) return Comparison::Greater;
                return Comparison::Incomparable;
            case OrderingMode::LastLink: return elitist(a.last_rules, b.last_rules);
            case OrderingMode::Explicit:
                if (prefs_.count({a.defrules.bits(), b.defrules.bits()})) return Comparison::Less;
                if (prefs_.count({b.defrules.bits(), a.defrules.bits()})) return Comparison::Greater;
                return Comparison::Incomparable;
        }
        return Comparison::Incomparable;
    }

    bool weaker(const Strength& a, const Strength& b) const { return compare(a, b) == Comparison::Less; }

private:
    OrderingMode mode_;
    std::vector<std::optional<int>> ranks_;
    std::vector<std::string> ids_;
    std::set<std::pair<std::uint64_t, std::uint64_t>> prefs_;

    int min_rank(RuleSet s) const {
        std::optional<int> best;
        s.for_each([&](std::size_t i) {
            if (!ranks_.at(i)) throw EngineError("priority missing for rule '" + ids_.at(i) + "'");
            best = best ? std::min(*best, *ranks_[i]) : *ranks_[i];
        });
        return *best;
    }

    // An empty set (strict argument) beats any non-empty one.
    Comparison elitist(RuleSet a, RuleSet b) const {
        if (a.empty() && b.empty()) return Comparison::Incomparable;
        if (a.empty()) return Comparison::Greater;
        if (b.empty()) return Comparison::Less;
        int ra = min_rank(a), rb = min_rank(b);
        if (ra < rb) return Comparison::Less;
        if (ra > rb) return Comparison::Greater;
        return Comparison::Incomparable;
    }
};

}  // namespace argeo
