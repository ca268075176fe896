#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "argeo/framework.hpp"
#include "argeo/ordering.hpp"
#include "argeo/program.hpp"
#include "argeo/rule_base.hpp"

namespace argeo {

enum class StepKind { Fact, Presumption, RuleApplication };

struct DerivationStep {
    Literal literal;
    StepKind kind;
    std::string rule_id;  // empty for facts
};

// Every rule application's body occurs earlier; the last step is the derived literal.
struct Derivation {
    std::vector<DerivationStep> steps;

    const Literal& conclusion() const { return steps.back().literal; }

    std::vector<Literal> sequence() const {
        std::vector<Literal> out;
        for (const auto& s : steps) out.push_back(s.literal);
        return out;
    }
};

struct DelpArgument {
    RuleSet rules;
    Literal conclusion;
    Derivation witness;
    RuleSet last_rules;

    Strength strength() const { return {rules, last_rules}; }
};

enum class DefeatKind { Proper, Blocking };

// The standard counterargument relation, or the two variants used for correspondence.
enum class DelpAttack { Rebut, ARebut, UARebut };

inline std::string_view to_string(DelpAttack k) {
    switch (k) {
        case DelpAttack::Rebut: return "rebut";
        case DelpAttack::ARebut: return "a-rebut";
        case DelpAttack::UARebut: return "ua-rebut";
    }
    return "rebut";
}

struct Counterargument {
    std::size_t attacker;
    Literal point;
    std::size_t subargument;
};

// Arguments alternate supporting (even index) and interfering (odd index);
// defeat_kinds[i] is how arguments[i + 1] defeats arguments[i].
struct Line {
    std::vector<std::size_t> arguments;
    std::vector<DefeatKind> defeat_kinds;
};

enum class Mark { Undefeated, Defeated };

struct TreeNode {
    std::size_t argument;
    std::optional<DefeatKind> kind;  // empty at the root
    Mark mark = Mark::Undefeated;
    std::vector<TreeNode> children;
};

struct DialecticalTree {
    TreeNode root;
};

// Recomputes the mark of n from its children alone.
inline Mark mark(const TreeNode& n) {
    for (const auto& c : n.children)
        if (mark(c) == Mark::Undefeated) return Mark::Defeated;
    return Mark::Undefeated;
}

struct WarrantResult {
    bool warranted = false;
    std::optional<DialecticalTree> certificate;
    std::vector<DialecticalTree> trees;
};

class DelpEngine {
public:
    explicit DelpEngine(Program p) : DelpEngine(std::move(p), std::nullopt) {}

    DelpEngine(Program p, std::optional<OrderingMode> mode)
        : program_(std::move(p)),
          base_(program_),
          ordering_(program_, mode.value_or(program_.ordering_mode)) {
        enumerate();
    }

    const Program& program() const { return program_; }
    const RuleBase& rule_base() const { return base_; }
    const ArgumentOrdering& ordering() const { return ordering_; }

    // Shallowest derivation; each literal is derived once, by the first rule that becomes applicable.
    std::optional<Derivation> derive(RuleSet extra, const Literal& goal) const {
        auto gid = base_.table().find(goal);
        if (!gid) return std::nullopt;
        const std::size_t n = base_.table().size();
        constexpr std::size_t none = static_cast<std::size_t>(-1);
        struct Why {
            StepKind kind;
            std::size_t rule = 0;
            bool strict = false;
        };
        std::vector<std::size_t> level(n, none);
        std::vector<Why> why(n);
        for (auto f : base_.facts()) {
            level[f] = 0;
            why[f] = {StepKind::Fact};
        }
        for (std::size_t round = 1;; ++round) {
            std::vector<std::pair<std::size_t, Why>> found;
            auto consider = [&](const CompiledRule& r, Why w) {
                if (level[r.head] != none) return;
                for (auto b : r.body)
                    if (level[b] == none || level[b] >= round) return;
                found.emplace_back(r.head, w);
            };
            for (std::size_t i = 0; i < base_.strict().size(); ++i)
                consider(base_.strict()[i], {StepKind::RuleApplication, i, true});
            extra.for_each([&](std::size_t i) {
                const auto& r = base_.defeasible()[i];
                consider(r, {r.body.empty() ? StepKind::Presumption : StepKind::RuleApplication, i, false});
            });
            if (found.empty()) break;
            for (auto& [lit, w] : found)
                if (level[lit] == none) {
                    level[lit] = round;
                    why[lit] = w;
                }
        }
        if (level[*gid] == none) return std::nullopt;
        Derivation d;
        std::vector<char> emitted(n, 0);
        auto emit = [&](auto&& self, std::size_t lit) -> void {
            if (emitted[lit]) return;
            emitted[lit] = 1;
            const Why& w = why[lit];
            DerivationStep step{base_.table().at(lit), w.kind, {}};
            if (w.kind != StepKind::Fact) {
                const auto& r = w.strict ? base_.strict()[w.rule] : base_.defeasible()[w.rule];
                for (auto b : r.body) self(self, b);
                step.rule_id = w.strict ? program_.strict_rules[w.rule].id : program_.defeasible_rules[w.rule].id;
            }
            d.steps.push_back(std::move(step));
        };
        emit(emit, *gid);
        return d;
    }

    bool has_strict_derivation(const Literal& goal) const { return derive(RuleSet{}, goal).has_value(); }

    // Every argument, sorted by conclusion and then by rule ids.
    const std::vector<DelpArgument>& arguments() const { return args_; }
    const DelpArgument& operator[](std::size_t i) const { return args_.at(i); }
    std::size_t size() const { return args_.size(); }

    std::vector<std::size_t> arguments_for(const Literal& goal) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < args_.size(); ++i)
            if (args_[i].conclusion == goal) out.push_back(i);
        return out;
    }

    std::optional<std::size_t> find(RuleSet rules, const Literal& conclusion) const {
        for (std::size_t i = 0; i < args_.size(); ++i)
            if (args_[i].rules == rules && args_[i].conclusion == conclusion) return i;
        return std::nullopt;
    }

    // Π ∪ rules derives no complementary pair.
    bool consistent(RuleSet rules) const {
        auto it = consistency_.find(rules.bits());
        if (it != consistency_.end()) return it->second;
        bool ok = RuleBase::consistent(base_.derivable(rules));
        consistency_.emplace(rules.bits(), ok);
        return ok;
    }

    // Π ∪ {l1, l2} is contradictory.
    bool disagree(const Literal& l1, const Literal& l2) const {
        auto a = base_.table().find(l1), b = base_.table().find(l2);
        if (!a || !b) return l1 == l2.complement();
        return disagree_ids(*a, *b);
    }

    std::string describe(std::size_t i) const {
        return "<" + program_.describe(args_.at(i).rules) + ", " + args_[i].conclusion.str() + ">";
    }

    // Arguments rooted at a node of some derivation tree of argument i, including i.
    const std::vector<std::size_t>& subarguments(std::size_t i) const { return subs_.at(i); }

    bool is_subargument(std::size_t sub, std::size_t of) const {
        return std::binary_search(subs_.at(of).begin(), subs_.at(of).end(), sub);
    }

    std::vector<Counterargument> counterarguments(std::size_t target, DelpAttack kind = DelpAttack::Rebut) const {
        std::vector<Counterargument> out;
        for (std::size_t a = 0; a < args_.size(); ++a)
            for (auto s : attack_points(a, target, kind)) out.push_back({a, args_[s].conclusion, s});
        return out;
    }

    // Disagreement subarguments of target at which attacker counter-argues.
    std::vector<std::size_t> attack_points(std::size_t attacker, std::size_t target,
                                           DelpAttack kind = DelpAttack::Rebut) const {
        std::vector<std::size_t> out;
        std::size_t ca = conc_[attacker];
        for (const auto& pt : points_.at(target)) {
            bool hit = false;
            switch (kind) {
                case DelpAttack::Rebut: hit = disagree_ids(ca, pt.literal); break;
                case DelpAttack::ARebut: hit = ca == LiteralTable::complement(pt.literal) && pt.defeasible_top; break;
                case DelpAttack::UARebut: hit = ca == LiteralTable::complement(pt.literal) && pt.defeasible; break;
            }
            if (hit && std::find(out.begin(), out.end(), pt.subargument) == out.end()) out.push_back(pt.subargument);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::optional<DefeatKind> defeater_kind(std::size_t attacker, std::size_t subargument) const {
        switch (ordering_.compare(args_.at(subargument).strength(), args_.at(attacker).strength())) {
            case Comparison::Less: return DefeatKind::Proper;
            case Comparison::Greater: return std::nullopt;
            case Comparison::Incomparable: return DefeatKind::Blocking;
        }
        return std::nullopt;
    }

    // Proper if some attack point yields a proper defeat, otherwise blocking if some point does.
    std::optional<DefeatKind> defeat(std::size_t attacker, std::size_t target,
                                     DelpAttack kind = DelpAttack::Rebut) const {
        if (kind == DelpAttack::Rebut) return defeat_table_.at(attacker * args_.size() + target);
        return compute_defeat(attacker, target, kind);
    }

    // (attacker, kind) for every defeater of target, in tree child order.
    const std::vector<std::pair<std::size_t, DefeatKind>>& defeaters(std::size_t target) const {
        return defeaters_.at(target);
    }

    bool concordant(const std::vector<std::size_t>& set) const {
        RuleSet all;
        for (auto a : set) all |= args_.at(a).rules;
        return consistent(all);
    }

    bool acceptable_extension(const Line& line, std::size_t candidate) const {
        if (line.arguments.empty()) return true;
        auto kind = defeat(candidate, line.arguments.back());
        if (!kind) return false;
        if (!line.defeat_kinds.empty() && line.defeat_kinds.back() == DefeatKind::Blocking &&
            *kind != DefeatKind::Proper)
            return false;
        for (auto earlier : line.arguments)
            if (is_subargument(candidate, earlier)) return false;
        std::vector<std::size_t> side{candidate};
        for (std::size_t i = line.arguments.size() % 2; i < line.arguments.size(); i += 2)
            side.push_back(line.arguments[i]);
        return concordant(side);
    }

    DialecticalTree build_tree(std::size_t root) const {
        Line line;
        line.arguments.push_back(root);
        DialecticalTree t{grow(line, std::nullopt)};
        return t;
    }

    WarrantResult warrant(const Literal& goal) const {
        WarrantResult r;
        for (auto a : arguments_for(goal)) {
            r.trees.push_back(build_tree(a));
            if (!r.warranted && r.trees.back().root.mark == Mark::Undefeated) {
                r.warranted = true;
                r.certificate = r.trees.back();
            }
        }
        return r;
    }

    bool warranted_argument(std::size_t a) const { return build_tree(a).root.mark == Mark::Undefeated; }

private:
    Program program_;
    RuleBase base_;
    ArgumentOrdering ordering_;
    std::vector<DelpArgument> args_;
    std::vector<std::size_t> conc_;
    std::vector<std::vector<std::size_t>> by_conc_;
    std::vector<std::vector<std::size_t>> subs_;

    // A node of a derivation tree: its literal, the subargument it induces, and how it was derived.
    struct Point {
        std::size_t literal;
        std::size_t subargument;
        bool defeasible_top;
        bool defeasible;
        auto operator<=>(const Point&) const = default;
    };
    std::vector<std::vector<Point>> points_;
    std::vector<std::optional<DefeatKind>> defeat_table_;
    std::vector<std::vector<std::pair<std::size_t, DefeatKind>>> defeaters_;
    mutable std::unordered_map<std::uint64_t, bool> consistency_;
    mutable std::map<std::pair<std::size_t, std::size_t>, bool> disagreement_;

    bool disagree_ids(std::size_t a, std::size_t b) const {
        if (a == LiteralTable::complement(b)) return true;
        auto key = std::minmax(a, b);
        auto it = disagreement_.find(key);
        if (it != disagreement_.end()) return it->second;
        LiteralMask m = base_.empty_mask();
        for (auto f : base_.facts()) m[f] = 1;
        m[a] = m[b] = 1;
        base_.close(m);
        bool result = !RuleBase::consistent(m);
        disagreement_.emplace(key, result);
        return result;
    }

    struct Node {
        std::size_t literal;
        RuleSet rules;
        bool defeasible_top;
        auto operator<=>(const Node&) const = default;
    };
    // One derivation tree, summarized by its defeasible rules and its nodes.
    struct Tree {
        RuleSet rules;
        std::set<Node> nodes;
        auto operator<=>(const Tree&) const = default;
    };

    // Trees for lit using facts, strict rules and the rules in allowed, never repeating a literal on a path.
    std::set<Tree> trees(std::size_t lit, RuleSet allowed, std::vector<char>& on_path) const {
        std::set<Tree> out;
        for (auto f : base_.facts())
            if (f == lit) out.insert({RuleSet{}, {{lit, RuleSet{}, false}}});
        on_path[lit] = 1;
        auto apply = [&](const CompiledRule& r, std::optional<std::size_t> defeasible) {
            for (auto b : r.body)
                if (on_path[b]) return;
            std::vector<Tree> acc{{defeasible ? RuleSet::single(*defeasible) : RuleSet{}, {}}};
            for (auto b : r.body) {
                auto sub = trees(b, allowed, on_path);
                std::vector<Tree> next;
                for (const auto& partial : acc)
                    for (const auto& t : sub) {
                        Tree merged{partial.rules | t.rules, partial.nodes};
                        merged.nodes.insert(t.nodes.begin(), t.nodes.end());
                        next.push_back(std::move(merged));
                    }
                acc = std::move(next);
                if (acc.empty()) return;
            }
            for (auto& t : acc) {
                t.nodes.insert({lit, t.rules, defeasible.has_value()});
                out.insert(std::move(t));
            }
        };
        for (const auto& r : base_.strict())
            if (r.head == lit) apply(r, std::nullopt);
        allowed.for_each([&](std::size_t i) {
            if (base_.defeasible()[i].head == lit) apply(base_.defeasible()[i], i);
        });
        on_path[lit] = 0;
        return out;
    }

    // Nodes of every derivation tree of argument i, each mapped to the argument it induces.
    std::vector<Point> structure(std::size_t i) const {
        std::vector<char> on_path(base_.table().size(), 0);
        std::set<Point> points;
        for (const auto& t : trees(conc_[i], args_[i].rules, on_path)) {
            if (t.rules != args_[i].rules) continue;
            for (const auto& n : t.nodes) {
                // The node's rules may be non-minimal for its literal; every minimal subset induces a subargument.
                for (std::size_t j : by_conc_[n.literal])
                    if (args_[j].rules.subset_of(n.rules))
                        points.insert({n.literal, j, n.defeasible_top, !n.rules.empty()});
            }
        }
        return {points.begin(), points.end()};
    }

    std::optional<DefeatKind> compute_defeat(std::size_t attacker, std::size_t target, DelpAttack kind) const {
        std::optional<DefeatKind> best;
        for (auto s : attack_points(attacker, target, kind)) {
            auto k = defeater_kind(attacker, s);
            if (k == DefeatKind::Proper) return k;
            if (k) best = k;
        }
        return best;
    }

    // Minimal defeasible-rule sets per literal by fixpoint over proof trees, then the consistency filter.
    void enumerate() {
        const std::size_t n = base_.table().size();
        std::vector<std::vector<RuleSet>> supports(n);
        auto insert = [](std::vector<RuleSet>& anti, RuleSet s) {
            for (auto t : anti)
                if (t.subset_of(s)) return false;
            anti.erase(std::remove_if(anti.begin(), anti.end(), [&](RuleSet t) { return s.subset_of(t); }), anti.end());
            anti.push_back(s);
            return true;
        };
        for (auto f : base_.facts()) insert(supports[f], RuleSet{});
        struct Item {
            const CompiledRule* rule;
            std::optional<std::size_t> defeasible;
        };
        std::vector<Item> items;
        for (const auto& r : base_.strict()) items.push_back({&r, std::nullopt});
        for (std::size_t i = 0; i < base_.defeasible().size(); ++i) items.push_back({&base_.defeasible()[i], i});
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& it : items) {
                RuleSet own = it.defeasible ? RuleSet::single(*it.defeasible) : RuleSet{};
                const auto& body = it.rule->body;
                std::vector<RuleSet> acc{own};
                for (auto b : body) {
                    std::vector<RuleSet> next;
                    for (auto partial : acc)
                        for (auto s : supports[b]) insert(next, partial | s);
                    acc = std::move(next);
                    if (acc.empty()) break;
                }
                for (auto s : acc) changed |= insert(supports[it.rule->head], s);
            }
        }
        for (std::size_t lit = 0; lit < n; ++lit)
            for (auto s : supports[lit]) {
                if (!consistent(s)) continue;
                DelpArgument a;
                a.rules = s;
                a.conclusion = base_.table().at(lit);
                a.witness = *derive(s, a.conclusion);
                a.last_rules = last_rules_of(a.witness);
                args_.push_back(std::move(a));
            }
        std::sort(args_.begin(), args_.end(), [&](const DelpArgument& x, const DelpArgument& y) {
            if (x.conclusion != y.conclusion) return x.conclusion < y.conclusion;
            return program_.rule_ids(x.rules) < program_.rule_ids(y.rules);
        });
        by_conc_.resize(n);
        for (std::size_t i = 0; i < args_.size(); ++i) {
            conc_.push_back(*base_.table().find(args_[i].conclusion));
            by_conc_[conc_[i]].push_back(i);
        }
        subs_.resize(args_.size());
        points_.resize(args_.size());
        for (std::size_t i = 0; i < args_.size(); ++i) {
            points_[i] = structure(i);
            for (const auto& pt : points_[i]) subs_[i].push_back(pt.subargument);
            std::sort(subs_[i].begin(), subs_[i].end());
            subs_[i].erase(std::unique(subs_[i].begin(), subs_[i].end()), subs_[i].end());
        }
        defeat_table_.resize(args_.size() * args_.size());
        defeaters_.resize(args_.size());
        for (std::size_t t = 0; t < args_.size(); ++t) {
            for (std::size_t a = 0; a < args_.size(); ++a) {
                auto k = compute_defeat(a, t, DelpAttack::Rebut);
                defeat_table_[a * args_.size() + t] = k;
                if (k) defeaters_[t].emplace_back(a, *k);
            }
            std::stable_sort(defeaters_[t].begin(), defeaters_[t].end(), [&](const auto& x, const auto& y) {
                return program_.rule_ids(args_[x.first].rules) < program_.rule_ids(args_[y.first].rules);
            });
        }
    }

    RuleSet last_rules_of(const Derivation& d) const {
        std::map<Literal, RuleSet> ldr;
        for (const auto& step : d.steps) {
            RuleSet s;
            if (step.kind != StepKind::Fact) {
                const Rule* r = program_.find_rule(step.rule_id);
                if (r->kind == RuleKind::Defeasible)
                    s = RuleSet::single(*program_.defeasible_index(r->id));
                else
                    for (const auto& b : r->body) s |= ldr[b];
            }
            ldr[step.literal] = s;
        }
        return ldr[d.conclusion()];
    }

    TreeNode grow(Line& line, std::optional<DefeatKind> kind) const {
        TreeNode node{line.arguments.back(), kind, Mark::Undefeated, {}};
        for (const auto& [attacker, k] : defeaters_[node.argument]) {
            if (!acceptable_extension(line, attacker)) continue;
            line.arguments.push_back(attacker);
            line.defeat_kinds.push_back(k);
            node.children.push_back(grow(line, k));
            line.arguments.pop_back();
            line.defeat_kinds.pop_back();
        }
        node.mark = Mark::Undefeated;
        for (const auto& c : node.children)
            if (c.mark == Mark::Undefeated) node.mark = Mark::Defeated;
        return node;
    }
};

inline std::optional<Derivation> derive(const Program& p, RuleSet extra, const Literal& goal) {
    return DelpEngine(p).derive(extra, goal);
}

inline bool has_strict_derivation(const Program& p, const Literal& goal) {
    return DelpEngine(p).has_strict_derivation(goal);
}

inline std::vector<DelpArgument> delp_arguments(const Program& p, const Literal& goal) {
    DelpEngine e(p);
    std::vector<DelpArgument> out;
    for (auto i : e.arguments_for(goal)) out.push_back(e[i]);
    return out;
}

inline bool disagree(const Program& p, const Literal& l1, const Literal& l2) { return DelpEngine(p).disagree(l1, l2); }

inline std::string_view mark_letter(Mark m) { return m == Mark::Undefeated ? "U" : "D"; }

namespace detail {

inline void tree_text(const DelpEngine& e, const TreeNode& n, std::size_t depth, std::string& out) {
    out += std::string(2 * depth, ' ') + e.describe(n.argument) + " [" + std::string(mark_letter(n.mark)) + "]";
    if (n.kind) out += n.kind == DefeatKind::Proper ? " proper" : " blocking";
    out += "\n";
    for (const auto& c : n.children) tree_text(e, c, depth + 1, out);
}

inline void tree_dot(const DelpEngine& e, const TreeNode& n, std::size_t& counter, std::string& out) {
    std::size_t me = counter++;
    const auto& a = e[n.argument];
    out += "  t" + std::to_string(me) + " [label=\"" + dot_escape(a.conclusion.str()) + "\\n" +
           dot_escape(e.program().describe(a.rules)) + "\\n" + std::string(mark_letter(n.mark)) + "\"];\n";
    for (const auto& c : n.children) {
        std::size_t child = counter;
        tree_dot(e, c, counter, out);
        out += "  t" + std::to_string(me) + " -> t" + std::to_string(child) +
               (c.kind == DefeatKind::Blocking ? " [style=dashed]" : "") + ";\n";
    }
}

}  // namespace detail

inline std::string tree_to_text(const DelpEngine& e, const DialecticalTree& t) {
    std::string out;
    detail::tree_text(e, t.root, 0, out);
    return out;
}

inline std::string tree_to_dot(const DelpEngine& e, const DialecticalTree& t) {
    std::string out = "digraph tree {\n";
    std::size_t counter = 0;
    detail::tree_dot(e, t.root, counter, out);
    return out + "}\n";
}

}  // namespace argeo
