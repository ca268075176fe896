#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "argeo/error.hpp"
#include "argeo/framework.hpp"
#include "argeo/ordering.hpp"
#include "argeo/program.hpp"
#include "argeo/rule_base.hpp"

namespace argeo {

inline constexpr std::size_t builtin_argument_budget = 100000;

// ARGEO_ARG_BUDGET overrides the built-in cap when it holds a positive integer.
inline std::size_t default_argument_budget() {
    if (const char* env = std::getenv("ARGEO_ARG_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return builtin_argument_budget;
}

struct RuleRef {
    RuleKind kind;
    std::size_t index;

    friend bool operator==(const RuleRef&, const RuleRef&) = default;
    friend auto operator<=>(const RuleRef&, const RuleRef&) = default;
};

using ArgumentId = std::size_t;

struct AspicArgument {
    Literal conclusion;
    std::optional<RuleRef> top_rule;  // empty for premise arguments
    std::vector<ArgumentId> children;  // conclusions match the rule body in order
    LiteralSet premises;
    std::vector<ArgumentId> sub;  // sorted, includes the argument itself
    std::vector<RuleRef> rules;   // sorted
    RuleSet defrules;
    RuleSet last_rules;

    bool is_premise() const { return !top_rule.has_value(); }
    bool is_strict() const { return defrules.empty(); }
    bool has_defeasible_top() const { return top_rule && top_rule->kind == RuleKind::Defeasible; }
    Strength strength() const { return {defrules, last_rules}; }
};

enum class AttackKind { Rebut, URebut, DlpRebut };

inline std::string_view to_string(AttackKind k) {
    switch (k) {
        case AttackKind::Rebut: return "rebut";
        case AttackKind::URebut: return "urebut";
        case AttackKind::DlpRebut: return "dlprebut";
    }
    return "rebut";
}

// All arguments of a program, built bottom-up in rounds. A literal never repeats along a
// root-to-leaf path, which keeps cyclic rule sets finite.
class AspicTheory {
public:
    explicit AspicTheory(Program p, std::size_t budget = default_argument_budget())
        : program_(std::move(p)), base_(program_) {
        words_ = (base_.table().size() + 63) / 64;
        by_conclusion_.resize(base_.table().size());
        build(budget);
    }

    const Program& program() const { return program_; }
    const RuleBase& rule_base() const { return base_; }
    std::size_t size() const { return args_.size(); }
    const std::vector<AspicArgument>& arguments() const { return args_; }
    const AspicArgument& operator[](ArgumentId a) const { return args_.at(a); }

    std::vector<ArgumentId> arguments_for(const Literal& l) const {
        auto id = base_.table().find(l);
        if (!id) return {};
        return by_conclusion_[*id];
    }

    const Rule& rule(RuleRef r) const {
        return r.kind == RuleKind::Strict ? program_.strict_rules.at(r.index) : program_.defeasible_rules.at(r.index);
    }

    std::string label(ArgumentId a) const { return "A" + std::to_string(a + 1); }

    // Nested notation, e.g. "[p, [p => q] -> r]".
    std::string render(ArgumentId a) const {
        const auto& arg = args_.at(a);
        if (arg.is_premise()) return arg.conclusion.str();
        std::string out = "[";
        for (std::size_t i = 0; i < arg.children.size(); ++i) out += (i ? ", " : "") + render(arg.children[i]);
        out += arg.children.empty() ? "" : " ";
        out += arg.top_rule->kind == RuleKind::Strict ? "-> " : "=> ";
        return out + arg.conclusion.str() + "]";
    }

    // Conc(Sub(a)).
    LiteralSet sub_conclusions(ArgumentId a) const {
        LiteralSet out;
        for (auto s : args_.at(a).sub) out.insert(args_[s].conclusion);
        return out;
    }

    std::vector<ArgumentId> rebuts(ArgumentId a, ArgumentId b) const {
        std::vector<ArgumentId> w;
        std::size_t target = LiteralTable::complement(conc_[a]);
        for (auto s : args_.at(b).sub)
            if (conc_[s] == target && args_[s].has_defeasible_top()) w.push_back(s);
        return w;
    }

    std::vector<ArgumentId> u_rebuts(ArgumentId a, ArgumentId b) const {
        std::vector<ArgumentId> w;
        std::size_t target = LiteralTable::complement(conc_[a]);
        for (auto s : args_.at(b).sub)
            if (conc_[s] == target && !args_[s].is_strict()) w.push_back(s);
        return w;
    }

    // {Conc(a), Conc(b')} together with the facts is indirectly inconsistent.
    std::vector<ArgumentId> dlp_rebuts(ArgumentId a, ArgumentId b) const {
        std::vector<ArgumentId> w;
        for (auto s : args_.at(b).sub)
            if (clash(conc_[a], conc_[s])) w.push_back(s);
        return w;
    }

    std::vector<ArgumentId> attacks(AttackKind kind, ArgumentId a, ArgumentId b) const {
        switch (kind) {
            case AttackKind::Rebut: return rebuts(a, b);
            case AttackKind::URebut: return u_rebuts(a, b);
            case AttackKind::DlpRebut: return dlp_rebuts(a, b);
        }
        return {};
    }

    // Attack witnesses b' with a not strictly weaker than b'.
    std::vector<ArgumentId> defeats(AttackKind kind, const ArgumentOrdering& ord, ArgumentId a, ArgumentId b) const {
        std::vector<ArgumentId> w;
        for (auto s : attacks(kind, a, b))
            if (!ord.weaker(args_[a].strength(), args_[s].strength())) w.push_back(s);
        return w;
    }

    bool clash(std::size_t l1, std::size_t l2) const {
        ensure_clash_table();
        return clash_[l1 * base_.table().size() + l2];
    }

private:
    Program program_;
    RuleBase base_;
    std::vector<AspicArgument> args_;
    std::vector<std::size_t> conc_;
    std::vector<std::size_t> generation_;
    std::vector<std::vector<std::uint64_t>> path_;  // Conc(Sub(A)) as a bit set
    std::vector<std::vector<ArgumentId>> by_conclusion_;
    std::size_t words_ = 0;
    mutable std::vector<char> clash_;

    void ensure_clash_table() const {
        if (!clash_.empty() || base_.table().size() == 0) return;
        std::size_t n = base_.table().size();
        clash_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                LiteralMask m = base_.empty_mask();
                for (auto f : base_.facts()) m[f] = 1;
                m[i] = m[j] = 1;
                base_.close(m);
                char v = RuleBase::consistent(m) ? 0 : 1;
                clash_[i * n + j] = clash_[j * n + i] = v;
            }
    }

    void add(AspicArgument arg, std::size_t conc, std::size_t gen, std::size_t budget) {
        if (args_.size() >= budget)
            throw EngineError("argument budget exceeded: more than " + std::to_string(budget) + " arguments");
        ArgumentId id = args_.size();
        std::vector<std::uint64_t> path(words_, 0);
        path[conc / 64] |= std::uint64_t{1} << (conc % 64);
        arg.sub.push_back(id);
        for (auto c : arg.children) {
            const auto& child = args_[c];
            for (std::size_t w = 0; w < words_; ++w) path[w] |= path_[c][w];
            arg.premises.insert(child.premises.begin(), child.premises.end());
            arg.defrules |= child.defrules;
            std::vector<ArgumentId> merged;
            std::set_union(arg.sub.begin(), arg.sub.end(), child.sub.begin(), child.sub.end(),
                           std::back_inserter(merged));
            arg.sub = std::move(merged);
            std::vector<RuleRef> rules;
            std::set_union(arg.rules.begin(), arg.rules.end(), child.rules.begin(), child.rules.end(),
                           std::back_inserter(rules));
            arg.rules = std::move(rules);
        }
        if (arg.top_rule) {
            auto it = std::lower_bound(arg.rules.begin(), arg.rules.end(), *arg.top_rule);
            if (it == arg.rules.end() || *it != *arg.top_rule) arg.rules.insert(it, *arg.top_rule);
            if (arg.top_rule->kind == RuleKind::Defeasible) {
                arg.defrules.insert(arg.top_rule->index);
                arg.last_rules = RuleSet::single(arg.top_rule->index);
            } else {
                for (auto c : arg.children) arg.last_rules |= args_[c].last_rules;
            }
        }
        args_.push_back(std::move(arg));
        conc_.push_back(conc);
        generation_.push_back(gen);
        path_.push_back(std::move(path));
        by_conclusion_[conc].push_back(id);
    }

    bool on_path(ArgumentId a, std::size_t lit) const { return (path_[a][lit / 64] >> (lit % 64)) & 1U; }

    // Semi-naive rounds: in round g every combination uses at least one argument of generation g-1.
    void build(std::size_t budget) {
        LiteralSet facts = program_.facts;
        for (const auto& f : facts) {
            AspicArgument arg;
            arg.conclusion = f;
            arg.premises.insert(f);
            add(std::move(arg), *base_.table().find(f), 0, budget);
        }
        struct Candidate {
            RuleRef ref;
            const CompiledRule* rule;
        };
        std::vector<Candidate> rules;
        for (std::size_t i = 0; i < base_.strict().size(); ++i)
            rules.push_back({{RuleKind::Strict, i}, &base_.strict()[i]});
        for (std::size_t i = 0; i < base_.defeasible().size(); ++i)
            rules.push_back({{RuleKind::Defeasible, i}, &base_.defeasible()[i]});

        for (std::size_t gen = 1;; ++gen) {
            std::size_t before = args_.size();
            std::vector<std::size_t> limit(by_conclusion_.size());
            std::vector<std::size_t> fresh(by_conclusion_.size());
            for (std::size_t l = 0; l < by_conclusion_.size(); ++l) {
                const auto& list = by_conclusion_[l];
                limit[l] = list.size();
                std::size_t k = list.size();
                while (k > 0 && generation_[list[k - 1]] == gen - 1) --k;
                fresh[l] = k;
            }
            for (const auto& cand : rules) {
                const auto& body = cand.rule->body;
                if (body.empty()) {
                    if (gen == 1) {
                        AspicArgument arg;
                        arg.conclusion = base_.table().at(cand.rule->head);
                        arg.top_rule = cand.ref;
                        add(std::move(arg), cand.rule->head, gen, budget);
                    }
                    continue;
                }
                std::vector<ArgumentId> pick(body.size());
                for (std::size_t first_new = 0; first_new < body.size(); ++first_new) {
                    auto range = [&](std::size_t pos) -> std::pair<std::size_t, std::size_t> {
                        std::size_t l = body[pos];
                        if (pos < first_new) return {0, fresh[l]};
                        if (pos == first_new) return {fresh[l], limit[l]};
                        return {0, limit[l]};
                    };
                    auto choose = [&](auto&& self, std::size_t pos) -> void {
                        if (pos == body.size()) {
                            for (auto c : pick)
                                if (on_path(c, cand.rule->head)) return;
                            AspicArgument arg;
                            arg.conclusion = base_.table().at(cand.rule->head);
                            arg.top_rule = cand.ref;
                            arg.children = pick;
                            add(std::move(arg), cand.rule->head, gen, budget);
                            return;
                        }
                        auto [lo, hi] = range(pos);
                        const auto& list = by_conclusion_[body[pos]];
                        for (std::size_t k = lo; k < hi; ++k) {
                            if (on_path(list[k], cand.rule->head)) continue;
                            pick[pos] = list[k];
                            self(self, pos + 1);
                        }
                    };
                    choose(choose, 0);
                }
            }
            if (args_.size() == before) break;
        }
    }
};

inline AspicTheory construct_arguments(const Program& p, std::size_t budget = default_argument_budget()) {
    return AspicTheory(p, budget);
}

struct AttackTriple {
    ArgumentId attacker;
    ArgumentId target;
    ArgumentId subargument;
};

// Structured framework: arguments, attack triples and the ordering used for defeat.
struct Saf {
    const AspicTheory* theory;
    AttackKind kind;
    ArgumentOrdering ordering;
    std::vector<AttackTriple> attacks;
};

inline Saf build_saf(const AspicTheory& t, AttackKind kind, const ArgumentOrdering& ord) {
    Saf saf{&t, kind, ord, {}};
    for (ArgumentId a = 0; a < t.size(); ++a)
        for (ArgumentId b = 0; b < t.size(); ++b)
            for (auto s : t.attacks(kind, a, b)) saf.attacks.push_back({a, b, s});
    return saf;
}

inline bool defeat_succeeds(const Saf& saf, const AttackTriple& at) {
    const auto& t = *saf.theory;
    return !saf.ordering.weaker(t[at.attacker].strength(), t[at.subargument].strength());
}

inline Framework build_framework(const AspicTheory& t, AttackKind kind, const ArgumentOrdering& ord) {
    Framework f;
    for (ArgumentId a = 0; a < t.size(); ++a) f.add_argument(t.label(a));
    // Candidate attackers are looked up by conclusion to avoid a full pairwise scan.
    const auto& table = t.rule_base().table();
    std::vector<std::vector<ArgumentId>> by_conc(table.size());
    for (ArgumentId a = 0; a < t.size(); ++a) by_conc[*table.find(t[a].conclusion)].push_back(a);
    for (ArgumentId b = 0; b < t.size(); ++b) {
        std::vector<char> seen(t.size(), 0);
        for (auto s : t[b].sub) {
            std::size_t cs = *table.find(t[s].conclusion);
            auto consider = [&](ArgumentId a) {
                if (seen[a]) return;
                if (kind == AttackKind::Rebut && !t[s].has_defeasible_top()) return;
                if (kind == AttackKind::URebut && t[s].is_strict()) return;
                if (ord.weaker(t[a].strength(), t[s].strength())) return;
                seen[a] = 1;
                f.add_defeat(a, b);
            };
            if (kind == AttackKind::DlpRebut) {
                for (std::size_t l = 0; l < table.size(); ++l)
                    if (t.clash(l, cs))
                        for (auto a : by_conc[l]) consider(a);
            } else {
                for (auto a : by_conc[LiteralTable::complement(cs)]) consider(a);
            }
        }
    }
    return f;
}

inline Framework build_framework(const AspicTheory& t, AttackKind kind) {
    return build_framework(t, kind, ArgumentOrdering(t.program()));
}

}  // namespace argeo
