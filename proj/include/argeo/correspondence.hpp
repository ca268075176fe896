#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "argeo/aspic.hpp"
#include "argeo/delp.hpp"
#include "argeo/delp_gr.hpp"
#include "argeo/framework.hpp"

namespace argeo {

struct SimplifiedViolation {
    ArgumentId argument;
    std::string reason;
};

struct SimplifiedReport {
    bool simplified = true;
    std::vector<SimplifiedViolation> violations;
};

// Every argument is DefRules-minimal among arguments with its conclusion, and
// Conc(Sub(A)) together with the facts is indirectly consistent.
inline SimplifiedReport is_simplified(const AspicTheory& t) {
    SimplifiedReport r;
    const auto& p = t.program();
    for (ArgumentId a = 0; a < t.size(); ++a) {
        for (auto b : t.arguments_for(t[a].conclusion))
            if (t[b].defrules.proper_subset_of(t[a].defrules)) {
                r.violations.push_back({a, t.render(a) + " is not minimal: " + t.render(b) + " uses fewer defeasible rules"});
                break;
            }
        LiteralSet s = t.sub_conclusions(a);
        s.insert(p.facts.begin(), p.facts.end());
        if (!is_indirectly_consistent(s, p.strict_rules))
            r.violations.push_back({a, t.render(a) + " is inconsistent with the facts"});
    }
    r.simplified = r.violations.empty();
    return r;
}

inline SimplifiedReport is_simplified(const Program& p) { return is_simplified(AspicTheory(p)); }

// The DeLP argument with rules DefRules(a) and conclusion Conc(a).
inline std::size_t aspic_to_delp(const AspicTheory& t, ArgumentId a, const DelpEngine& e) {
    auto d = e.find(t[a].defrules, t[a].conclusion);
    if (!d) throw EngineError("theory not simplified: " + t.render(a) + " has no corresponding DeLP argument");
    return *d;
}

inline std::vector<ArgumentId> delp_to_aspic(const AspicTheory& t, const DelpEngine& e, std::size_t d) {
    std::vector<ArgumentId> out;
    for (auto a : t.arguments_for(e[d].conclusion))
        if (t[a].defrules == e[d].rules) out.push_back(a);
    return out;
}

inline std::vector<std::size_t> a_rebuts(const DelpEngine& e, std::size_t d1, std::size_t d2) {
    return e.attack_points(d1, d2, DelpAttack::ARebut);
}

inline std::vector<std::size_t> ua_rebuts(const DelpEngine& e, std::size_t d1, std::size_t d2) {
    return e.attack_points(d1, d2, DelpAttack::UARebut);
}

enum class AttackPairing { Rebut, URebut, DlpRebut };

inline AttackKind aspic_side(AttackPairing p) {
    switch (p) {
        case AttackPairing::Rebut: return AttackKind::Rebut;
        case AttackPairing::URebut: return AttackKind::URebut;
        case AttackPairing::DlpRebut: return AttackKind::DlpRebut;
    }
    return AttackKind::Rebut;
}

inline DelpAttack delp_side(AttackPairing p) {
    switch (p) {
        case AttackPairing::Rebut: return DelpAttack::ARebut;
        case AttackPairing::URebut: return DelpAttack::UARebut;
        case AttackPairing::DlpRebut: return DelpAttack::Rebut;
    }
    return DelpAttack::Rebut;
}

inline std::string pairing_name(AttackPairing p) {
    return std::string(to_string(aspic_side(p))) + "/" + std::string(to_string(delp_side(p)));
}

struct EquivalenceLine {
    std::size_t delp_argument;
    std::vector<ArgumentId> images;
    bool warranted;
    bool justified;  // every image is in the grounded extension
    bool agree;      // all images share the DeLP verdict
};

struct AttackMismatch {
    std::size_t attacker;
    std::size_t target;
    std::string reason;
};

struct EquivalenceReport {
    AttackPairing pairing;
    std::vector<std::string> precondition_violations;
    std::vector<EquivalenceLine> lines;
    std::vector<AttackMismatch> attack_mismatches;
    std::size_t discrepancies = 0;

    bool holds() const { return precondition_violations.empty() && discrepancies == 0; }
};

// Attack-level check: an ASPIC+ attack between images implies the paired DeLP attack,
// and a DeLP attack implies the paired ASPIC+ attack between some pair of images.
inline std::vector<AttackMismatch> attack_correspondence(const AspicTheory& t, const DelpEngine& e,
                                                         AttackPairing pairing) {
    std::vector<AttackMismatch> out;
    std::vector<std::vector<ArgumentId>> images(e.size());
    for (std::size_t d = 0; d < e.size(); ++d) images[d] = delp_to_aspic(t, e, d);
    for (std::size_t d1 = 0; d1 < e.size(); ++d1)
        for (std::size_t d2 = 0; d2 < e.size(); ++d2) {
            bool delp = !e.attack_points(d1, d2, delp_side(pairing)).empty();
            std::size_t hits = 0;
            for (auto a1 : images[d1])
                for (auto a2 : images[d2])
                    if (!t.attacks(aspic_side(pairing), a1, a2).empty()) ++hits;
            if (hits > 0 && !delp)
                out.push_back({d1, d2, "ASPIC+ attack between images without a DeLP attack"});
            if (delp && hits == 0)
                out.push_back({d1, d2, "DeLP attack with no ASPIC+ attack between any images"});
        }
    return out;
}

// Orderings coincide when comparing DeLP arguments agrees with comparing every pair of images.
inline std::vector<std::string> ordering_coincidence(const AspicTheory& t, const DelpEngine& e,
                                                     const ArgumentOrdering& ord) {
    std::vector<std::string> out;
    std::vector<std::vector<ArgumentId>> images(e.size());
    for (std::size_t d = 0; d < e.size(); ++d) images[d] = delp_to_aspic(t, e, d);
    for (std::size_t d1 = 0; d1 < e.size(); ++d1)
        for (std::size_t d2 = 0; d2 < e.size(); ++d2) {
            bool delp = ord.weaker(e[d1].strength(), e[d2].strength());
            for (auto a1 : images[d1])
                for (auto a2 : images[d2])
                    if (ord.weaker(t[a1].strength(), t[a2].strength()) != delp) {
                        out.push_back("orderings differ on " + e.describe(d1) + " and " + e.describe(d2));
                        goto next;
                    }
        next:;
        }
    return out;
}

// Grounded justification on both sides, compared argument by argument.
inline EquivalenceReport verify_equivalence(const Program& p, AttackPairing pairing,
                                            std::size_t budget = default_argument_budget()) {
    EquivalenceReport r{pairing, {}, {}, {}, 0};
    AspicTheory t(p, budget);
    auto simp = is_simplified(t);
    for (const auto& v : simp.violations) r.precondition_violations.push_back(v.reason);
    if (!simp.simplified) return r;
    DelpEngine e(p);
    ArgumentOrdering ord(p);
    for (auto& v : ordering_coincidence(t, e, ord)) r.precondition_violations.push_back(std::move(v));

    Framework fa = build_framework(t, aspic_side(pairing), ord);
    Framework fd = delp_framework(e, delp_side(pairing));
    auto la = grounded_labelling(fa);
    auto ld = grounded_labelling(fd);
    for (std::size_t d = 0; d < e.size(); ++d) {
        EquivalenceLine line{d, delp_to_aspic(t, e, d), ld[d] == Label::In, true, true};
        for (auto a : line.images) {
            bool in = la[a] == Label::In;
            line.justified = line.justified && in;
            if (in != line.warranted) line.agree = false;
        }
        if (line.images.empty()) line.agree = false;
        if (!line.agree) ++r.discrepancies;
        r.lines.push_back(std::move(line));
    }
    r.attack_mismatches = attack_correspondence(t, e, pairing);
    return r;
}

inline std::string format_report(const DelpEngine& e, const EquivalenceReport& r) {
    std::string out = "pairing " + pairing_name(r.pairing) + "\n";
    for (const auto& v : r.precondition_violations) out += "precondition: " + v + "\n";
    for (const auto& l : r.lines) {
        std::string rules = e.program().describe(e[l.delp_argument].rules);
        out += "ARG <" + rules + "," + e[l.delp_argument].conclusion.str() + "> warrant=" +
               (l.warranted ? "U" : "D") + " justified=" + (l.justified ? "Y" : "N") +
               " agree=" + (l.agree ? "Y" : "N") + "\n";
    }
    for (const auto& m : r.attack_mismatches)
        out += "attack: " + e.describe(m.attacker) + " on " + e.describe(m.target) + ": " + m.reason + "\n";
    out += "discrepancies " + std::to_string(r.discrepancies) + "\n";
    return out;
}

}  // namespace argeo
