#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "argeo/aspic.hpp"
#include "argeo/delp.hpp"
#include "argeo/delp_gr.hpp"
#include "argeo/framework.hpp"

namespace argeo {

struct AuditReport {
    bool direct_consistent = true;
    bool indirect_consistent = true;
    bool strictly_closed = true;
    std::optional<std::pair<Literal, Literal>> direct_witness;
    std::optional<std::pair<Literal, Literal>> indirect_witness;
    std::optional<Literal> closure_witness;  // first literal added by forward chaining
    LiteralSet missing;
};

inline AuditReport audit(const LiteralSet& conclusions, const Program& p) {
    AuditReport r;
    r.direct_witness = complementary_pair(conclusions);
    r.direct_consistent = !r.direct_witness;
    LiteralSet closure = conclusions;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : p.strict_rules) {
            if (closure.count(rule.head)) continue;
            bool fires = true;
            for (const auto& b : rule.body) fires = fires && closure.count(b) > 0;
            if (!fires) continue;
            closure.insert(rule.head);
            r.missing.insert(rule.head);
            if (!r.closure_witness) r.closure_witness = rule.head;
            changed = true;
        }
    }
    r.strictly_closed = r.missing.empty();
    r.indirect_witness = complementary_pair(closure);
    r.indirect_consistent = !r.indirect_witness;
    return r;
}

enum class Engine { Aspic, Delp, DelpGr };

struct Configuration {
    Engine engine = Engine::Aspic;
    AttackKind attack = AttackKind::Rebut;
    Semantics semantics = Semantics::Grounded;

    std::string name() const {
        switch (engine) {
            case Engine::Delp: return "delp";
            case Engine::DelpGr: return "delp-gr";
            case Engine::Aspic: break;
        }
        return "aspic/" + std::string(to_string(attack)) + "/" + std::string(to_string(semantics));
    }
};

inline std::vector<Configuration> all_configurations() {
    std::vector<Configuration> out;
    for (auto a : {AttackKind::Rebut, AttackKind::URebut, AttackKind::DlpRebut})
        for (auto s : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable})
            out.push_back({Engine::Aspic, a, s});
    out.push_back({Engine::Delp, AttackKind::Rebut, Semantics::Grounded});
    out.push_back({Engine::DelpGr, AttackKind::Rebut, Semantics::Grounded});
    return out;
}

struct ConfigurationReport {
    Configuration config;
    std::optional<std::string> skipped;
    std::vector<LiteralSet> conclusion_sets;  // one per extension, or the warranted literals
    std::vector<AuditReport> audits;

    bool direct_consistent() const { return all(&AuditReport::direct_consistent); }
    bool indirect_consistent() const { return all(&AuditReport::indirect_consistent); }
    bool strictly_closed() const { return all(&AuditReport::strictly_closed); }

private:
    bool all(bool AuditReport::*field) const {
        for (const auto& a : audits)
            if (!(a.*field)) return false;
        return true;
    }
};

inline LiteralSet conclusions_of(const AspicTheory& t, const Extension& e) {
    LiteralSet out;
    for (auto a : e) out.insert(t[a].conclusion);
    return out;
}

inline LiteralSet conclusions_of(const DelpEngine& e, const Extension& ext) {
    LiteralSet out;
    for (auto a : ext) out.insert(e[a].conclusion);
    return out;
}

// Literals with at least one argument whose dialectical tree is marked U.
inline LiteralSet warranted_literals(const DelpEngine& e) {
    LiteralSet out;
    for (std::size_t a = 0; a < e.size(); ++a)
        if (!out.count(e[a].conclusion) && e.warranted_argument(a)) out.insert(e[a].conclusion);
    return out;
}

inline ConfigurationReport audit_configuration(const Program& p, const Configuration& c,
                                               std::optional<OrderingMode> ordering = std::nullopt,
                                               std::size_t bound = default_extension_bound) {
    ConfigurationReport r{c, std::nullopt, {}, {}};
    try {
        switch (c.engine) {
            case Engine::Aspic: {
                AspicTheory t(p);
                ArgumentOrdering ord(p, ordering.value_or(p.ordering_mode));
                Framework f = build_framework(t, c.attack, ord);
                for (const auto& e : extensions(f, c.semantics, bound)) r.conclusion_sets.push_back(conclusions_of(t, e));
                break;
            }
            case Engine::Delp: r.conclusion_sets.push_back(warranted_literals(DelpEngine(p, ordering))); break;
            case Engine::DelpGr: {
                DelpEngine e(p, ordering);
                r.conclusion_sets.push_back(conclusions_of(e, grounded(delp_framework(e))));
                break;
            }
        }
    } catch (const EngineError& err) {
        r.skipped = err.what();
        return r;
    }
    for (const auto& s : r.conclusion_sets) r.audits.push_back(audit(s, p));
    return r;
}

inline std::string format_table(const std::vector<ConfigurationReport>& reports) {
    auto cell = [](const ConfigurationReport& r, bool AuditReport::*ok, auto witness) {
        for (const auto& a : r.audits)
            if (!(a.*ok)) return "fail(" + witness(a) + ")";
        return std::string("pass");
    };
    auto pair_str = [](const std::optional<std::pair<Literal, Literal>>& w) {
        return w ? w->first.str() + "," + w->second.str() : std::string();
    };
    std::string out = "configuration              extensions  DC              IC              SC\n";
    for (const auto& r : reports) {
        std::string name = r.config.name();
        name.resize(std::max<std::size_t>(name.size() + 1, 27), ' ');
        if (r.skipped) {
            out += name + "skipped: " + *r.skipped + "\n";
            continue;
        }
        std::string n = std::to_string(r.audits.size());
        n.resize(12, ' ');
        std::string dc = cell(r, &AuditReport::direct_consistent, [&](const AuditReport& a) { return pair_str(a.direct_witness); });
        std::string ic = cell(r, &AuditReport::indirect_consistent, [&](const AuditReport& a) { return pair_str(a.indirect_witness); });
        std::string sc = cell(r, &AuditReport::strictly_closed, [](const AuditReport& a) { return a.closure_witness->str(); });
        dc.resize(std::max<std::size_t>(dc.size() + 1, 16), ' ');
        ic.resize(std::max<std::size_t>(ic.size() + 1, 16), ' ');
        out += name + n + dc + ic + sc + "\n";
    }
    return out;
}

}  // namespace argeo
