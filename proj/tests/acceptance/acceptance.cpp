// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "argeo/argeo.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

using namespace argeo;
using testing::contains;
using testing::delp_arg;
using testing::fixture;

struct Outcome {
    bool pass;
    std::string detail;
};

Literal L(const char* s) { return Literal::parse(s); }

const char* yn(bool b) { return b ? "yes" : "no"; }

bool aspic_justified(const Program& p, AttackKind kind, const char* goal) {
    AspicTheory t(p);
    Framework f = build_framework(t, kind);
    auto g = grounded(f);
    for (auto a : t.arguments_for(L(goal)))
        if (contains(g, a)) return true;
    return false;
}

Outcome married_john() {
    Program p = fixture("married_john");
    DelpEngine e(p);
    bool m = e.warrant(L("m")).warranted, b = e.warrant(L("b")).warranted;
    Program closed = p;
    closed.strict_rules = transpose(p.strict_rules);
    bool tm = aspic_justified(closed, AttackKind::Rebut, "m"), tb = aspic_justified(closed, AttackKind::Rebut, "b");
    bool dm = aspic_justified(p, AttackKind::DlpRebut, "m"), db = aspic_justified(p, AttackKind::DlpRebut, "b");
    bool um = aspic_justified(p, AttackKind::Rebut, "m"), ub = aspic_justified(p, AttackKind::Rebut, "b");
    std::ostringstream d;
    d << "delp warrant m=" << yn(m) << " b=" << yn(b) << "; aspic rebut, transposed Rs: m=" << yn(tm)
      << " b=" << yn(tb) << "; dlp-rebut: m=" << yn(dm) << " b=" << yn(db) << "; rebut, Rs as given: m=" << yn(um)
      << " b=" << yn(ub);
    return {!m && !b && !tm && !tb, d.str()};
}

Outcome last_link() {
    Program p = fixture("last_link");
    DelpEngine e(p);
    LiteralSet expected{L("p"), L("q"), L("~r")}, got;
    for (const char* l : {"p", "q", "r", "~r", "~q"})
        if (e.warrant(L(l)).warranted) got.insert(L(l));
    bool ok = got == expected;
    std::ostringstream d;
    d << "warranted " << to_string(got);
    for (auto engine : {Engine::Delp, Engine::DelpGr}) {
        auto r = audit_configuration(p, {engine, AttackKind::Rebut, Semantics::Grounded});
        bool flagged = !r.skipped && !r.strictly_closed() && !r.indirect_consistent() && r.audits.size() == 1 &&
                       r.audits[0].closure_witness && r.audits[0].indirect_witness;
        ok = ok && flagged;
        if (flagged)
            d << "; " << r.config.name() << " SC witness " << r.audits[0].closure_witness->str() << ", IC witness "
              << r.audits[0].indirect_witness->first.str() << "," << r.audits[0].indirect_witness->second.str();
        else
            d << "; " << r.config.name() << " failures not flagged";
    }
    return {ok, d.str()};
}

Outcome tandem() {
    Program p = fixture("tandem");
    AspicTheory t(p);
    Framework f = build_framework(t, AttackKind::DlpRebut);
    Extension abc{testing::aspic_arg(t, "p"), testing::aspic_arg(t, "q"), testing::aspic_arg(t, "r")};
    std::sort(abc.begin(), abc.end());
    bool some = false;
    for (const auto& e : extensions(f, Semantics::Preferred))
        some = some || (is_admissible(f, e) && std::includes(e.begin(), e.end(), abc.begin(), abc.end()));
    bool abc_admissible = is_admissible(f, abc);
    LiteralSet g = conclusions_of(t, grounded(f));
    auto a = audit(g, p);
    std::ostringstream d;
    d << "admissible set with A,B,C: " << yn(some) << " ({A,B,C} itself: " << yn(abc_admissible)
      << "); grounded " << to_string(g) << "; SC " << yn(a.strictly_closed) << " IC " << yn(a.indirect_consistent);
    return {some && g == LiteralSet{L("f1"), L("f2"), L("f3")} && a.strictly_closed && a.indirect_consistent, d.str()};
}

Outcome closure_counterexample() {
    Program p = fixture("closure_counterexample");
    AspicTheory t(p);
    Framework f = build_framework(t, AttackKind::DlpRebut, ArgumentOrdering(p, OrderingMode::Simple));
    auto g = grounded(f);
    bool a1 = contains(g, testing::aspic_arg(t, "a1")), a2 = contains(g, testing::aspic_arg(t, "a2"));
    bool p_in = false;
    for (auto a : t.arguments_for(L("p"))) p_in = p_in || contains(g, a);
    auto r = audit(conclusions_of(t, g), p);
    std::ostringstream d;
    d << "a1 " << yn(a1) << ", a2 " << yn(a2) << ", p " << yn(p_in) << " in grounded; SC witness "
      << (r.closure_witness ? r.closure_witness->str() : "none");
    return {a1 && a2 && !p_in && !r.strictly_closed && r.closure_witness == L("p"), d.str()};
}

Outcome blocking_orders() {
    DelpEngine e1(fixture("blocking_order1")), e2(fixture("blocking_order2"));
    bool w1 = e1.warrant(L("r")).warranted, w2 = e2.warrant(L("r")).warranted;
    bool gr2 = warrant_gr(e2, L("r")).warranted;
    std::ostringstream d;
    d << "ordering 1 delp " << yn(w1) << "; ordering 2 delp " << yn(w2) << "; ordering 2 delp-gr " << yn(gr2);
    return {!w1 && w2 && !gr2, d.str()};
}

Outcome non_admissible_warrant() {
    bool ok = true;
    std::ostringstream d;
    struct Case {
        const char* name;
        std::vector<std::string> c_rules;
        const char* c_conclusion;
    };
    for (const auto& c : {Case{"nonadmissible_warrant", {"c1", "c2"}, "~t"},
                          Case{"interfering_concordance", {"c1", "c2"}, "~q"}}) {
        DelpEngine e(fixture(c.name));
        Framework f = delp_framework(e);
        bool a = e.warranted_argument(delp_arg(e, {"a1"}, "p"));
        bool cw = e.warranted_argument(delp_arg(e, c.c_rules, c.c_conclusion));
        Extension w;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e.warranted_argument(i)) w.push_back(i);
        bool adm = is_admissible(f, w);
        ok = ok && a && !cw && !adm;
        d << c.name << ": A " << yn(a) << ", C " << yn(cw) << ", warranted set admissible " << yn(adm) << "; ";
    }
    return {ok, d.str()};
}

Outcome subargument_grounded() {
    DelpEngine e(fixture("subargument_grounded"));
    Framework f = delp_framework(e);
    auto g = grounded(f);
    auto a = delp_arg(e, {"a1"}, "p"), b = delp_arg(e, {"b1", "b2"}, "~p");
    auto c = delp_arg(e, {"c1", "c2", "c3"}, "~q"), dd = delp_arg(e, {"d1", "d2"}, "~s");
    auto ee = delp_arg(e, {"c1"}, "r");
    bool in_a = contains(g, a), in_c = contains(g, c);
    Line line{{a, b, c, dd}, {*e.defeat(b, a), *e.defeat(c, b), *e.defeat(dd, c)}};
    bool blocked = !e.acceptable_extension(line, ee) && e.is_subargument(ee, c) && f.strictly_defeats(ee, dd);
    std::ostringstream d;
    d << "A " << yn(in_a) << ", C " << yn(in_c) << " in grounded; E excluded from A,B,C,D " << yn(blocked)
      << "; delp warrant p " << yn(e.warrant(L("p")).warranted);
    return {in_a && in_c && blocked, d.str()};
}

Outcome game_property() {
    testing::Rng rng(8);
    std::size_t checked = 0, wrong = 0;
    for (int i = 0; i < 500; ++i) {
        Framework f = testing::random_framework(rng, 12, 0.08 + 0.04 * (i % 5));
        auto g = grounded(f);
        for (std::size_t a = 0; a < f.size(); ++a, ++checked)
            if (provably_justified(f, a).justified != contains(g, a)) ++wrong;
    }
    return {wrong == 0, std::to_string(checked) + " arguments in 500 frameworks, " + std::to_string(wrong) +
                            " discrepancies"};
}

Outcome correspondence_property() {
    testing::Rng rng(9);
    testing::ProgramShape shape;
    shape.atoms = 8;
    shape.max_defeasible = 6;
    shape.min_defeasible = 4;
    shape.max_strict = 4;
    shape.max_facts = 2;
    shape.max_preferences = 2;
    shape.require_conflict = true;
    std::size_t disc = 0, pre = 0, mismatches = 0, lines = 0;
    for (int i = 0; i < 200; ++i) {
        shape.ordering = i % 2 ? OrderingMode::Simple : OrderingMode::Explicit;
        Program p = testing::random_simplified_program(rng, shape);
        for (auto pairing : {AttackPairing::Rebut, AttackPairing::URebut, AttackPairing::DlpRebut}) {
            auto r = verify_equivalence(p, pairing);
            disc += r.discrepancies;
            pre += r.precondition_violations.size();
            mismatches += r.attack_mismatches.size();
            lines += r.lines.size();
        }
    }
    std::ostringstream d;
    d << lines << " argument checks over 200 programs x 3 pairings, " << disc << " discrepancies, " << pre
      << " precondition violations, " << mismatches << " attack mismatches";
    return {disc == 0 && pre == 0, d.str()};
}

Outcome oracle_equivalence() {
    testing::Rng rng(10);
    testing::ProgramShape shape;
    shape.max_defeasible = 10;
    shape.max_strict = 3;
    std::size_t bad_args = 0, bad_ext = 0;
    for (int i = 0; i < 200; ++i) {
        Program p = testing::random_program(rng, shape);
        DelpEngine e(p);
        std::set<std::pair<std::uint64_t, Literal>> got;
        for (const auto& a : e.arguments()) got.emplace(a.rules.bits(), a.conclusion);
        if (got != oracle::arguments(p)) ++bad_args;
    }
    for (int i = 0; i < 200; ++i) {
        Framework f = testing::random_framework(rng, 10, 0.1 + 0.05 * (i % 4));
        oracle::NaiveSemantics naive(f);
        for (auto sem : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable})
            if (extensions(f, sem) != naive.enumerate(sem)) ++bad_ext;
    }
    std::ostringstream d;
    d << "argument sets differing " << bad_args << "/200; extension sets differing " << bad_ext << "/800";
    return {bad_args == 0 && bad_ext == 0, d.str()};
}

Outcome direct_consistency() {
    testing::Rng rng(11);
    testing::ProgramShape shape;
    shape.ordering = OrderingMode::Simple;
    shape.max_strict = 4;
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
        Program p = testing::random_program(rng, shape);
        AspicTheory t(p);
        if (!is_directly_consistent(conclusions_of(t, grounded(build_framework(t, AttackKind::DlpRebut))))) ++bad;
    }
    return {bad == 0, std::to_string(bad) + "/200 grounded extensions with a complementary pair"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"married john", married_john},
        {"last-link warrant and postulates", last_link},
        {"tandem under dlp-rebut", tandem},
        {"strict closure counterexample", closure_counterexample},
        {"blocking vs proper orderings", blocking_orders},
        {"warrant without admissibility", non_admissible_warrant},
        {"grounded beats subargument rule", subargument_grounded},
        {"grounded game property", game_property},
        {"correspondence property", correspondence_property},
        {"oracle equivalence", oracle_equivalence},
        {"direct consistency property", direct_consistency},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << " [" << o.detail << "] ("
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)\n";
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
