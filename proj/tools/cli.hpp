#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "argeo/argeo.hpp"

#ifndef ARGEO_FIXTURE_DIR
#define ARGEO_FIXTURE_DIR "fixtures"
#endif

namespace argeo::cli {

enum ExitCode { Ok = 0, Usage = 1, BadInput = 2, EngineFailure = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string set_text(const std::vector<std::string>& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
    return out + "}";
}

const std::map<std::string, AttackKind> attack_names{
    {"rebut", AttackKind::Rebut}, {"urebut", AttackKind::URebut}, {"dlprebut", AttackKind::DlpRebut}};
const std::map<std::string, Semantics> semantics_names{{"grounded", Semantics::Grounded},
                                                       {"complete", Semantics::Complete},
                                                       {"preferred", Semantics::Preferred},
                                                       {"stable", Semantics::Stable}};
const std::map<std::string, Mode> mode_names{{"sceptical", Mode::Sceptical}, {"credulous", Mode::Credulous}};

// A framework plus how to name its arguments and find the ones supporting a goal.
struct Loaded {
    Framework framework;
    std::vector<std::string> captions;
    std::function<std::vector<std::size_t>(const std::string&)> supporting;
    std::function<std::string(std::size_t)> conclusion;
};

struct Options {
    std::string file;
    std::string goal;
    std::string engine;
    std::string attack = "rebut";
    std::string semantics = "grounded";
    std::string mode = "sceptical";
    bool dot = false;
    bool af = false;
    bool all = false;
    bool conclusions = false;
    bool update = false;
    bool transpose = false;
    std::string dir = ARGEO_FIXTURE_DIR;
};

class Runner {
public:
    explicit Runner(std::ostream& out) : out_(out) {}

    int parse_verb(const Options& o) {
        out_ << print_program(load(o));
        return Ok;
    }

    int args_verb(const Options& o) {
        Program p = load(o);
        if (o.engine == "aspic") {
            AspicTheory t(p);
            for (ArgumentId a = 0; a < t.size(); ++a)
                out_ << t.label(a) << " " << t.render(a) << " defrules=" << p.describe(t[a].defrules) << "\n";
        } else {
            DelpEngine e(p);
            for (std::size_t d = 0; d < e.size(); ++d) out_ << "D" << d + 1 << " " << e.describe(d) << "\n";
        }
        return Ok;
    }

    int attacks_verb(const Options& o) {
        Program p = load(o);
        if (o.engine == "delp-gr") return delp_attacks(p, o);
        AspicTheory t(p);
        AttackKind kind = attack_names.at(o.attack);
        Saf saf = build_saf(t, kind, ArgumentOrdering(p));
        if (o.af || o.dot) {
            Framework f = build_framework(t, kind, saf.ordering);
            if (o.af) {
                out_ << to_text(f);
            } else {
                std::vector<std::string> caps;
                for (ArgumentId a = 0; a < t.size(); ++a) caps.push_back(t.render(a));
                out_ << to_dot(f, caps);
            }
            return Ok;
        }
        for (const auto& at : saf.attacks)
            out_ << t.label(at.attacker) << " -> " << t.label(at.target) << " on " << t.label(at.subargument)
                 << (defeat_succeeds(saf, at) ? " defeat" : " no-defeat") << "\n";
        return Ok;
    }

    int delp_attacks(const Program& p, const Options& o) {
        DelpEngine e(p);
        if (o.af || o.dot) {
            Framework f = delp_framework(e);
            out_ << (o.af ? to_text(f) : to_dot(f, delp_captions(e)));
            return Ok;
        }
        for (std::size_t t = 0; t < e.size(); ++t)
            for (const auto& [a, kind] : e.defeaters(t))
                out_ << "D" << a + 1 << " -> D" << t + 1 << (kind == DefeatKind::Proper ? " proper" : " blocking")
                     << "\n";
        return Ok;
    }

    int tree_verb(const Options& o) {
        DelpEngine e(load(o));
        auto roots = e.arguments_for(Literal::parse(o.goal));
        if (roots.empty()) {
            out_ << "no arguments for " << o.goal << "\n";
            return Ok;
        }
        for (std::size_t i = 0; i < roots.size(); ++i) {
            auto tree = e.build_tree(roots[i]);
            if (o.dot) {
                out_ << tree_to_dot(e, tree);
            } else {
                if (i) out_ << "\n";
                out_ << tree_to_text(e, tree);
            }
        }
        return Ok;
    }

    int warrant_verb(const Options& o) {
        Program p = load(o);
        Literal goal = Literal::parse(o.goal);
        DelpEngine e(p);
        bool ok = o.engine == "delp-gr" ? warrant_gr(e, goal).warranted : e.warrant(goal).warranted;
        out_ << (ok ? "WARRANTED" : "NOT WARRANTED") << "\n";
        return Ok;
    }

    int extensions_verb(const Options& o) {
        Loaded l = load_framework(o);
        for (const auto& ext : extensions(l.framework, semantics_names.at(o.semantics))) {
            std::vector<std::string> items;
            if (o.conclusions) {
                std::set<std::string> seen;
                for (auto a : ext) seen.insert(l.conclusion(a));
                items.assign(seen.begin(), seen.end());
            } else {
                for (auto a : ext) items.push_back(l.framework.label(a));
            }
            out_ << set_text(items) << "\n";
        }
        return Ok;
    }

    int justify_verb(const Options& o) {
        Loaded l = load_framework(o);
        bool ok = false;
        for (auto a : l.supporting(o.goal))
            ok = ok || justified(l.framework, a, semantics_names.at(o.semantics), mode_names.at(o.mode));
        out_ << (ok ? "JUSTIFIED" : "NOT JUSTIFIED") << "\n";
        return Ok;
    }

    int game_verb(const Options& o) {
        Loaded l = load_framework(o);
        auto roots = l.supporting(o.goal);
        if (roots.empty()) out_ << "no arguments for " << o.goal << "\n";
        for (auto a : roots) {
            auto outcome = provably_justified(l.framework, a);
            out_ << l.framework.label(a);
            if (!l.captions.empty()) out_ << " " << l.captions[a];
            out_ << ": " << (outcome.justified ? "JUSTIFIED" : "NOT JUSTIFIED") << "\n";
            if (outcome.strategy)
                out_ << (o.dot ? strategy_to_dot(l.framework, *outcome.strategy)
                               : strategy_to_text(l.framework, *outcome.strategy));
        }
        return Ok;
    }

    int postulates_verb(const Options& o) {
        Program p = load(o);
        std::vector<Configuration> configs;
        if (o.all) {
            configs = all_configurations();
        } else {
            Configuration c;
            c.engine = o.engine == "delp" ? Engine::Delp : o.engine == "delp-gr" ? Engine::DelpGr : Engine::Aspic;
            c.attack = attack_names.at(o.attack);
            c.semantics = semantics_names.at(o.semantics);
            configs.push_back(c);
        }
        std::vector<ConfigurationReport> reports;
        for (const auto& c : configs) reports.push_back(audit_configuration(p, c));
        out_ << format_table(reports);
        return Ok;
    }

    int compare_verb(const Options& o) {
        Program p = load(o);
        std::vector<AttackPairing> pairings;
        if (o.attack.empty() || o.all)
            pairings = {AttackPairing::Rebut, AttackPairing::URebut, AttackPairing::DlpRebut};
        else
            pairings = {static_cast<AttackPairing>(static_cast<int>(attack_names.at(o.attack)))};
        DelpEngine e(p);
        for (auto pr : pairings) {
            auto report = verify_equivalence(p, pr);
            out_ << format_report(e, report);
        }
        return Ok;
    }

private:
    std::ostream& out_;

    static Program load(const Options& o) {
        Program p = load_program(o.file);
        if (o.transpose) p.strict_rules = transpose(p.strict_rules);
        return p;
    }

    static bool is_af(const Options& o) {
        return o.af || (o.file.size() > 3 && o.file.compare(o.file.size() - 3, 3, ".af") == 0);
    }

    Loaded load_framework(const Options& o) {
        Loaded l;
        if (is_af(o)) {
            l.framework = parse_framework(read_file(o.file));
            const Framework& f = l.framework;
            l.supporting = [&f](const std::string& g) {
                auto a = f.find(g);
                return a ? std::vector<std::size_t>{*a} : std::vector<std::size_t>{};
            };
            l.conclusion = [&f](std::size_t a) { return f.label(a); };
            return l;
        }
        Program p = load(o);
        if (o.engine == "delp-gr") {
            auto e = std::make_shared<DelpEngine>(p);
            l.framework = delp_framework(*e);
            l.captions = delp_captions(*e);
            l.supporting = [e](const std::string& g) { return e->arguments_for(Literal::parse(g)); };
            l.conclusion = [e](std::size_t a) { return (*e)[a].conclusion.str(); };
        } else {
            auto t = std::make_shared<AspicTheory>(p);
            l.framework = build_framework(*t, attack_names.at(o.attack));
            for (ArgumentId a = 0; a < t->size(); ++a) l.captions.push_back(t->render(a));
            l.supporting = [t](const std::string& g) { return t->arguments_for(Literal::parse(g)); };
            l.conclusion = [t](std::size_t a) { return (*t)[a].conclusion.str(); };
        }
        return l;
    }
};

}  // namespace detail

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace detail {

struct GoldenCase {
    std::string command;
    std::string expected;
};

inline std::vector<GoldenCase> read_golden(const std::string& text) {
    std::vector<GoldenCase> cases;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("$ ", 0) == 0)
            cases.push_back({line.substr(2), {}});
        else if (!cases.empty())
            cases.back().expected += line + "\n";
    }
    return cases;
}

inline std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

// Output of one golden command; fixture names resolve against dir and failures record their exit code.
inline std::string run_case(const std::string& command, const std::string& dir) {
    auto words = split_words(command);
    for (auto& w : words)
        if (w.size() > 4 && (w.ends_with(".dlp") || w.ends_with(".af"))) w = (std::filesystem::path(dir) / w).string();
    std::ostringstream out, err;
    int code = run(words, out, err);
    std::string text = out.str();
    if (code != Ok) text += "[exit " + std::to_string(code) + "]\n";
    return text;
}

inline std::vector<std::string> split_lines_before_first_command(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind("$ ", 0) == 0) break;
        lines.push_back(line);
    }
    return lines;
}

inline int corpus_verb(const Options& o, std::ostream& out) {
    namespace fs = std::filesystem;
    std::vector<fs::path> goldens;
    if (!fs::is_directory(o.dir)) throw std::invalid_argument("no fixture directory '" + o.dir + "'");
    for (const auto& entry : fs::directory_iterator(o.dir))
        if (entry.path().extension() == ".golden") goldens.push_back(entry.path());
    std::sort(goldens.begin(), goldens.end());
    std::size_t passed = 0;
    for (const auto& g : goldens) {
        std::string text = read_file(g.string());
        auto cases = read_golden(text);
        bool ok = true;
        std::string updated;
        for (const auto& line : split_lines_before_first_command(text)) updated += line + "\n";
        for (const auto& c : cases) {
            std::string actual = run_case(c.command, o.dir);
            updated += "$ " + c.command + "\n" + actual;
            if (actual != c.expected) {
                ok = false;
                if (!o.update) out << "  mismatch in '" << c.command << "'\n--- expected\n" << c.expected << "--- actual\n" << actual;
            }
        }
        if (o.update && !ok) {
            std::ofstream(g, std::ios::binary) << updated;
            ok = true;
        }
        out << (ok ? "PASS " : "FAIL ") << g.stem().string() << "\n";
        passed += ok ? 1 : 0;
    }
    out << passed << "/" << goldens.size() << " fixtures passed\n";
    return passed == goldens.size() ? Ok : EngineFailure;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Options;
    Options o;
    CLI::App app{"Rule-based argumentation workbench: DeLP and ASPIC+ engines", "argeo"};
    app.require_subcommand(1);

    auto file = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "program file")->required(); };
    auto goal = [&](CLI::App* sub) { sub->add_option("GOAL", o.goal, "literal, or argument id for .af files")->required(); };
    auto attack = [&](CLI::App* sub) {
        sub->add_option("--attack", o.attack, "ASPIC+ attack relation")
            ->check(CLI::IsMember({"rebut", "urebut", "dlprebut"}));
    };
    auto engine = [&](CLI::App* sub, std::vector<std::string> choices, std::string fallback) {
        o.engine = fallback;
        sub->add_option("--engine", o.engine, "reasoning engine")->check(CLI::IsMember(choices));
    };
    auto semantics = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--semantics", o.semantics, "Dung semantics")
                        ->check(CLI::IsMember({"grounded", "complete", "preferred", "stable"}));
        if (required) opt->required();
    };
    auto framework_input = [&](CLI::App* sub) {
        sub->add_flag("--af", o.af, "FILE is an 'arg'/'att' framework");
    };

    auto* parse = app.add_subcommand("parse", "print the normalized program");
    file(parse);
    auto* args_cmd = app.add_subcommand("args", "list arguments");
    file(args_cmd);
    auto* attacks = app.add_subcommand("attacks", "list ASPIC+ attacks and whether they defeat");
    file(attacks);
    auto* tree = app.add_subcommand("tree", "print the dialectical trees for a literal");
    file(tree);
    goal(tree);
    tree->add_flag("--dot", o.dot, "emit DOT");
    auto* warrant = app.add_subcommand("warrant", "decide whether a literal is warranted");
    file(warrant);
    goal(warrant);
    auto* exts = app.add_subcommand("extensions", "enumerate extensions");
    file(exts);
    auto* justify = app.add_subcommand("justify", "decide whether a literal is justified");
    file(justify);
    goal(justify);
    auto* game = app.add_subcommand("game", "play the grounded game for each argument of a literal");
    file(game);
    goal(game);
    auto* post = app.add_subcommand("postulates", "audit rationality postulates");
    file(post);
    auto* compare = app.add_subcommand("compare", "check the DeLP/ASPIC+ correspondence");
    file(compare);
    auto* corpus = app.add_subcommand("corpus", "run the bundled fixtures against their golden outputs");
    corpus->add_option("--dir", o.dir, "fixture directory");
    corpus->add_flag("--update", o.update, "rewrite goldens from current output");

    engine(args_cmd, {"delp", "aspic"}, "delp");
    for (auto* sub : {parse, args_cmd, attacks, tree, warrant, exts, justify, game, post, compare})
        sub->add_flag("--transpose", o.transpose, "close the strict rules under transposition first");
    attack(attacks);
    attacks->add_flag("--dot", o.dot, "emit DOT of the defeat graph");
    attacks->add_flag("--af", o.af, "emit the defeat graph as 'arg'/'att' lines");
    for (auto* sub : {exts, justify, game}) {
        attack(sub);
        framework_input(sub);
    }
    semantics(exts, true);
    exts->add_flag("--conclusions", o.conclusions, "print conclusions instead of argument ids");
    semantics(justify, true);
    justify->add_option("--mode", o.mode, "sceptical or credulous")
        ->check(CLI::IsMember({"sceptical", "credulous"}));
    game->add_flag("--dot", o.dot, "emit DOT strategies");
    post->add_flag("--all", o.all, "audit every configuration");
    attack(post);
    semantics(post, false);
    compare->add_option("--attack", o.attack, "restrict to one pairing")
        ->check(CLI::IsMember({"rebut", "urebut", "dlprebut"}));

    std::string chosen;
    for (auto* sub : app.get_subcommands({})) sub->callback([&chosen, sub] { chosen = sub->get_name(); });
    // Engine defaults depend on the verb, so the options are registered after the verbs exist.
    std::string warrant_engine = "delp", framework_engine = "aspic", post_engine = "aspic", attacks_engine = "aspic";
    attacks->add_option("--engine", attacks_engine, "aspic or delp-gr")->check(CLI::IsMember({"aspic", "delp-gr"}));
    warrant->add_option("--engine", warrant_engine, "delp or delp-gr")->check(CLI::IsMember({"delp", "delp-gr"}));
    for (auto* sub : {exts, justify, game})
        sub->add_option("--engine", framework_engine, "aspic or delp-gr")->check(CLI::IsMember({"aspic", "delp-gr"}));
    post->add_option("--engine", post_engine, "aspic, delp or delp-gr")
        ->check(CLI::IsMember({"aspic", "delp", "delp-gr"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    if (chosen == "compare" && !compare->count("--attack")) o.attack.clear();
    if (chosen == "warrant") o.engine = warrant_engine;
    if (chosen == "extensions" || chosen == "justify" || chosen == "game") o.engine = framework_engine;
    if (chosen == "postulates") o.engine = post_engine;
    if (chosen == "attacks") o.engine = attacks_engine;

    detail::Runner runner(out);
    try {
        if (chosen == "parse") return runner.parse_verb(o);
        if (chosen == "args") return runner.args_verb(o);
        if (chosen == "attacks") return runner.attacks_verb(o);
        if (chosen == "tree") return runner.tree_verb(o);
        if (chosen == "warrant") return runner.warrant_verb(o);
        if (chosen == "extensions") return runner.extensions_verb(o);
        if (chosen == "justify") return runner.justify_verb(o);
        if (chosen == "game") return runner.game_verb(o);
        if (chosen == "postulates") return runner.postulates_verb(o);
        if (chosen == "compare") return runner.compare_verb(o);
        if (chosen == "corpus") return detail::corpus_verb(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return BadInput;
    } catch (const ProgramError& e) {
        err << "program error: " << e.what() << "\n";
        return BadInput;
    } catch (const EngineError& e) {
        err << "engine error: " << e.what() << "\n";
        return EngineFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    err << "unknown command\n";
    return Usage;
}

}  // namespace argeo::cli
