#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"

namespace argeo::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return testing::fixture_path(name); }

class TempFile {
public:
    TempFile(const std::string& name, const std::string& text)
        : path_(std::filesystem::temp_directory_path() / ("argeo_cli_" + name)) {
        std::ofstream(path_) << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

TEST(Cli, WarrantMarriedJohn) {
    auto r = run_cli({"warrant", fx("married_john"), "m"});
    EXPECT_EQ(r.code, Ok);
    EXPECT_EQ(r.out, "NOT WARRANTED\n");
    EXPECT_EQ(run_cli({"warrant", fx("married_john"), "wr"}).out, "WARRANTED\n");
}

TEST(Cli, WarrantEngines) {
    EXPECT_EQ(run_cli({"warrant", fx("blocking_order2"), "r"}).out, "WARRANTED\n");
    EXPECT_EQ(run_cli({"warrant", fx("blocking_order2"), "r", "--engine", "delp-gr"}).out, "NOT WARRANTED\n");
}

TEST(Cli, EmptyGroundedExtension) {
    auto r = run_cli({"extensions", fx("empty"), "--semantics", "grounded"});
    EXPECT_EQ(r.code, Ok);
    EXPECT_EQ(r.out, "{}\n");
}

TEST(Cli, ExtensionsWithConclusions) {
    auto r = run_cli({"extensions", fx("tandem"), "--semantics", "grounded", "--attack", "dlprebut", "--conclusions"});
    EXPECT_EQ(r.out, "{f1,f2,f3}\n");
}

TEST(Cli, JustifyModes) {
    auto base = std::vector<std::string>{"justify", fx("aspic_running"), "r", "--semantics", "preferred"};
    auto cred = base, scep = base;
    cred.insert(cred.end(), {"--mode", "credulous"});
    scep.insert(scep.end(), {"--mode", "sceptical"});
    EXPECT_EQ(run_cli(cred).out, "JUSTIFIED\n");
    EXPECT_EQ(run_cli(scep).out, "NOT JUSTIFIED\n");
}

TEST(Cli, TransposeChangesMarriedJohn) {
    std::vector<std::string> args{"justify", fx("married_john"), "m", "--semantics", "grounded"};
    EXPECT_EQ(run_cli(args).out, "JUSTIFIED\n");
    args.push_back("--transpose");
    EXPECT_EQ(run_cli(args).out, "NOT JUSTIFIED\n");
}

TEST(Cli, TreeTextAndDot) {
    auto r = run_cli({"tree", fx("blocking_order1"), "r"});
    EXPECT_EQ(r.out, "<{q_p,r_q}, r> [D]\n  <{nr_t,t_s}, ~r> [U] blocking\n");
    auto d = run_cli({"tree", fx("blocking_order1"), "r", "--dot"});
    EXPECT_EQ(d.out.rfind("digraph", 0), 0u);
    EXPECT_EQ(run_cli({"tree", fx("surf"), "cold"}).out, "no arguments for cold\n");
}

TEST(Cli, AttacksFormats) {
    auto r = run_cli({"attacks", fx("crossover"), "--engine", "delp-gr"});
    EXPECT_NE(r.out.find("D2 -> D4 proper\n"), std::string::npos);
    auto af = run_cli({"attacks", fx("aspic_running"), "--af"});
    EXPECT_EQ(af.out.rfind("arg A1\n", 0), 0u);
    auto dot = run_cli({"attacks", fx("aspic_running"), "--dot"});
    EXPECT_NE(dot.out.find("->"), std::string::npos);
}

TEST(Cli, FrameworkFiles) {
    TempFile af("chain.af", "arg a\narg b\narg c\natt a b\natt b c\n");
    EXPECT_EQ(run_cli({"extensions", af.path(), "--semantics", "grounded"}).out, "{a,c}\n");
    auto g = run_cli({"game", af.path(), "c"});
    EXPECT_EQ(g.code, Ok);
    EXPECT_NE(g.out.find("JUSTIFIED"), std::string::npos);
}

TEST(Cli, PostulatesTable) {
    auto r = run_cli({"postulates", fx("closure_counterexample"), "--attack", "dlprebut"});
    EXPECT_NE(r.out.find("fail(p)"), std::string::npos);
    auto all = run_cli({"postulates", fx("tandem"), "--all"});
    EXPECT_NE(all.out.find("delp-gr"), std::string::npos);
    EXPECT_NE(all.out.find("aspic/urebut/stable"), std::string::npos);
}

TEST(Cli, CompareReport) {
    auto r = run_cli({"compare", fx("married_john"), "--attack", "dlprebut"});
    EXPECT_EQ(r.code, Ok);
    EXPECT_EQ(r.out.rfind("pairing dlprebut/rebut\n", 0), 0u);
    EXPECT_NE(r.out.find("discrepancies 0"), std::string::npos);
}

TEST(Cli, ParseNormalizes) {
    TempFile f("norm.dlp", "b. a.\np -< a.\n");
    EXPECT_EQ(run_cli({"parse", f.path()}).out, "a.\nb.\n[d1] p -< a.\n#ordering explicit\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({}).code, Usage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, Usage);
    EXPECT_EQ(run_cli({"warrant", fx("surf")}).code, Usage);
    EXPECT_EQ(run_cli({"extensions", fx("surf"), "--semantics", "ideal"}).code, Usage);
    EXPECT_EQ(run_cli({"warrant", "/nonexistent/x.dlp", "p"}).code, Usage);
    EXPECT_EQ(run_cli({"--help"}).code, Ok);

    TempFile syntax("syntax.dlp", "p -< q\n");
    auto r = run_cli({"warrant", syntax.path(), "p"});
    EXPECT_EQ(r.code, BadInput);
    EXPECT_FALSE(r.err.empty());
    TempFile contradictory("contra.dlp", "p. ~p.\n");
    EXPECT_EQ(run_cli({"parse", contradictory.path()}).code, BadInput);
    TempFile lastlink("prio.dlp", "[a] p -< .\n[b] ~p -< .\n#prio a 1\n#ordering lastlink\n");
    EXPECT_EQ(run_cli({"extensions", lastlink.path(), "--semantics", "grounded"}).code, EngineFailure);
}

TEST(Cli, OutputIsDeterministic) {
    std::vector<std::string> args{"postulates", fx("surf"), "--all"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    std::vector<std::string> trees{"tree", fx("nonadmissible_warrant"), "p"};
    EXPECT_EQ(run_cli(trees).out, run_cli(trees).out);
}

TEST(Cli, CorpusPasses) {
    auto r = run_cli({"corpus"});
    EXPECT_EQ(r.code, Ok) << r.out;
    EXPECT_NE(r.out.find("13/13 fixtures passed"), std::string::npos) << r.out;
}

TEST(Cli, CorpusReportsMismatch) {
    auto dir = std::filesystem::temp_directory_path() / "argeo_corpus_test";
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(fx("empty"), dir / "empty.dlp", std::filesystem::copy_options::overwrite_existing);
    std::ofstream(dir / "empty.golden") << "# wrong on purpose\n$ warrant empty.dlp p\nWARRANTED\n";
    auto r = run_cli({"corpus", "--dir", dir.string()});
    EXPECT_EQ(r.code, EngineFailure);
    EXPECT_NE(r.out.find("FAIL empty"), std::string::npos);
    EXPECT_EQ(run_cli({"corpus", "--dir", dir.string(), "--update"}).code, Ok);
    EXPECT_EQ(run_cli({"corpus", "--dir", dir.string()}).code, Ok);
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace argeo::cli
