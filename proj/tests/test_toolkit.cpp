#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace clusterwp;
using namespace fixtures;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Catalog, MatricesAndPoints) {
    EXPECT_EQ(sl2().matrix(), (ExchangeMatrix{{0, 1, 1}}));
    EXPECT_EQ(sl2().mutable_count(), 1u);
    EXPECT_EQ(sl2().names(), (std::vector<std::string>{"x", "c1", "c2"}));
    EXPECT_EQ(markov().matrix(), (ExchangeMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}));
    const Point deep = catalog("a3").point("deep");
    EXPECT_EQ(deep.at("x13"), GaussianRational(0));
    EXPECT_EQ(deep.at("x36"), GaussianRational(-1));
    EXPECT_THROW(catalog("e8"), std::invalid_argument);
}

TEST(Catalog, PointsSatisfyRelations) {
    for (const auto& key : catalog_keys()) {
        CatalogEntry e = catalog(key);
        Presentation rel = exploration_relations(explore(e.seed, 30, 6));
        for (const auto& [name, p] : e.points) EXPECT_TRUE(verify_point(p, rel).valid()) << key << " " << name;
    }
}

TEST(SeedFile, RoundTripIsByteIdentical) {
    for (const auto& key : catalog_keys()) {
        const std::string text = emit_seed(catalog(key).seed);
        EXPECT_EQ(emit_seed(parse_seed(text)), text) << key;
    }
}

TEST(SeedFile, CommentsAndDiagnostics) {
    Seed s = parse_seed("# Markov\nrank 3\nmutable 3 # all mutable\nnames a b c\n\nrow 0 2 -2\nrow -2 0 2\nrow 2 -2 0\n");
    EXPECT_EQ(s.names(), (std::vector<std::string>{"a", "b", "c"}));

    auto message = [](const std::string& text) {
        try {
            parse_seed(text, "bad.seed");
        } catch (const FileError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message("rank 2\nmutable 2\nnames a b\nrow 0 1\nrow 1 0\n"),
              "bad.seed:4: not skew-symmetrizable at pair (1,2): entries have the same sign");
    EXPECT_EQ(message("rank 2\nmutable 1\nnames a b\nrow 0 1 2\n"), "bad.seed:4: row has 3 entries, expected 2");
    EXPECT_EQ(message("rank 2\nmutable 1\nnames a\nrow 0 1\n"), "bad.seed:4: expected 2 names, found 1");
    EXPECT_EQ(message("rank 2\nmutable 1\nnames a b\nrow 0 x\n"), "bad.seed:4: entry 'x' is not an integer");
    EXPECT_EQ(message("rank 2\nnames a b\n"), "bad.seed:2: missing 'mutable' line");
    EXPECT_EQ(message("rank 2\nmutable 1\nnames a a\nrow 0 1\n"), "bad.seed:3: duplicate variable name 'a'");
    EXPECT_EQ(message("size 2\n"), "bad.seed:1: unknown keyword 'size'");
}

TEST(PointFile, ParseAndEmit) {
    Point p = parse_point("x = i\n# comment\ny = -1/2\nz=1/2+1/3i\n");
    EXPECT_EQ(p.at("x"), GaussianRational::i());
    EXPECT_EQ(parse_point(emit_point(p)), p);
    EXPECT_THROW(parse_point("x 1\n", "p"), FileError);
    EXPECT_THROW(parse_point("x = 1\nx = 2\n", "p"), FileError);
    try {
        parse_point("x = 1\ny = 1/0\n", "pt");
        FAIL();
    } catch (const FileError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("pt:2: ", 0), 0u);
    }
}

TEST(FormFile, ParseAndDiagnostics) {
    Seed s = sl2();
    SymbolicForm f = parse_form("gen x' = (c1*c2+1)/x\n1/(c1*c2) ; x ; x'\n", s);
    EXPECT_EQ(f.generators()->names(), (std::vector<std::string>{"x", "c1", "c2", "x'"}));
    EXPECT_EQ(f.terms().size(), 1u);
    EXPECT_THROW(parse_form("1 ; x ; y\n", s, "f"), FileError);
    EXPECT_THROW(parse_form("1 ; x\n", s, "f"), FileError);
    EXPECT_THROW(parse_form("gen x = 1\n", s, "f"), FileError);
    try {
        parse_form("\n1/(x ; x ; c1\n", s, "ff");
        FAIL();
    } catch (const FileError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("ff:2: ", 0), 0u);
    }
}

TEST(Cli, WpAndGrade) {
    auto wp = cli({"wp", "a3"});
    EXPECT_EQ(wp.code, 0);
    EXPECT_EQ(wp.out, "x13^-1*x14^-1 ; x13 ; x14\nx14^-1*x15^-1 ; x14 ; x15\n");
    auto grade = cli({"grade", "markov"});
    EXPECT_EQ(grade.code, 0);
    EXPECT_EQ(grade.out, "-2\n");
    EXPECT_EQ(cli({"grade", "markov", "--weights", "1,1,2"}).out, "-2\n");
    EXPECT_EQ(cli({"grade", "markov", "--weights", "1,1"}).code, 2);
}

TEST(Cli, CatalogEmitsParseableSeed) {
    auto r = cli({"catalog", "markov"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(emit_seed(parse_seed(r.out)), r.out);
    std::string path = temp_file("markov.seed", r.out);
    EXPECT_EQ(cli({"grade", path}).out, "-2\n");
}

TEST(Cli, ParsedCatalogSeedAdoptsNaming) {
    std::string path = temp_file("a3.seed", emit_seed(a3()));
    auto r = cli({"mutate", path, "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("names x24 x14 x15"), std::string::npos);
}

TEST(Cli, MutateExplorePresent) {
    auto m = cli({"mutate", "sl2", "1"});
    EXPECT_EQ(m.code, 0);
    EXPECT_NE(m.out.find("# x' = x^-1*c1*c2 + x^-1"), std::string::npos);
    auto e = cli({"explore", "a3", "--max-seeds", "100", "--max-depth", "10"});
    EXPECT_EQ(e.out.substr(0, 37), "clusters 14\nvariables 9\ntruncated no\n");
    auto p = cli({"present", "markov"});
    EXPECT_EQ(p.code, 1);
    EXPECT_NE(p.out.find("1 -> 2 -> 3 -> 1"), std::string::npos);
}

TEST(Cli, AcyclicSearch) {
    EXPECT_EQ(cli({"acyclic", "a3"}).code, 0);
    EXPECT_EQ(cli({"acyclic", "markov", "--search", "20"}).code, 1);
    std::string path = temp_file("mu2.seed", emit_seed(mutate_seed(a3(), 1)));
    auto r = cli({"acyclic", path, "--search", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("depth 1"), std::string::npos);
}

TEST(Cli, EqualVerdicts) {
    EXPECT_EQ(cli({"equal", "sl2", "@wp", "@regular"}).code, 0);
    EXPECT_EQ(cli({"equal", "a3", "@wp", "@regular"}).code, 0);
    auto global = cli({"equal", "affine-a11", "@wp", "@global"});
    EXPECT_EQ(global.code, 1);
    EXPECT_EQ(global.out, "not equal\ndifference:\nx0^-1*x1^-1 ; x0 ; x1\n");
    std::string path = temp_file("double.form", "2/(x*c1) ; x ; c1\n2/(x*c2) ; x ; c2\n");
    EXPECT_EQ(cli({"equal", "sl2", "@wp", path}).code, 1);
}

TEST(Cli, InvarianceRegularizeTangentDeep) {
    EXPECT_EQ(cli({"invariance", "affine-a11", "--depth", "2"}).code, 0);
    auto reg = cli({"regularize", "a3", "--point", "@deep"});
    EXPECT_EQ(reg.code, 0);
    EXPECT_NE(reg.out.find("denominators x14\n"), std::string::npos);
    auto bad = cli({"regularize", "markov", "--pattern", "1,2,3"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("forced cycle: 1 -> 2 -> 3 -> 1"), std::string::npos);
    EXPECT_EQ(cli({"regularize", "markov", "--pattern", "all", "--search", "1000"}).code, 1);
    EXPECT_EQ(cli({"tangent", "a3", "--point", "@deep"}).out, "4\n");
    EXPECT_EQ(cli({"tangent", "sl2", "--point", "@deep"}).out, "3\n");
    auto deep = cli({"deep", "a3", "--point", "@deep", "--max-seeds", "100"});
    EXPECT_EQ(deep.code, 0);
    EXPECT_NE(deep.out.find("certified deep"), std::string::npos);
    auto rel = cli({"deep", "affine-a11", "--point", "@p0", "--max-seeds", "100", "--window=-2:5"});
    EXPECT_EQ(rel.code, 0);
    EXPECT_NE(rel.out.find("relative"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"wp", "/nonexistent/file.seed"}).code, 2);
    EXPECT_EQ(cli({"mutate", "sl2", "2"}).code, 2);
    std::string path = temp_file("broken.seed", "rank 2\nmutable 2\nnames a b\nrow 0 1\nrow 1 0\n");
    auto r = cli({"wp", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("broken.seed:4:"), std::string::npos);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
    auto a = cli({"explore", "affine-a11", "--max-seeds", "12"});
    auto b = cli({"explore", "affine-a11", "--max-seeds", "12"});
    EXPECT_EQ(a.out, b.out);
}
