#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "orbiroot/cli.hpp"

using namespace orbiroot;

namespace {

const std::string kData = ORBIROOT_TEST_DATA;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "orbiroot");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("orbiroot_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

int count_lines(const std::string& text) {
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

/// Re-running a command on its own --json output must reproduce it exactly.
void expect_json_fixpoint(const std::string& tag, const std::string& config, std::vector<std::string> tail) {
    std::vector<std::string> first{"--config", config, "--json"};
    first.insert(first.end(), tail.begin(), tail.end());
    auto a = invoke(first);
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_TRUE(nlohmann::json::accept(a.out));
    auto path = write_temp(tag + ".json", a.out);
    std::vector<std::string> second{"--config", path, "--json"};
    second.insert(second.end(), tail.begin(), tail.end());
    auto b = invoke(second);
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.out, b.out) << tag;
}

}  // namespace

TEST(Cli, DegreePrintsThreeEqualValues) {
    auto r = invoke({"--config", kData + "/session.json", "degree", "E"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("deg_par               0\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("deg_stack             0\n"), std::string::npos);
    EXPECT_NE(r.out.find("deg_par_hilbert       0\n"), std::string::npos);
}

TEST(Cli, ChiAllOnTrivialLine) {
    auto r = invoke({"--config", kData + "/trivial_m0.json", "chi", "T", "--method", "all"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "parabolic             1\npushforward           1\ninertia               1\n");
}

TEST(Cli, ChiSingleMethod) {
    auto r = invoke({"--config", kData + "/session.json", "chi", "H", "--method", "inertia"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_lines(r.out), 1);
    EXPECT_EQ(invoke({"--config", kData + "/session.json", "chi", "H", "--method", "magic"}).code, 1);
}

TEST(Cli, ClassifyFinite) {
    auto r = invoke({"--config", kData + "/classify_r2_m3.json", "--json", "classify-finite"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["result"]["lines"].size(), 4u);
    for (const auto& row : doc["result"]["lines"]) {
        EXPECT_GT(row["d"].get<int>(), -3);
        EXPECT_LE(row["d"].get<int>(), 0);
    }
    EXPECT_TRUE(doc["result"]["bounds_hold"].get<bool>());
}

TEST(Cli, CorrespondDirections) {
    auto f = invoke({"--config", kData + "/session.json", "correspond", "f", "G"});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_NE(f.out.find("(0, (1/2,0))"), std::string::npos) << f.out;
    auto g = invoke({"--config", kData + "/session.json", "correspond", "g", "E"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_NE(g.out.find("(-1, [1,1])"), std::string::npos) << g.out;
    EXPECT_EQ(invoke({"--config", kData + "/session.json", "correspond", "f", "E"}).code, 1);
    auto rt = invoke({"--config", kData + "/session.json", "correspond", "roundtrip", "H"});
    ASSERT_EQ(rt.code, 0);
    EXPECT_NE(rt.out.find("identity              true"), std::string::npos);
}

TEST(Cli, TensorAndWitness) {
    auto t = invoke({"--config", kData + "/session.json", "tensor", "E", "H"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(invoke({"--config", kData + "/session.json", "tensor", "E", "F"}).code, 1);
    auto w = invoke({"--config", kData + "/session.json", "witness", "E", "--bound", "3"});
    ASSERT_EQ(w.code, 0) << w.err;
    EXPECT_NE(w.out.find("X^2"), std::string::npos) << w.out;
    auto none = invoke({"--config", kData + "/session.json", "witness", "G", "--bound", "6"});
    ASSERT_EQ(none.code, 0);
    EXPECT_NE(none.out.find("no relation"), std::string::npos);
}

TEST(Cli, SemistableAndFinite) {
    auto s = invoke({"--config", kData + "/session.json", "semistable", "F"});
    ASSERT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("semistable            true"), std::string::npos) << s.out;
    auto c = invoke({"--config", kData + "/session.json", "check-finite", "G"});
    ASSERT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("finite                false"), std::string::npos) << c.out;
}

TEST(Cli, LocalDecompose) {
    auto r = invoke({"local-decompose", kData + "/module.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("{0:1, 1:1}"), std::string::npos) << r.out;
    auto j = invoke({"--json", "local-decompose", kData + "/module.json"});
    auto path = write_temp("module_out.json", j.out);
    auto again = invoke({"--json", "local-decompose", path});
    EXPECT_EQ(j.out, again.out);
}

TEST(Cli, JsonOutputIsAFixpoint) {
    const std::string s = kData + "/session.json";
    expect_json_fixpoint("degree", s, {"degree", "H"});
    expect_json_fixpoint("chi", s, {"chi", "F"});
    expect_json_fixpoint("tensor", s, {"tensor", "F", "G"});
    expect_json_fixpoint("corr_f", s, {"correspond", "f", "F"});
    expect_json_fixpoint("corr_rt", s, {"correspond", "roundtrip", "E"});
    expect_json_fixpoint("semistable", s, {"semistable", "H"});
    expect_json_fixpoint("finite", s, {"check-finite", "F"});
    expect_json_fixpoint("witness", s, {"witness", "F", "--bound", "4"});
    expect_json_fixpoint("classify", s, {"classify-finite"});
}

TEST(Cli, JsonRationalsAreFractionStrings) {
    auto r = invoke({"--config", kData + "/session.json", "--json", "degree", "H"});
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["result"]["deg_par"], "3/1");
}

TEST(Cli, DomainErrorsExitOne) {
    EXPECT_EQ(invoke({"degree", "E"}).code, 1);
    EXPECT_EQ(invoke({"--config", kData + "/session.json", "degree", "nope"}).code, 1);
    EXPECT_EQ(invoke({"--config", "/nonexistent.json", "degree", "E"}).code, 1);
    EXPECT_EQ(invoke({"frobnicate"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
    auto bad = write_temp("bad_r.json", R"({"config": {"genus": 0, "num_points": 1, "root_index": 0}, "bundles": {}})");
    auto r = invoke({"--config", bad, "classify-finite"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("root_index"), std::string::npos);
    auto g1 = write_temp("genus1.json",
                         R"({"config": {"genus": 1, "num_points": 1, "root_index": 2}, "bundles": {"K": {"d": 0, "res": [1]}}})");
    EXPECT_EQ(invoke({"--config", g1, "semistable", "K"}).code, 1);
    EXPECT_EQ(invoke({"--config", g1, "chi", "K"}).code, 0);
}

TEST(Cli, ToleranceFromEnvironment) {
    ::setenv("ORBIROOT_TOL", "not-a-number", 1);
    EXPECT_EQ(invoke({"--config", kData + "/session.json", "chi", "F"}).code, 1);
    EXPECT_EQ(invoke({"--config", kData + "/session.json", "--tol", "1e-9", "chi", "F"}).code, 0);
    ::setenv("ORBIROOT_TOL", "1e-10", 1);
    EXPECT_EQ(invoke({"--config", kData + "/session.json", "chi", "F"}).code, 0);
    ::unsetenv("ORBIROOT_TOL");
}

TEST(Cli, Selftest) {
    auto r = invoke({"selftest", "--samples", "20", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(count_lines(r.out), 10);
}
