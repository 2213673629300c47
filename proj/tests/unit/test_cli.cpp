#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = nps::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NPS_TEST_DATA_DIR) + "/" + name; }

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, AutocorrTable) {
  const auto r = run({"autocorr", "--seq", "z,2,0,2,z", "--m", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1\t"), std::string::npos);
  const auto j = run({"--json", "autocorr", "--seq", data("ternary.seq")});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(json_of(j)["spectrum"].size(), 8u);
}

TEST(Cli, ClassifyFromFileAndStdin) {
  const auto f = run({"classify", "--seq", data("ternary.seq")});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(json_of(f)["classification"]["type"], "pair(0,2;ell=4)");
  const auto s = run({"classify", "--seq", "-", "--m", "3"}, "z,1,1,1,z,1,2,2,1\n");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json_of(s)["classification"]["type"], "pair(0,2;ell=4)");
}

TEST(Cli, MalformedInputIsAUsageError) {
  EXPECT_EQ(run({"classify", "--seq", "x", "--m", "3"}).code, 2);
  EXPECT_EQ(run({"classify", "--seq", "x"}).code, 2);
  EXPECT_EQ(run({"classify", "--seq", "0,1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"construct", "prop5", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CrossConstructionPipesIntoVerify) {
  const auto c = run({"construct", "prop5", "--n", "7", "--a", "5", "--b", "3"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("2-(7,7,12,5,7,5,2,1)"), std::string::npos);
  const auto v = run({"verify", "pdpds", "--set", "-", "--ell", "2", "--params", "2-(7,7,12,5,7,5,2,1)"}, c.out);
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(json_of(v)["ok"].get<bool>());
  const auto wrong = run({"verify", "pdpds", "--set", "-", "--ell", "2", "--params", "2-(7,7,12,5,7,5,2,2)"}, c.out);
  EXPECT_EQ(wrong.code, 1);
  EXPECT_EQ(run({"verify", "pdpds", "--set", "-", "--ell", "1"}, c.out).code, 1);
}

TEST(Cli, HalfPeriodCrossConstructionReportsMismatch) {
  const auto c = run({"construct", "prop5", "--n", "6", "--a", "3", "--b", "0"});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.out.find("verified: no"), std::string::npos);
}

TEST(Cli, QuaternaryPipesIntoClassify) {
  const auto c = run({"construct", "quaternary", "--q", "29"});
  ASSERT_EQ(c.code, 0) << c.err;
  const auto k = run({"classify", "--seq", "-"}, c.out);
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(json_of(k)["classification"]["type"], "uniform(13)");
  const auto b = run({"construct", "quaternary", "--q", "29", "--binary"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(json_of(run({"classify", "--seq", "-"}, b.out))["classification"]["type"], "uniform(-1)");
  EXPECT_EQ(run({"construct", "quaternary", "--q", "19"}).code, 2);
}

TEST(Cli, SigmaSequences) {
  const auto c = run({"construct", "sigma", "--q", "14", "--m", "3", "--alpha", "5"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("z,0,z,2,z,1,z,z,z,1,z,2,z,0"), std::string::npos);
  EXPECT_EQ(run({"construct", "sigma", "--q", "13", "--m", "3", "--sigma", "2,1"}).code, 0);
  EXPECT_EQ(run({"construct", "sigma", "--q", "15", "--m", "2"}).code, 2);
}

TEST(Cli, FamilyAndCounterexample) {
  const auto f = run({"--json", "construct", "family2m", "--seq", "z,z,2,1,0,1,2", "--m", "3"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(json_of(f).size(), 6u);
  EXPECT_EQ(run({"construct", "family2m", "--seq", "z,z,0,1,2,2,2,3,2,1,2,3,2,2,2,1,0", "--m", "4"}).code, 2);
}

TEST(Cli, CombinePretty) {
  const auto c = run({"--pretty", "construct", "combine", "--q", "17", "--m", "8", "--grouping", "0,1,0,1,0,1,0,1",
                      "--root-order", "8", "--alpha", "6"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("-4ζ_8^3 + 4ζ_8 + 7"), std::string::npos);
}

TEST(Cli, VerifyCyclotomy) {
  const auto d = run({"verify", "dickson", "--q", "199", "--m", "6"});
  ASSERT_EQ(d.code, 0) << d.out;
  EXPECT_TRUE(json_of(d)["dickson"]["ok"].get<bool>());
  const auto c = run({"verify", "dickson", "--q", "14", "--m", "3", "--alpha", "5"});
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(json_of(c)["dickson"].is_string());
  EXPECT_EQ(run({"verify", "sumdk", "--q", "7", "--m", "6"}).code, 1);
  EXPECT_EQ(run({"verify", "sumdk", "--q", "13", "--m", "5"}).code, 2);
}

TEST(Cli, VerifySetIdentities) {
  const auto i = run({"verify", "identities", "--set", data("ternary.set"), "--ell", "4"});
  ASSERT_EQ(i.code, 0) << i.out << i.err;
  EXPECT_EQ(json_of(i)["params"]["text"], "4-(9,3,7,3,0,2,1,2)");
  EXPECT_EQ(run({"verify", "identities", "--set", data("ternary.set")}).code, 2);
  EXPECT_EQ(run({"verify", "groupring", "--set", data("ternary.set"), "--params", "4-(9,3,7,3,0,2,1,2)"}).code, 0);
  EXPECT_EQ(run({"verify", "groupring", "--set", data("ternary.set"), "--params", "4-(9,3,7,3,0,2,1,1)"}).code, 1);
  EXPECT_EQ(run({"verify", "groupring", "--set", data("ternary.set"), "--params", "nonsense"}).code, 2);
}

TEST(Cli, MultipliersAndOrbits) {
  const auto m = run({"multipliers", "--set", data("ternary.set")});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(json_of(m)[0]["t"], 1);
  const auto o = run({"orbits", "--n", "10", "--m", "3", "--t", "19", "--union-size", "8", "--zeros", "0,5", "--ell", "5"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = json_of(o);
  EXPECT_EQ(j["orbits"].size(), 18u);
  bool seen = false;
  for (const auto& c : j["collections"]) seen = seen || c["params"]["text"] == "5-(10,3,8,2,0,0,2,4)";
  EXPECT_TRUE(seen);
  EXPECT_EQ(run({"orbits", "--n", "10", "--m", "3", "--t", "5"}).code, 2);
}

TEST(Cli, SearchOutputDoesNotDependOnJobs) {
  const auto a = run({"--jobs", "1", "search", "--spec", data("ten_by_three.json")});
  const auto b = run({"--jobs", "3", "search", "--spec", data("ten_by_three.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json_of(a)["counts_by_type"].contains("pair(-4,0;ell=5)"));
  const auto t = run({"search", "--spec", data("ten_by_three.json"), "--table"});
  EXPECT_NE(t.out.find("exhaustive yes"), std::string::npos);
  EXPECT_EQ(run({"search", "--spec", "-"}, R"({"m":3,"period":5,"bogus":1})").code, 2);
  EXPECT_EQ(run({"search", "--spec", "-"}, "{not json").code, 2);
}

TEST(Cli, ProbeIsEmptyAndExhaustive) {
  const auto p = run({"probe", "--m", "5", "--max-period", "9"});
  ASSERT_EQ(p.code, 0) << p.err;
  for (const auto& row : json_of(p)["periods"]) {
    EXPECT_TRUE(row["exhaustive"].get<bool>());
    EXPECT_TRUE(row["found"].empty());
  }
  const auto control = run({"probe", "--m", "3", "--min-period", "5", "--max-period", "5"});
  EXPECT_FALSE(json_of(control)["periods"][0]["found"].empty());
  const auto table = run({"probe", "--m", "3", "--min-period", "5", "--max-period", "5", "--table"});
  EXPECT_EQ(table.out.rfind("period\tfound\tnodes\texhaustive\n", 0), 0u);
}
