#include <gtest/gtest.h>

#include "nps/report.hpp"

using namespace nps;

TEST(Report, CycIntRoundTrip) {
  const CycInt x = CycInt::from_int(8, 7) + CycInt::from_int(8, 4) * CycInt::root_power(8, 1) -
                   CycInt::from_int(8, 4) * CycInt::root_power(8, 3);
  const auto j = to_json(x, true);
  EXPECT_EQ(j["m"], 8);
  EXPECT_EQ(j["pretty"], "-4ζ_8^3 + 4ζ_8 + 7");
  EXPECT_EQ(cycint_from_json(j), x);
  EXPECT_FALSE(to_json(x).contains("pretty"));
  EXPECT_THROW(cycint_from_json(Json{{"m", 8}}), std::invalid_argument);
}

TEST(Report, ClassificationFields) {
  const auto c = classify(AlmostSequence::parse("z,1,1,1,z,1,2,2,1", 3));
  const auto j = to_json(c);
  EXPECT_EQ(j["kind"], std::string(to_string(c.kind)));
  EXPECT_EQ(j["type"], "pair(0,2;ell=4)");
  EXPECT_EQ(j["gamma1"], 0);
  EXPECT_EQ(j["gamma2"], 2);
  EXPECT_EQ(j["ell"], 4);
  EXPECT_EQ(j["distinct_values"].size(), 2u);
  const auto u = to_json(classify(AlmostSequence::parse("z,0,0,1,0,1,1", 2)));
  EXPECT_EQ(u["gamma"], -1);
  EXPECT_FALSE(u.contains("ell"));
}

TEST(Report, SpectrumReport) {
  const auto j = spectrum_report(AlmostSequence::parse("z,2,0,2,z", 3, "a1"));
  EXPECT_EQ(j["period"], 5);
  EXPECT_EQ(j["zeros"], Json::array({0, 4}));
  EXPECT_EQ(j["spectrum"].size(), 4u);
  EXPECT_EQ(j["label"], "a1");
}

TEST(Report, PdpdsVerdicts) {
  const auto r = seq_to_diffset(AlmostSequence::parse("z,1,1,1,z,1,2,2,1", 3));
  const auto ok = pdpds_report(r, 5, verify_lpdpds(r, 5));
  EXPECT_EQ(ok["ell"], 4);
  EXPECT_EQ(ok["params"]["text"], "4-(9,3,7,3,0,2,1,2)");
  EXPECT_EQ(ok["params"]["mu2"], 2);
  const auto bad = pdpds_report(r, 1, verify_lpdpds(r, 1));
  ASSERT_TRUE(bad.contains("failure"));
  EXPECT_EQ(bad["failure"]["witnesses"].size(), 2u);
  EXPECT_NE(bad["failure"]["witnesses"][0]["count"], bad["failure"]["witnesses"][1]["count"]);
  EXPECT_EQ(to_json(r)["elements"][0], Json::array({1, 1}));
}

TEST(Report, SearchSpecRoundTrip) {
  const auto spec = search_spec_from_json(Json::parse(R"({"m":3,"period":10,"zeros":[0,5],
      "filter":{"pair":[-4,0]},"dedup":["rotation","reversal"],"node_budget":1000,"time_budget":2.5,
      "prefilter":true,"jobs":2})"));
  EXPECT_EQ(spec.zero_mode, SearchSpec::ZeroMode::Explicit);
  EXPECT_EQ(spec.zeros, (std::vector<int>{0, 5}));
  EXPECT_EQ(spec.filter, SearchSpec::Filter::Pair);
  EXPECT_EQ(spec.gamma1, -4);
  EXPECT_TRUE(spec.dedup_rotation);
  EXPECT_FALSE(spec.dedup_scalar);
  EXPECT_EQ(spec.jobs, 2u);
  const auto again = search_spec_from_json(to_json(spec));
  EXPECT_EQ(to_json(again), to_json(spec));

  const auto count = search_spec_from_json(Json::parse(R"({"m":5,"period":7,"zeros":{"count":1},"filter":{"uniform":-1}})"));
  EXPECT_EQ(count.zero_mode, SearchSpec::ZeroMode::Count);
  EXPECT_EQ(count.filter, SearchSpec::Filter::Uniform);
  EXPECT_EQ(search_spec_from_json(Json::parse(R"({"m":3,"period":5})")).zero_mode, SearchSpec::ZeroMode::Consecutive);
}

TEST(Report, SearchSpecRejectsMalformedInput) {
  for (const char* text : {R"({"m":3})", R"({"m":3,"period":5,"colour":1})", R"({"m":3,"period":5,"zeros":"all"})",
                           R"({"m":3,"period":5,"filter":{"pair":[1]}})", R"({"m":3,"period":5,"dedup":["x"]})",
                           R"({"m":3,"period":5,"node_budget":0})", R"({"m":"3","period":5})", R"([1,2])",
                           R"({"m":3,"period":5,"zeros":[0,9]})"})
    EXPECT_THROW(search_spec_from_json(Json::parse(text)), std::invalid_argument) << text;
}

TEST(Report, SearchReportShape) {
  SearchSpec spec;
  spec.m = 3;
  spec.period = 5;
  const auto j = to_json(exhaustive_search(spec));
  EXPECT_TRUE(j["exhaustive"].get<bool>());
  EXPECT_GT(j["found"].size(), 0u);
  for (const auto& f : j["found"]) {
    EXPECT_TRUE(f.contains("sequence"));
    EXPECT_TRUE(f.contains("type"));
  }
  EXPECT_TRUE(j["pruned"].contains("symmetry"));
}

TEST(Report, MiscShapes) {
  EXPECT_EQ(to_json(Multiplier{19, {0, 0}})["t"], 19);
  const auto cl = to_json(build_classes(14, 3, 5));
  EXPECT_EQ(cl["classes"][0], Json::array({1, 13}));
  EXPECT_EQ(cl["alpha"], 5);
  const auto id = to_json(verify_dickson(build_classes(13, 3)));
  EXPECT_TRUE(id["ok"].get<bool>());
}
