#include <gtest/gtest.h>

#include "crossfam/io.hpp"

using namespace crossfam;
using io::json;

TEST(Io, FamilyRoundTrip) {
  const SetFamily f = h1(8, Subset::full(8), Subset(8, {1}), 3);
  const json j = io::family_json(f);
  EXPECT_EQ(j["sets"][0], json({1, 2, 3}));
  EXPECT_EQ(io::family_from_json(j), f);
  EXPECT_EQ(io::family_from_json(io::parse(j.dump(), "test")), f);
}

TEST(Io, PairRoundTripIsByteStable) {
  const FamilyPair p = thm2_pair(8, 3, 1, 1);
  const std::string text = io::pair_json(p).dump();
  const FamilyPair back = io::pair_from_json(io::parse(text, "test"));
  EXPECT_EQ(back, p);
  EXPECT_EQ(io::pair_json(back).dump(), text);
}

TEST(Io, SpecRoundTrip) {
  ConstructionSpec spec{"h1", Params{8, 3, 1, 1}, {{"X", {1, 2, 3, 4}}, {"W", {1}}}, 18446744073709551615ull};
  const json j = io::spec_json(spec);
  EXPECT_EQ(j["seed"], "18446744073709551615");
  EXPECT_EQ(io::spec_from_json(j), spec);
  json numeric = j;
  numeric["seed"] = 12;
  EXPECT_EQ(io::spec_from_json(numeric).seed, 12u);
  numeric.erase("seed");
  EXPECT_FALSE(io::spec_from_json(numeric).seed.has_value());
}

TEST(Io, RejectsMalformedInput) {
  auto pair_text = [](const std::string& F) {
    return R"({"n":5,"k":2,"t":1,"s":1,"G":[[1,2]],"F":)" + F + "}";
  };
  auto rejects = [&](const std::string& text) {
    EXPECT_THROW(io::pair_from_json(io::parse(text, "test")), InvalidArgument) << text;
  };
  EXPECT_NO_THROW(io::pair_from_json(io::parse(pair_text("[[1,2],[1,3]]"), "test")));
  rejects(pair_text("[[1,2],[1,2]]"));  // duplicate member
  rejects(pair_text("[[1,3],[1,2]]"));  // members out of order
  rejects(pair_text("[[2,1]]"));        // elements out of order
  rejects(pair_text("[[1,6]]"));        // outside [n]
  rejects(pair_text("[[0,1]]"));
  rejects(pair_text("[[1,2,3]]"));      // wrong size
  rejects(pair_text("[]"));             // empty family
  rejects(pair_text("[[1,\"2\"]]"));
  rejects(pair_text("[[1,2.5]]"));
  rejects(R"({"n":5,"k":2,"t":1,"s":1,"F":[[1,2]]})");
  rejects(R"({"n":5,"k":6,"t":1,"s":1,"F":[[1,2]],"G":[[1,2]]})");
  rejects(R"({"n":5,"k":2,"t":0,"s":1,"F":[[1,2]],"G":[[1,2]]})");
  EXPECT_THROW(io::parse("{\"n\":5,", "test"), InvalidArgument);
}

TEST(Io, Seeds) {
  EXPECT_EQ(io::parse_seed("0"), 0u);
  EXPECT_EQ(io::parse_seed("18446744073709551615"), 18446744073709551615ull);
  EXPECT_THROW(io::parse_seed("18446744073709551616"), InvalidArgument);
  EXPECT_THROW(io::parse_seed("-1"), InvalidArgument);
  EXPECT_THROW(io::parse_seed(""), InvalidArgument);
  EXPECT_THROW(io::parse_seed("12a"), InvalidArgument);
  json bad{{"kind", "h1"}, {"n", 5}, {"k", 2}, {"t", 1}, {"s", 1}, {"seed", -3}};
  EXPECT_THROW(io::spec_from_json(bad), InvalidArgument);
}

TEST(Io, LargeCountsAreStrings) {
  const json j = io::big(binomial(100, 50));
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(j, "100891344545564193334812497256");
  SearchResult r = brute_force_max(Params{4, 2, 1, 6}, false);
  EXPECT_EQ(io::search_json(r)["max_product"], "36");
}

TEST(Io, LemmaCsv) {
  LemmaCheck c;
  c.lemma_id = "binomial-ratio";
  c.part = "i";
  c.params = {{"n", 12}, {"k", 4}};
  c.lhs = 27;
  c.relation = "<=";
  c.rhs = 45;
  c.pass = true;
  EXPECT_EQ(io::lemma_csv({c}), "lemma_id,part,params,lhs,relation,rhs,pass\nbinomial-ratio,i,k=4 n=12,27,<=,45,true\n");
  EXPECT_EQ(io::lemma_csv({c}, false), "binomial-ratio,i,k=4 n=12,27,<=,45,true\n");
}
