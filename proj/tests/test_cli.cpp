#include "affpoin/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = affpoin::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Series) {
  auto r = run({"series", "--type", "A1", "--refl", "[]", "--N", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("coefficients: 1,2,2,2"), std::string::npos);
  r = run({"series", "--type", "A1", "--refl", "s0,s1", "--N", "3"});
  EXPECT_NE(r.out.find("coefficients: 1,0,0,0"), std::string::npos);
  r = run({"series", "--type", "A2", "--N", "2", "--format", "json", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["coefficients"], nlohmann::json::parse("[1,3,6]"));
}

TEST(Cli, Rational) {
  auto r = run({"rational", "--type", "A1", "--format", "json", "--verify"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rational"]["num"], nlohmann::json::parse(R"(["1","1"])"));
  EXPECT_EQ(j["rational"]["den"], nlohmann::json::parse(R"(["1","-1"])"));
  r = run({"rational", "--type", "A1", "--refl", "s1", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rational"]["num"], nlohmann::json::parse(R"(["1"])"));
  EXPECT_EQ(j["rational"]["den"], nlohmann::json::parse(R"(["1","-1"])"));
  r = run({"rational", "--type", "A1", "--refl", "s0,s1"});
  EXPECT_NE(r.out.find("num: 1\nden: 1\n"), std::string::npos);
}

TEST(Cli, TranslationsAndDescent) {
  auto r = run({"translations", "--type", "A1", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("num: 1,0,1\nden: 1,0,-1"), std::string::npos);
  r = run({"descent", "--type", "A1", "--refl", "s0,s1", "--eval-t", "1"});
  EXPECT_NE(r.out.find("num: 1,1\nden: 1,-1"), std::string::npos);
  r = run({"descent", "--type", "C2", "--refl", "s0,s2", "--verify", "--N", "10", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["descent"].size(), 3u);
}

TEST(Cli, Canonical) {
  auto r = run({"canonical", "--type", "A1", "--refl", R"([{"beta":[1],"k":0},{"beta":[1],"k":1}])", "--verify",
                "--N", "8", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["reflections"].size(), 2u);
  r = run({"canonical", "--type", "A1", "--refl", R"({"reflections":[{"beta":[1],"k":0},{"beta":[1],"k":1}]})",
           "--max-iter", "0"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("working set"), std::string::npos);
}

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "--type", "G2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 12\nlengths: 1,2,2,2,2,2,1"), std::string::npos);
  r = run({"enumerate", "--cartan", "[[2,-1],[-1,2]]", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["order"], 6);
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(run({"series", "--type", "A1", "--refl", R"([{"beta":[2],"k":0}])"}).code, 2);
  EXPECT_NE(run({"series", "--type", "A1", "--refl", R"([{"beta":[1],"k":0},{"beta":[3],"k":0}])"}).err.find("reflection 1"),
            std::string::npos);
  EXPECT_EQ(run({"series", "--type", "A1", "--N", "-1"}).code, 2);
  EXPECT_EQ(run({"series", "--type", "Q1"}).code, 2);
  EXPECT_EQ(run({"series"}).code, 2);
  EXPECT_EQ(run({"series", "--type", "A1", "--cartan", "[[2]]"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"series", "--type", "A1", "--refl", "s5"}).code, 2);
  EXPECT_EQ(run({"series", "--type", "A1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"descent", "--type", "A1", "--refl", "s1", "--eval-t", "1/0"}).code, 2);
}

}  // namespace
