#include <gtest/gtest.h>

#include "fracterm/errors.hpp"
#include "fracterm/fracpair.hpp"

using namespace fracterm;

namespace {
Fracpair fp(const char* s) { return parse_fracpair(s); }
std::string add(const char* a, const char* b, ZeroMode m = ZeroMode::Collapse) {
  return to_string(fp_add(fp(a), fp(b), m));
}
}  // namespace

TEST(Fracpair, Add) {
  EXPECT_EQ(add("1/2", "1/2"), "2/2");
  EXPECT_EQ(add("1/2", "1/3"), "5/6");
  EXPECT_EQ(add("7/3", "9/0"), "7/3");
  EXPECT_EQ(add("9/0", "7/3"), "7/3");
  EXPECT_EQ(add("2/0", "3/0"), "0/0");
  EXPECT_EQ(add("2/0", "3/0", ZeroMode::SumNumerators), "5/0");
  EXPECT_EQ(add("1/4", "1/6"), "5/12");
  EXPECT_EQ(add("1/-2", "1/2"), "0/-2");
}

TEST(Fracpair, Componentwise) {
  EXPECT_EQ(to_string(fp_mul(fp("1/2"), fp("2/3"))), "2/6");
  EXPECT_EQ(to_string(fp_div(fp("1/4"), fp("3/2"))), "2/12");
  EXPECT_EQ(to_string(fp_neg(fp("-3/5"))), "3/5");
}

TEST(Fracpair, Relations) {
  EXPECT_FALSE(fp_eq(fp("1/2"), fp("2/4")));
  EXPECT_TRUE(fp_equiv(fp("1/2"), fp("2/4")));
  EXPECT_TRUE(fp_equiv(fp("1/0"), fp("2/0")));
  EXPECT_EQ(fp_value(fp("3/0")).to_string(), "0/1");
  EXPECT_EQ(fp_value(fp("6/-4")).to_string(), "-3/2");
}

TEST(Fracpair, Text) {
  EXPECT_EQ(to_json(fp("-3/5")), R"({"num":"-3","den":"5"})");
  EXPECT_EQ(to_string(fp("+3/-5")), "3/-5");
  for (const char* bad : {"", "3", "3/", "/5", "a/b", "3/5/7", "3 /5", "--3/5"}) {
    EXPECT_THROW(parse_fracpair(bad), ParseError) << bad;
  }
}
