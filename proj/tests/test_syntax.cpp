#include <gtest/gtest.h>

#include "fracterm/errors.hpp"
#include "fracterm/syntax.hpp"
#include "generator.hpp"

using namespace fracterm;

namespace {
Term n(unsigned long k) { return Term::numeral(k); }
}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse("(2+3)/7"), (n(2) + n(3)) / n(7));
  EXPECT_EQ(parse("3_1/2"), n(3) + n(1) / n(2));
  EXPECT_EQ(parse("1/2/3"), (n(1) / n(2)) / n(3));
}

TEST(Parse, PrecedenceAndSigns) {
  EXPECT_EQ(parse("1+2*3"), n(1) + n(2) * n(3));
  EXPECT_EQ(parse("7-5-3"), (n(7) + -n(5)) + -n(3));
  EXPECT_EQ(parse("-x/2"), (-Term::var("x")) / n(2));
  EXPECT_EQ(parse("--1"), -(-n(1)));
  EXPECT_EQ(parse("  x_1 * y  "), Term::var("x_1") * Term::var("y"));
  EXPECT_EQ(parse("123456789012345678901234567890").value(), Integer("123456789012345678901234567890"));
}

TEST(Parse, Errors) {
  auto offset_of = [](const char* s) -> std::size_t {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 999;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("1+"), 2u);
  EXPECT_EQ(offset_of("(1"), 2u);
  EXPECT_EQ(offset_of("1 $ 2"), 2u);
  EXPECT_THROW(parse("0.5"), ParseError);
  EXPECT_THROW(parse("1)"), ParseError);
  // mixed literal needs n >= 1 and 0 < p < q
  EXPECT_THROW(parse("0_1/2"), ParseError);
  EXPECT_THROW(parse("1_3/2"), ParseError);
  EXPECT_THROW(parse("1_0/2"), ParseError);
}

TEST(Print, Examples) {
  EXPECT_EQ(print(n(1) / n(2)), "(1/2)");
  EXPECT_EQ(print(n(1) + -n(1)), "(1+(-1))");
  EXPECT_EQ(print((n(1) / n(4)) / (n(3) / n(2))), "((1/4)/(3/2))");
  EXPECT_EQ(print(n(7)), "7");
}

TEST(Json, Encoding) {
  EXPECT_EQ(to_json(n(1) / Term::var("x")), R"({"op":"div","args":[{"num":"1"},{"var":"x"}]})");
  EXPECT_EQ(term_from_json(R"({"op":"neg","args":[{"num":"3"}]})"), -n(3));
  EXPECT_THROW(term_from_json(R"({"op":"pow","args":[]})"), ParseError);
  EXPECT_THROW(term_from_json(R"({"op":7,"args":[]})"), ParseError);
  EXPECT_THROW(term_from_json(R"({"op":"div","args":[{"num":"1"}]})"), ParseError);
  EXPECT_THROW(term_from_json(R"({"num":"-1"})"), ParseError);
  EXPECT_THROW(term_from_json("[1,"), ParseError);
}

TEST(RoundTrip, RandomTerms) {
  testgen::TermGen gen(7);
  for (int i = 0; i < 2000; ++i) {
    Term t = gen.term();
    ASSERT_EQ(parse(print(t)), t) << print(t);
    ASSERT_EQ(term_from_json(to_json(t)), t) << print(t);
  }
}
