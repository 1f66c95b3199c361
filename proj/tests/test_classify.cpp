#include <gtest/gtest.h>

#include "fracterm/classify.hpp"
#include "fracterm/errors.hpp"
#include "fracterm/syntax.hpp"
#include "generator.hpp"
#include "oracle.hpp"

using namespace fracterm;

namespace {
Classification q0(const char* s) { return classify(parse(s), Meadow::q0()); }
}  // namespace

TEST(Classify, UncommonDenominator) {
  auto c = q0("(2+7)/(1+((7-5)-3))");
  EXPECT_TRUE(c.is_fraction);
  EXPECT_EQ(c.is_common, false);
  EXPECT_EQ(c.is_uncommon, true);
  EXPECT_EQ(c.is_safe_term, false);
  EXPECT_TRUE(c.is_flat);
}

TEST(Classify, Composed) {
  auto c = q0("(1+1/2)/3");
  EXPECT_TRUE(c.is_fraction);
  EXPECT_FALSE(c.is_flat);
  EXPECT_TRUE(c.is_composed);
  ASSERT_TRUE(c.numerator);
  EXPECT_EQ(*c.numerator, parse("1+1/2"));
  EXPECT_EQ(*c.denominator, parse("3"));
  EXPECT_EQ(c.is_safe_term, true);
}

TEST(Classify, SimpleClasses) {
  auto four_halves = q0("4/2");
  EXPECT_TRUE(four_halves.is_simple);
  EXPECT_TRUE(four_halves.is_scheinbruch);
  EXPECT_TRUE(four_halves.is_improper);
  EXPECT_FALSE(four_halves.is_simplified);

  auto half = q0("1/2");
  EXPECT_EQ(half.is_unit, true);
  EXPECT_TRUE(half.is_proper);
  EXPECT_TRUE(half.is_simplified);
  EXPECT_FALSE(half.is_scheinbruch);

  auto seven = q0("7");
  EXPECT_FALSE(seven.is_fraction);
  EXPECT_FALSE(seven.numerator);
  EXPECT_FALSE(seven.denominator);

  auto neg = q0("(-3)/6");
  EXPECT_TRUE(neg.is_simple);
  EXPECT_TRUE(neg.negative);
  EXPECT_FALSE(neg.is_simplified);

  // 3/0 is simple but uncommon, so it is neither simple-in-A nor Scheinbruch
  auto zero = q0("3/0");
  EXPECT_FALSE(zero.is_simple);
  EXPECT_FALSE(zero.is_scheinbruch);
  EXPECT_EQ(zero.is_uncommon, true);
}

TEST(Classify, OpenTerms) {
  auto c = q0("x/2");
  EXPECT_EQ(c.is_common, true);
  // every denominator is closed, so safety is decided
  EXPECT_EQ(c.is_safe_term, true);
  auto d = q0("1/x");
  EXPECT_FALSE(d.is_common.has_value());
  EXPECT_FALSE(d.is_unit.has_value());
  EXPECT_FALSE(d.is_safe_term.has_value());
  // an uncommon closed subterm decides safety even in an open term
  EXPECT_EQ(q0("x + 1/0").is_safe_term, false);
}

TEST(Classify, MeadowDependence) {
  auto c = classify(parse("1/5"), Meadow::gfp(5));
  EXPECT_EQ(c.is_uncommon, true);
  EXPECT_EQ(classify(parse("1/5"), Meadow::q0()).is_common, true);
}

TEST(Classify, Json) {
  EXPECT_EQ(to_json(q0("7")),
            R"({"is_fraction":false,"is_closed":true,"is_flat":false,"is_composed":false,"is_common":false,"is_uncommon":false,"is_safe_term":true,"is_safe_fraction":false,"is_simple":false,"is_unit":false,"is_simplified":false,"is_proper":false,"is_improper":false,"is_scheinbruch":false,"is_mixed":false,"negative":false,"numerator":null,"denominator":null})");
}

TEST(Equalities, Examples) {
  const Meadow m = Meadow::q0();
  EXPECT_TRUE(simple_equivalent(parse("1/2"), parse("2/4"), m));
  EXPECT_FALSE(simple_equivalent(parse("1/2"), parse("2/3"), m));
  EXPECT_TRUE(simple_equivalent(parse("1/2"), parse("3/1"), Meadow::gfp(5)));
  EXPECT_THROW(simple_equivalent(parse("1+1/2"), parse("1/2"), m), DomainError);

  EXPECT_FALSE(eq_syn(parse("1/2"), parse("2/4")));
  EXPECT_FALSE(eq_pair(parse("1/2"), parse("2/4"), m));
  EXPECT_TRUE(eq_val(parse("1/2"), parse("2/4"), m));
  EXPECT_TRUE(eq_pair(parse("(1+0)/2"), parse("1/2"), m));
  EXPECT_FALSE(eq_syn(parse("(1+0)/2"), parse("1/2")));
  EXPECT_TRUE(eq_val(parse("1/1 + 1/0"), parse("1"), m));
  EXPECT_TRUE(eq_pair(parse("3"), parse("3/1"), m));
  EXPECT_THROW(eq_val(parse("x"), parse("x"), m), DomainError);
}

TEST(Safety, AgreesWithOracle) {
  testgen::TermGen gen(5);
  gen.force_zero_denominators(0.15);
  int unsafe = 0;
  for (int i = 0; i < 3000; ++i) {
    Term t = gen.term();
    bool expect = oracle::q0_safe(t);
    ASSERT_EQ(is_safe(t, Meadow::q0()), expect) << print(t);
    ASSERT_EQ(classify(t, Meadow::q0()).is_safe_term, expect);
    auto bad = first_uncommon_fraction(t, Meadow::q0());
    ASSERT_EQ(bad.has_value(), !expect);
    if (bad) {
      ++unsafe;
      const Term& s = subterm_at(t, *bad);
      ASSERT_TRUE(s.is(Op::Div));
      ASSERT_EQ(oracle::q0_eval(s.arg(1)), 0);
      // outermost: no proper prefix is an uncommon fraction
      for (const auto& [p, u] : subterms(t)) {
        if (p.is_prefix_of(*bad) && p != *bad && u.is(Op::Div)) ASSERT_NE(oracle::q0_eval(u.arg(1)), 0);
      }
    }
  }
  EXPECT_GT(unsafe, 300);
}
