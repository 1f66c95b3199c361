#include <gtest/gtest.h>

#include "fracterm/errors.hpp"
#include "fracterm/syntax.hpp"
#include "fracterm/term.hpp"

using namespace fracterm;

namespace {
Term n(unsigned long k) { return Term::numeral(k); }
}  // namespace

TEST(Term, Numerals) {
  EXPECT_TRUE(numeral(0).is(Op::Numeral));
  EXPECT_EQ(numeral(0).value(), 0);
  EXPECT_EQ(numeral(1).value(), 1);
  EXPECT_EQ(numeral(5).value(), 5);
}

TEST(Term, ExpandNumeral) {
  EXPECT_EQ(expand_numeral(n(3)), (n(1) + n(1)) + n(1));
  EXPECT_EQ(expand_numeral(n(1)), n(1));
  EXPECT_EQ(expand_numeral(n(0)), n(0));
  EXPECT_EQ(expand_numeral(n(2) / Term::var("x")), (n(1) + n(1)) / Term::var("x"));
}

TEST(Term, Closedness) {
  EXPECT_TRUE(is_closed(n(1) / n(2)));
  EXPECT_FALSE(is_closed(Term::var("x") / n(2)));
  EXPECT_TRUE(is_closed(n(7)));
}

TEST(Term, SyntacticEquality) {
  EXPECT_TRUE(eq_syn(n(1) / n(2), n(1) / n(2)));
  EXPECT_FALSE(eq_syn(n(1) / n(2), n(2) / n(4)));
  // a numeral is its own constructor, not an abbreviation
  EXPECT_FALSE(eq_syn(n(2), n(1) + n(1)));
  EXPECT_FALSE(eq_syn(Term::var("x"), Term::var("y")));
  EXPECT_FALSE(eq_syn(-n(1), n(1)));
}

TEST(Term, Positions) {
  Term t = (n(1) + n(2)) / n(7);
  EXPECT_EQ(subterm_at(t, {0}), n(1) + n(2));
  EXPECT_EQ(subterm_at(t, {0, 1}), n(2));
  auto all = subterms(n(1));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].first.is_root());
  EXPECT_EQ(all[0].second, n(1));
  EXPECT_THROW(subterm_at(n(1), {0}), PositionError);
  EXPECT_THROW(subterm_at(t, {2}), PositionError);

  auto pre = subterms(t);
  ASSERT_EQ(pre.size(), 5u);
  EXPECT_EQ(pre[1].first, Position({0}));
  EXPECT_EQ(pre[2].first, Position({0, 0}));
  EXPECT_EQ(pre[3].first, Position({0, 1}));
  EXPECT_EQ(pre[4].first, Position({1}));
  EXPECT_EQ(Position({0, 1}).to_string(), "[0,1]");
  EXPECT_EQ(Position{}.to_string(), "[]");
  EXPECT_TRUE(Position({0}).is_prefix_of(Position({0, 1})));
  EXPECT_FALSE(Position({1}).is_prefix_of(Position({0, 1})));
}

TEST(Term, ReplaceAndVariables) {
  Term t = (n(1) + n(2)) / n(7);
  EXPECT_EQ(replace_at(t, {0}, n(3)), n(3) / n(7));
  EXPECT_EQ(replace_at(t, {}, n(3)), n(3));
  EXPECT_THROW(replace_at(t, {1, 0}, n(3)), PositionError);
  auto vars = free_variables(parse("y/x + x*z"));
  EXPECT_EQ(vars, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Term, Metrics) {
  Term t = (n(1) + n(2)) / n(7);
  EXPECT_EQ(t.node_count(), 5u);
  EXPECT_EQ(t.depth(), 3u);
  EXPECT_TRUE(is_division_free(n(1) + n(2)));
  EXPECT_FALSE(is_division_free(t));
}
