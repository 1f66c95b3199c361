#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracterm/numbers.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// Rewrite rules available to the calculators. Each is a single
/// equation applied left to right at one position (FEQ in either
/// orientation):
///
///   CR-eval    c = k                      c closed, division-free, value k
///   CR-factor  c = c' * k                 c has value c' * k
///   QCR        x/y + u/y = (x+u)/y
///   DIV1       (x/y)/z = x/(y*z)
///   DIV2       x/(y/z) = (x*z*z)/(y*z)
///   FEQ        k != 0 -> x/y = (x*k)/(y*k)
///   DBZ        x/0 = 0/1                  only when explicitly enabled
///   CFAR       y != 0 & v != 0 -> x/y + u/v = (x*v + y*u)/(y*v)
///   MUL        (x/y)*(u/v) = (x*u)/(y*v)
///   NEG        -(x/y) = (-x)/y
///   SIGN       x/(-y) = (-x)/y
///   UNIT       x = x/1
///
/// CR-eval on a negative value yields -(k); zero is the numeral 0.
enum class Rule { CrEval, CrFactor, Qcr, Div1, Div2, Feq, Dbz, Cfar, Mul, Neg, Sign, Unit };

const char* rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

enum class Orientation { LeftToRight, RightToLeft };

/// The hypothesis k != 0 for a positive natural k.
struct SideCondition {
  Integer k;
  friend bool operator<(const SideCondition& a, const SideCondition& b) { return a.k < b.k; }
  friend bool operator==(const SideCondition& a, const SideCondition& b) { return a.k == b.k; }
};

/// Parameters of a rule instance. `bindings` are checked against the
/// matched pattern variables (x, y, z, u, v); `k` is the FEQ or CR-factor
/// multiplier.
struct Instantiation {
  std::map<std::string, Term> bindings;
  std::optional<Integer> k;
  Orientation orientation = Orientation::LeftToRight;
};

struct RuleOptions {
  bool allow_dbz = false;
};

struct Rewrite {
  Term term;
  std::vector<SideCondition> conditions;
};

/// One rule instance at `position`, returning the rewritten whole term and
/// the side conditions the step relies on. Throws MatchError when the
/// instance does not match and PositionError for a bad position.
Rewrite rewrite(const Term& t, Rule rule, const Position& position, const Instantiation& inst = {},
                RuleOptions options = {});

/// rewrite(...).term
Term apply_rule(const Term& t, Rule rule, const Position& position, const Instantiation& inst = {},
                RuleOptions options = {});

/// Numeral k for k >= 0, -(k) for k < 0.
Term integer_term(const Integer& v);
/// True for terms integer_term can produce.
bool is_integer_term(const Term& t);
/// Value of a closed division-free term; nullopt otherwise.
std::optional<Integer> integer_value(const Term& t);

}  // namespace fracterm
