#include "fracterm/rules.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "fracterm/errors.hpp"
#include "fracterm/syntax.hpp"

namespace fracterm {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 12> kNames{{
    {Rule::CrEval, "CR-eval"},
    {Rule::CrFactor, "CR-factor"},
    {Rule::Qcr, "QCR"},
    {Rule::Div1, "DIV1"},
    {Rule::Div2, "DIV2"},
    {Rule::Feq, "FEQ"},
    {Rule::Dbz, "DBZ"},
    {Rule::Cfar, "CFAR"},
    {Rule::Mul, "MUL"},
    {Rule::Neg, "NEG"},
    {Rule::Sign, "SIGN"},
    {Rule::Unit, "UNIT"},
}};

using Bindings = std::map<std::string, Term>;

[[noreturn]] void no_match(Rule rule, const Term& s, const std::string& why) {
  throw MatchError(std::string(rule_name(rule)) + " does not apply to " + print(s) + ": " + why);
}

void require(bool ok, Rule rule, const Term& s, const char* why) {
  if (!ok) no_match(rule, s, why);
}

void check_bindings(Rule rule, const Term& s, const Bindings& matched, const Bindings& wanted) {
  for (const auto& [name, term] : wanted) {
    auto it = matched.find(name);
    if (it == matched.end()) no_match(rule, s, "rule has no variable '" + name + "'");
    if (!(it->second == term)) {
      no_match(rule, s, name + " is " + print(it->second) + ", not " + print(term));
    }
  }
}

Integer positive_k(Rule rule, const Term& s, const Instantiation& inst) {
  require(inst.k.has_value(), rule, s, "needs k");
  require(*inst.k >= 1, rule, s, "k must be a positive natural");
  return *inst.k;
}

Integer nonzero_magnitude(Rule rule, const Term& s, const Term& den) {
  auto v = integer_value(den);
  require(v.has_value(), rule, s, "denominators must be closed and division-free");
  require(*v != 0, rule, s, "denominator is zero");
  return abs(*v);
}

}  // namespace

const char* rule_name(Rule rule) {
  for (const auto& [r, name] : kNames) {
    if (r == rule) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [r, n] : kNames) {
    if (name == n) return r;
  }
  return std::nullopt;
}

Term integer_term(const Integer& v) {
  if (v < 0) return Term::neg(Term::numeral(Integer(-v)));
  return Term::numeral(v);
}

bool is_integer_term(const Term& t) {
  if (t.is(Op::Numeral)) return true;
  return t.is(Op::Neg) && t.arg(0).is(Op::Numeral) && t.arg(0).value() > 0;
}

std::optional<Integer> integer_value(const Term& t) {
  switch (t.op()) {
    case Op::Numeral: return t.value();
    case Op::Var:
    case Op::Div: return std::nullopt;
    case Op::Neg: {
      auto a = integer_value(t.arg(0));
      if (!a) return std::nullopt;
      return Integer(-*a);
    }
    case Op::Add:
    case Op::Mul: {
      auto a = integer_value(t.arg(0));
      if (!a) return std::nullopt;
      auto b = integer_value(t.arg(1));
      if (!b) return std::nullopt;
      return t.is(Op::Add) ? Integer(*a + *b) : Integer(*a * *b);
    }
  }
  return std::nullopt;
}

Rewrite rewrite(const Term& t, Rule rule, const Position& position, const Instantiation& inst,
                RuleOptions options) {
  const Term& s = subterm_at(t, position);
  Bindings b;
  std::vector<SideCondition> conditions;
  std::optional<Term> out;

  auto is_div = [](const Term& x) { return x.is(Op::Div); };

  switch (rule) {
    case Rule::CrEval: {
      auto v = integer_value(s);
      require(v.has_value(), rule, s, "not a closed division-free term");
      out = integer_term(*v);
      break;
    }
    case Rule::CrFactor: {
      const Integer k = positive_k(rule, s, inst);
      auto v = integer_value(s);
      require(v.has_value(), rule, s, "not a closed division-free term");
      require(*v % k == 0, rule, s, "k does not divide the value");
      out = integer_term(Integer(*v / k)) * Term::numeral(k);
      break;
    }
    case Rule::Qcr: {
      require(s.is(Op::Add) && is_div(s.arg(0)) && is_div(s.arg(1)), rule, s, "expected x/y + u/y");
      require(s.arg(0).arg(1) == s.arg(1).arg(1), rule, s, "denominators differ");
      b = {{"x", s.arg(0).arg(0)}, {"y", s.arg(0).arg(1)}, {"u", s.arg(1).arg(0)}};
      out = (b.at("x") + b.at("u")) / b.at("y");
      break;
    }
    case Rule::Div1: {
      require(is_div(s) && is_div(s.arg(0)), rule, s, "expected (x/y)/z");
      b = {{"x", s.arg(0).arg(0)}, {"y", s.arg(0).arg(1)}, {"z", s.arg(1)}};
      out = b.at("x") / (b.at("y") * b.at("z"));
      break;
    }
    case Rule::Div2: {
      require(is_div(s) && is_div(s.arg(1)), rule, s, "expected x/(y/z)");
      b = {{"x", s.arg(0)}, {"y", s.arg(1).arg(0)}, {"z", s.arg(1).arg(1)}};
      const Term& z = b.at("z");
      out = ((b.at("x") * z) * z) / (b.at("y") * z);
      break;
    }
    case Rule::Feq: {
      require(is_div(s), rule, s, "expected a fraction");
      if (inst.orientation == Orientation::LeftToRight) {
        const Integer k = positive_k(rule, s, inst);
        b = {{"x", s.arg(0)}, {"y", s.arg(1)}};
        out = (b.at("x") * Term::numeral(k)) / (b.at("y") * Term::numeral(k));
        conditions.push_back({k});
      } else {
        const Term& num = s.arg(0);
        const Term& den = s.arg(1);
        require(num.is(Op::Mul) && den.is(Op::Mul), rule, s, "expected (x*k)/(y*k)");
        const Term& k1 = num.arg(1);
        require(k1.is(Op::Numeral) && k1 == den.arg(1), rule, s, "factors are not the same numeral");
        require(k1.value() >= 1, rule, s, "k must be a positive natural");
        require(!inst.k || *inst.k == k1.value(), rule, s, "k differs from the instantiation");
        b = {{"x", num.arg(0)}, {"y", den.arg(0)}};
        out = b.at("x") / b.at("y");
        conditions.push_back({k1.value()});
      }
      break;
    }
    case Rule::Dbz: {
      require(options.allow_dbz, rule, s, "DBZ is not enabled");
      require(is_div(s) && s.arg(1).is_numeral(0), rule, s, "expected x/0");
      b = {{"x", s.arg(0)}};
      out = Term::numeral(0) / Term::numeral(1);
      break;
    }
    case Rule::Cfar: {
      require(s.is(Op::Add) && is_div(s.arg(0)) && is_div(s.arg(1)), rule, s, "expected x/y + u/v");
      b = {{"x", s.arg(0).arg(0)}, {"y", s.arg(0).arg(1)}, {"u", s.arg(1).arg(0)}, {"v", s.arg(1).arg(1)}};
      conditions.push_back({nonzero_magnitude(rule, s, b.at("y"))});
      conditions.push_back({nonzero_magnitude(rule, s, b.at("v"))});
      const Term &x = b.at("x"), &y = b.at("y"), &u = b.at("u"), &v = b.at("v");
      out = (x * v + y * u) / (y * v);
      break;
    }
    case Rule::Mul: {
      require(s.is(Op::Mul) && is_div(s.arg(0)) && is_div(s.arg(1)), rule, s, "expected (x/y)*(u/v)");
      b = {{"x", s.arg(0).arg(0)}, {"y", s.arg(0).arg(1)}, {"u", s.arg(1).arg(0)}, {"v", s.arg(1).arg(1)}};
      out = (b.at("x") * b.at("u")) / (b.at("y") * b.at("v"));
      break;
    }
    case Rule::Neg: {
      require(s.is(Op::Neg) && is_div(s.arg(0)), rule, s, "expected -(x/y)");
      b = {{"x", s.arg(0).arg(0)}, {"y", s.arg(0).arg(1)}};
      out = (-b.at("x")) / b.at("y");
      break;
    }
    case Rule::Sign: {
      require(is_div(s) && s.arg(1).is(Op::Neg), rule, s, "expected x/(-y)");
      b = {{"x", s.arg(0)}, {"y", s.arg(1).arg(0)}};
      out = (-b.at("x")) / b.at("y");
      break;
    }
    case Rule::Unit: {
      b = {{"x", s}};
      out = s / Term::numeral(1);
      break;
    }
  }
  check_bindings(rule, s, b, inst.bindings);
  std::sort(conditions.begin(), conditions.end());
  conditions.erase(std::unique(conditions.begin(), conditions.end()), conditions.end());
  return {replace_at(t, position, std::move(*out)), std::move(conditions)};
}

Term apply_rule(const Term& t, Rule rule, const Position& position, const Instantiation& inst,
                RuleOptions options) {
  return rewrite(t, rule, position, inst, options).term;
}

}  // namespace fracterm
