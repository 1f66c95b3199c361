#include "fracterm/calculator.hpp"

#include <stdexcept>

#include "fracterm/classify.hpp"
#include "fracterm/errors.hpp"
#include "fracterm/meadow.hpp"
#include "fracterm/syntax.hpp"
#include "json_detail.hpp"

namespace fracterm {

SafetyError::SafetyError(Term subterm, Position position)
    : Error("unsafe term: uncommon fraction " + print(subterm) + " at position " + position.to_string()),
      subterm_(std::move(subterm)),
      position_(std::move(position)) {}

bool is_normal_form(const Term& t) {
  if (!t.is(Op::Div) || !is_integer_term(t.arg(0)) || !t.arg(1).is(Op::Numeral)) return false;
  const Integer& l = t.arg(1).value();
  const Integer k = t.arg(0).is(Op::Numeral) ? t.arg(0).value() : t.arg(0).arg(0).value();
  return l >= 1 && gcd(k, l) == 1;
}

namespace {

// Rewrites a closed term bottom-up into normal form. Every subterm is
// brought either to an integer term (when division-free) or to a normal
// form fraction, then its parent is combined by a fixed rule sequence.
class Engine {
 public:
  Engine(Term t, Mode mode, bool record) : current_(std::move(t)), mode_(mode), record_(record) {}

  NormalForm run() {
    if (normalize_at(Position{}) == Shape::Integer) apply(Rule::Unit, Position{});
    NormalForm nf{current_, std::move(conditions_), std::nullopt};
    nf.conditions.insert({current_.arg(1).value()});
    if (record_) nf.trace = Derivation{std::move(steps_)};
    return nf;
  }

 private:
  enum class Shape { Integer, Fraction };

  const Term& at(const Position& p) const { return subterm_at(current_, p); }

  void apply(Rule rule, const Position& p, Instantiation inst = {}) {
    Rewrite r = rewrite(current_, rule, p, inst, {mode_ == Mode::Full});
    for (const auto& c : r.conditions) conditions_.insert(c);
    if (record_) {
      steps_.push_back({rule, p, std::move(inst), current_, r.term, std::move(r.conditions)});
    }
    current_ = std::move(r.term);
  }

  void apply_k(Rule rule, const Position& p, const Integer& k, Orientation o) {
    Instantiation inst;
    inst.k = k;
    inst.orientation = o;
    apply(rule, p, std::move(inst));
  }

  void to_integer(const Position& p) {
    if (!is_integer_term(at(p))) apply(Rule::CrEval, p);
  }

  Shape normalize_at(const Position& p) {
    const Term t = at(p);
    if (is_division_free(t)) {
      to_integer(p);
      return Shape::Integer;
    }
    if (is_normal_form(t)) return Shape::Fraction;
    const Position left = p.child(0);
    switch (t.op()) {
      case Op::Neg:
        normalize_at(left);
        apply(Rule::Neg, p);
        to_integer(left);
        return Shape::Fraction;
      case Op::Add:
      case Op::Mul: {
        const Position right = p.child(1);
        if (normalize_at(left) == Shape::Integer) apply(Rule::Unit, left);
        if (normalize_at(right) == Shape::Integer) apply(Rule::Unit, right);
        if (t.is(Op::Add)) {
          add(p);
        } else {
          apply(Rule::Mul, p);
          to_integer(left);
          to_integer(right);
          reduce(p);
        }
        return Shape::Fraction;
      }
      case Op::Div:
        divide(p, normalize_at(left), normalize_at(p.child(1)));
        return Shape::Fraction;
      default:
        throw std::logic_error("unreachable: division-free leaf");
    }
  }

  // Div(a, b) with a, b each an integer term or a normal-form fraction.
  void divide(const Position& p, Shape a, Shape b) {
    const Position left = p.child(0);
    const Position right = p.child(1);
    if (b == Shape::Integer) {
      if (a == Shape::Fraction && !at(right).is_numeral(0)) {
        apply(Rule::Div1, p);
        to_integer(right);
      }
      finish(p);
      return;
    }
    if (a == Shape::Fraction) {
      apply(Rule::Div1, p);
      normalize_at(right);
    }
    apply(Rule::Div2, p);
    to_integer(left);
    to_integer(right);
    finish(p);
  }

  // x/d with d an integer term (x an integer term unless d is 0).
  void finish(const Position& p) {
    const Term& d = at(p).arg(1);
    if (d.is_numeral(0)) {
      if (mode_ != Mode::Full) throw std::logic_error("zero denominator in a safe derivation");
      apply(Rule::Dbz, p);
      return;
    }
    if (d.is(Op::Neg)) {
      apply(Rule::Sign, p);
      to_integer(p.child(0));
    }
    reduce(p);
  }

  // c/l -> (c/h)/(l/h) for h = gcd(|c|, l) via CR-factor twice and FEQ
  // right to left.
  void reduce(const Position& p) {
    const Term& f = at(p);
    const Integer k = abs(*integer_value(f.arg(0)));
    const Integer h = gcd(k, f.arg(1).value());
    if (h <= 1) return;
    apply_k(Rule::CrFactor, p.child(0), h, Orientation::LeftToRight);
    apply_k(Rule::CrFactor, p.child(1), h, Orientation::LeftToRight);
    apply_k(Rule::Feq, p, h, Orientation::RightToLeft);
  }

  void add(const Position& p) {
    const Position left = p.child(0);
    const Position right = p.child(1);
    if (mode_ == Mode::Full) {
      apply(Rule::Cfar, p);
      to_integer(left);
      to_integer(right);
      reduce(p);
      return;
    }
    // Expand both to the least common denominator, then merge with QCR.
    const Integer l1 = at(left).arg(1).value();
    const Integer l2 = at(right).arg(1).value();
    if (l1 != l2) {
      const Integer g = gcd(l1, l2);
      const Integer m1 = l2 / g;
      const Integer m2 = l1 / g;
      for (const auto& [pos, m] : {std::pair{left, m1}, std::pair{right, m2}}) {
        if (m <= 1) continue;
        apply_k(Rule::Feq, pos, m, Orientation::LeftToRight);
        to_integer(pos.child(0));
        to_integer(pos.child(1));
      }
    }
    apply(Rule::Qcr, p);
    to_integer(left);
    reduce(p);
  }

  Term current_;
  Mode mode_;
  bool record_;
  std::set<SideCondition> conditions_;
  std::vector<Step> steps_;
};

void require_closed(const Term& t) {
  if (!is_closed(t)) throw DomainError("only closed terms can be normalized");
}

}  // namespace

NormalForm normalize_full(const Term& t, bool record_trace) {
  require_closed(t);
  return Engine(t, Mode::Full, record_trace).run();
}

NormalForm normalize_safe(const Term& t) {
  require_closed(t);
  if (auto bad = first_uncommon_fraction(t, Meadow::q0())) {
    throw SafetyError(subterm_at(t, *bad), *bad);
  }
  return Engine(t, Mode::Safe, true).run();
}

NormalForm normalize(const Term& t, Mode mode, bool record_trace) {
  if (mode == Mode::Full) return normalize_full(t, record_trace);
  NormalForm nf = normalize_safe(t);
  if (!record_trace) nf.trace.reset();
  return nf;
}

Comparison check_equal(const Term& s, const Term& t, Mode mode) {
  NormalForm a = normalize(s, mode, false);
  NormalForm b = normalize(t, mode, false);
  std::set<SideCondition> all = a.conditions;
  all.insert(b.conditions.begin(), b.conditions.end());
  const bool equal = a.result == b.result;
  return {equal, std::move(a), std::move(b), std::move(all)};
}

std::string display(const NormalForm& nf) {
  const Term& num = nf.result.arg(0);
  std::string sign = num.is(Op::Neg) ? "-" : "";
  const Integer& k = num.is(Op::Neg) ? num.arg(0).value() : num.value();
  return sign + k.get_str(10) + "/" + nf.result.arg(1).value().get_str(10);
}

namespace {

using detail::Json;

Json conditions_json(const auto& conditions) {
  Json arr = Json::array();
  for (const auto& c : conditions) arr.push_back(detail::integer_json(c.k));
  return arr;
}

Json step_json(const Step& s) {
  Json j;
  j["rule"] = rule_name(s.rule);
  j["position"] = detail::position_json(s.position);
  j["before"] = detail::term_json(s.before);
  j["after"] = detail::term_json(s.after);
  j["conditions"] = conditions_json(s.conditions);
  if (s.instantiation.k) {
    Json inst;
    inst["k"] = detail::integer_json(*s.instantiation.k);
    inst["orientation"] = s.instantiation.orientation == Orientation::LeftToRight ? "ltr" : "rtl";
    j["instantiation"] = std::move(inst);
  }
  return j;
}

Json steps_json(const Derivation& d) {
  Json arr = Json::array();
  for (const auto& s : d.steps) arr.push_back(step_json(s));
  return arr;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) return Integer(j.get<std::string>(), 10);
  throw ParseError("expected an integer", 0);
}

std::vector<SideCondition> conditions_from_json(const Json& j) {
  std::vector<SideCondition> out;
  for (const auto& c : j) out.push_back({integer_from_json(c)});
  return out;
}

}  // namespace

std::string to_json(const NormalForm& nf) {
  Json j;
  j["result"] = detail::term_json(nf.result);
  j["conditions"] = conditions_json(nf.conditions);
  if (nf.trace) j["steps"] = steps_json(*nf.trace);
  return j.dump(2);
}

std::string to_json(const Derivation& d) { return steps_json(d).dump(2); }

NormalForm normal_form_from_json(std::string_view json) {
  Json j;
  try {
    j = Json::parse(json);
    NormalForm nf{detail::term_from_json_value(j.at("result")), {}, std::nullopt};
    for (const auto& c : conditions_from_json(j.at("conditions"))) nf.conditions.insert(c);
    if (j.contains("steps")) {
      Derivation d;
      for (const auto& s : j.at("steps")) {
        auto rule = rule_from_name(s.at("rule").get<std::string>());
        if (!rule) throw ParseError("unknown rule " + s.at("rule").dump(), 0);
        Step step{*rule,
                  Position(s.at("position").get<std::vector<std::size_t>>()),
                  {},
                  detail::term_from_json_value(s.at("before")),
                  detail::term_from_json_value(s.at("after")),
                  conditions_from_json(s.at("conditions"))};
        if (s.contains("instantiation")) {
          const auto& inst = s.at("instantiation");
          step.instantiation.k = integer_from_json(inst.at("k"));
          step.instantiation.orientation =
              inst.at("orientation") == "rtl" ? Orientation::RightToLeft : Orientation::LeftToRight;
        }
        d.steps.push_back(std::move(step));
      }
      nf.trace = std::move(d);
    }
    return nf;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed normal form JSON: ") + e.what(), 0);
  }
}

std::optional<std::size_t> replay(const Derivation& d, RuleOptions options) {
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& s = d.steps[i];
    if (i > 0 && !(d.steps[i - 1].after == s.before)) return i;
    try {
      Rewrite r = rewrite(s.before, s.rule, s.position, s.instantiation, options);
      if (!(r.term == s.after) || r.conditions != s.conditions) return i;
    } catch (const Error&) {
      return i;
    }
  }
  return std::nullopt;
}

}  // namespace fracterm
