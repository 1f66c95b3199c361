#include "fracterm/classify.hpp"

#include "fracterm/errors.hpp"
#include "fracterm/syntax.hpp"
#include "json_detail.hpp"

namespace fracterm {

namespace {

// Numeral k or Neg(Numeral k): sets k and the sign.
bool signed_numeral(const Term& t, Integer& k, bool& negative) {
  if (t.is(Op::Numeral)) {
    k = t.value();
    negative = false;
    return true;
  }
  if (t.is(Op::Neg) && t.arg(0).is(Op::Numeral)) {
    k = t.arg(0).value();
    negative = true;
    return true;
  }
  return false;
}

std::optional<bool> common_denominator(const Term& denominator, const Meadow& m) {
  if (!is_closed(denominator)) return std::nullopt;
  auto v = eval(denominator, m);
  return !v.is_zero() && !v.is_error();
}

bool positive_proper_mixed(const Term& t) {
  if (!t.is(Op::Add) || !t.arg(0).is(Op::Numeral) || !t.arg(1).is(Op::Div)) return false;
  const Term& f = t.arg(1);
  if (!f.arg(0).is(Op::Numeral) || !f.arg(1).is(Op::Numeral)) return false;
  return t.arg(0).value() >= 1 && f.arg(0).value() >= 1 && f.arg(0).value() < f.arg(1).value();
}

// Tri-state: true = some subterm (strict below the root when `proper`) is an
// uncommon fraction; false = none; nullopt = undecidable without values.
std::optional<bool> has_uncommon(const Term& t, const Meadow& m, bool proper) {
  bool unknown = false;
  const auto all = subterms(t);
  const bool closed = is_closed(t);
  std::vector<MeadowValue> values;
  if (closed) values = eval_subterms(t, m);
  for (std::size_t i = proper ? 1 : 0; i < all.size(); ++i) {
    const Term& s = all[i].second;
    if (!s.is(Op::Div)) continue;
    std::optional<bool> common;
    if (closed) {
      const auto& v = values[i + 1 + s.arg(0).node_count()];
      common = !v.is_zero() && !v.is_error();
    } else {
      common = common_denominator(s.arg(1), m);
    }
    if (!common) {
      unknown = true;
    } else if (!*common) {
      return true;
    }
  }
  if (unknown) return std::nullopt;
  return false;
}

std::optional<bool> tri_and(std::optional<bool> a, std::optional<bool> b) {
  if ((a && !*a) || (b && !*b)) return false;
  if (!a || !b) return std::nullopt;
  return true;
}

std::optional<bool> tri_not(std::optional<bool> a) {
  if (!a) return std::nullopt;
  return !*a;
}

}  // namespace

Classification classify(const Term& t, const Meadow& m) {
  Classification c;
  c.is_closed = is_closed(t);
  c.is_fraction = t.is(Op::Div);

  const Term& core = t.is(Op::Neg) ? t.arg(0) : t;
  c.is_mixed = positive_proper_mixed(core);

  if (!c.is_fraction) {
    c.is_common = false;
    c.is_uncommon = false;
    c.is_safe_fraction = false;
    c.is_unit = false;
    c.is_safe_term = tri_not(has_uncommon(t, m, false));
    if (c.is_mixed) c.negative = t.is(Op::Neg);
    return c;
  }

  const Term& num = t.arg(0);
  const Term& den = t.arg(1);
  c.numerator = num;
  c.denominator = den;
  c.is_flat = is_division_free(num) && is_division_free(den);
  c.is_composed = !c.is_flat;
  c.is_common = common_denominator(den, m);
  c.is_uncommon = tri_not(c.is_common);
  c.is_safe_term = tri_not(has_uncommon(t, m, false));
  c.is_safe_fraction = tri_and(c.is_common, tri_not(has_uncommon(t, m, true)));
  c.is_unit = num.is_numeral(1) ? c.is_common : std::optional<bool>(false);

  Integer k;
  bool negative = false;
  if (signed_numeral(num, k, negative) && den.is(Op::Numeral) && c.is_common.value_or(false)) {
    const Integer& l = den.value();
    c.is_simple = true;
    c.negative = negative;
    c.is_simplified = gcd(k, l) == 1;
    c.is_proper = k < l;
    c.is_improper = !c.is_proper;
    c.is_scheinbruch = l != 0 && k % l == 0;
  }
  return c;
}

std::string to_json(const Classification& c) {
  detail::Json j;
  auto tri = [](std::optional<bool> b) { return b ? detail::Json(*b) : detail::Json(nullptr); };
  j["is_fraction"] = c.is_fraction;
  j["is_closed"] = c.is_closed;
  j["is_flat"] = c.is_flat;
  j["is_composed"] = c.is_composed;
  j["is_common"] = tri(c.is_common);
  j["is_uncommon"] = tri(c.is_uncommon);
  j["is_safe_term"] = tri(c.is_safe_term);
  j["is_safe_fraction"] = tri(c.is_safe_fraction);
  j["is_simple"] = c.is_simple;
  j["is_unit"] = tri(c.is_unit);
  j["is_simplified"] = c.is_simplified;
  j["is_proper"] = c.is_proper;
  j["is_improper"] = c.is_improper;
  j["is_scheinbruch"] = c.is_scheinbruch;
  j["is_mixed"] = c.is_mixed;
  j["negative"] = c.negative;
  j["numerator"] = c.numerator ? detail::Json(print(*c.numerator)) : detail::Json(nullptr);
  j["denominator"] = c.denominator ? detail::Json(print(*c.denominator)) : detail::Json(nullptr);
  return j.dump();
}

bool is_safe(const Term& t, const Meadow& m) { return !first_uncommon_fraction(t, m).has_value(); }

std::optional<Position> first_uncommon_fraction(const Term& t, const Meadow& m) {
  if (!is_closed(t)) throw DomainError("safety is decided for closed terms only");
  const auto all = subterms(t);
  const auto values = eval_subterms(t, m);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Term& s = all[i].second;
    if (!s.is(Op::Div)) continue;
    const auto& v = values[i + 1 + s.arg(0).node_count()];
    if (v.is_zero() || v.is_error()) return all[i].first;
  }
  return std::nullopt;
}

bool simple_equivalent(const Term& f, const Term& g, const Meadow& m) {
  if (!classify(f, m).is_simple || !classify(g, m).is_simple) {
    throw DomainError("simple_equivalent needs two simple fractions");
  }
  Term lhs = f.arg(0) * g.arg(1);
  Term rhs = f.arg(1) * g.arg(0);
  return denote(lhs, m) == denote(rhs, m);
}

namespace {

std::pair<MeadowValue, MeadowValue> pair_view(const Term& t, const Meadow& m) {
  if (t.is(Op::Div)) return {denote(t.arg(0), m), denote(t.arg(1), m)};
  return {denote(t, m), MeadowValue::from_integer(Integer(1), m)};
}

}  // namespace

bool eq_pair(const Term& p, const Term& q, const Meadow& m) {
  if (!is_closed(p) || !is_closed(q)) throw DomainError("eq_pair needs closed terms");
  return pair_view(p, m) == pair_view(q, m);
}

bool eq_val(const Term& p, const Term& q, const Meadow& m) {
  if (!is_closed(p) || !is_closed(q)) throw DomainError("eq_val needs closed terms");
  return denote(p, m) == denote(q, m);
}

}  // namespace fracterm
