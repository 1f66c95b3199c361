#include "fracterm/fracpair.hpp"

#include "fracterm/errors.hpp"
#include "json_detail.hpp"

namespace fracterm {

Fracpair fp_add(const Fracpair& a, const Fracpair& b, ZeroMode mode) {
  const bool a_zero = a.den == 0;
  const bool b_zero = b.den == 0;
  if (a_zero && b_zero) {
    if (mode == ZeroMode::SumNumerators) return {a.num + b.num, Integer(0)};
    return {Integer(0), Integer(0)};
  }
  if (b_zero) return a;
  if (a_zero) return b;
  const Integer g = gcd(a.den, b.den);
  return {int_div(a.num * b.den + a.den * b.num, g), int_div(a.den * b.den, g)};
}

Fracpair fp_neg(const Fracpair& a) { return {-a.num, a.den}; }

Fracpair fp_mul(const Fracpair& a, const Fracpair& b) { return {a.num * b.num, a.den * b.den}; }

Fracpair fp_div(const Fracpair& a, const Fracpair& b) { return {a.num * b.den, a.den * b.num}; }

bool fp_eq(const Fracpair& a, const Fracpair& b) { return a.num == b.num && a.den == b.den; }

bool fp_equiv(const Fracpair& a, const Fracpair& b) { return a.num * b.den == a.den * b.num; }

MeadowValue fp_value(const Fracpair& a) {
  if (a.den == 0) return MeadowValue::rational(Rational(0));
  return MeadowValue::rational(Rational(a.num, a.den));
}

namespace {

Integer parse_signed(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits in fracpair", offset + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw ParseError("expected digit in fracpair", offset + j);
  }
  Integer n(std::string(text.substr(i)), 10);
  return negative ? Integer(-n) : n;
}

}  // namespace

Fracpair parse_fracpair(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("fracpair needs '/'", text.size());
  return {parse_signed(text.substr(0, slash), 0), parse_signed(text.substr(slash + 1), slash + 1)};
}

std::string to_string(const Fracpair& a) { return a.num.get_str(10) + "/" + a.den.get_str(10); }

std::string to_json(const Fracpair& a) {
  detail::Json j;
  j["num"] = a.num.get_str(10);
  j["den"] = a.den.get_str(10);
  return j.dump();
}

}  // namespace fracterm
