#pragma once

#include <string>
#include <string_view>

#include "fracterm/meadow.hpp"
#include "fracterm/numbers.hpp"

namespace fracterm {

/// A pair of integers written num/den. Zero denominators are allowed and
/// nothing is reduced or sign-normalized.
struct Fracpair {
  Integer num;
  Integer den;
};

/// How p/0 + r/0 is completed: (p+r)/0 keeps unconditional QCR for pairs,
/// 0/0 forgets both numerators.
enum class ZeroMode { SumNumerators, Collapse };

/// CFARfp when both denominators are nonzero:
///   ((p*s + q*r) \ gcd(q,s)) / ((q*s) \ gcd(q,s))
/// otherwise the zero-denominator completion axioms under `mode`.
Fracpair fp_add(const Fracpair& a, const Fracpair& b, ZeroMode mode);

Fracpair fp_neg(const Fracpair& a);
Fracpair fp_mul(const Fracpair& a, const Fracpair& b);
/// (p/q) / (r/s) = (p*s)/(q*r)
Fracpair fp_div(const Fracpair& a, const Fracpair& b);

/// Componentwise equality of the integer components.
bool fp_eq(const Fracpair& a, const Fracpair& b);
/// Cross-multiplication: num(a)*den(b) == den(a)*num(b).
bool fp_equiv(const Fracpair& a, const Fracpair& b);
/// Value in Q0; a zero denominator gives 0.
MeadowValue fp_value(const Fracpair& a);

/// "p/q", each component an optionally signed decimal.
/// Throws ParseError when malformed.
Fracpair parse_fracpair(std::string_view text);
std::string to_string(const Fracpair& a);
/// {"num":"<decimal>","den":"<decimal>"}
std::string to_json(const Fracpair& a);

}  // namespace fracterm
