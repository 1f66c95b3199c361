#pragma once

#include <optional>
#include <string>

#include "fracterm/meadow.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// Fraction classes of a term relative to a meadow.
///
/// Flags that depend on the meadow (common, uncommon, safe, unit) are
/// `std::nullopt` for open terms whose answer would need quantification
/// over assignments. A fraction is a term whose leading symbol is division;
/// numerator and denominator are present exactly for fractions.
///
/// Simple fractions may carry a sign on the numerator, (-k)/l; the
/// numeric classes (simplified, proper, improper, Scheinbruch) then use k
/// and `negative` records the sign.
struct Classification {
  bool is_fraction = false;
  bool is_closed = false;
  bool is_flat = false;
  bool is_composed = false;
  std::optional<bool> is_common;
  std::optional<bool> is_uncommon;
  std::optional<bool> is_safe_term;
  std::optional<bool> is_safe_fraction;
  bool is_simple = false;
  std::optional<bool> is_unit;
  bool is_simplified = false;
  bool is_proper = false;
  bool is_improper = false;
  bool is_scheinbruch = false;
  bool is_mixed = false;
  bool negative = false;
  std::optional<Term> numerator;
  std::optional<Term> denominator;
};

Classification classify(const Term& t, const Meadow& m);

/// Flat JSON object: one key per flag (null when indeterminate) plus the
/// printed numerator and denominator (null for non-fractions).
std::string to_json(const Classification& c);

/// Safety of a closed term: no subterm is an uncommon fraction.
bool is_safe(const Term& t, const Meadow& m);

/// First uncommon fraction subterm in preorder (hence an outermost one).
std::optional<Position> first_uncommon_fraction(const Term& t, const Meadow& m);

/// Cross-multiplication equivalence of simple fractions p/q, r/s:
/// A |= p*s = q*r. Throws DomainError on a non-simple argument.
bool simple_equivalent(const Term& f, const Term& g, const Meadow& m);

/// Fracpair equality of closed terms: compares (numerator, denominator)
/// values, a non-fraction t contributing (t, 1).
bool eq_pair(const Term& p, const Term& q, const Meadow& m);

/// Value equality of closed terms.
bool eq_val(const Term& p, const Term& q, const Meadow& m);

}  // namespace fracterm
