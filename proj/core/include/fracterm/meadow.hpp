#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fracterm/numbers.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// The ambient structure a term is interpreted in.
///
///  - Q0:      rationals with 0^-1 = 0 (involutive meadow).
///  - Gfp(p):  integers mod a prime p with 0^-1 = 0.
///  - CommonQ: rationals plus an absorbing error element `a` with 1/0 = a.
class Meadow {
 public:
  enum class Kind { Q0, Gfp, CommonQ };

  static Meadow q0() { return Meadow(Kind::Q0, 0); }
  static Meadow common() { return Meadow(Kind::CommonQ, 0); }
  /// Throws DomainError unless p is a prime below 2^63.
  static Meadow gfp(std::uint64_t p);
  /// "q0", "common", or "gf:P".
  static Meadow parse(std::string_view spec);

  Kind kind() const { return kind_; }
  std::uint64_t prime() const { return prime_; }
  bool is_finite() const { return kind_ == Kind::Gfp; }
  std::string to_string() const;

  friend bool operator==(const Meadow&, const Meadow&) = default;

 private:
  Meadow(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}
  Kind kind_;
  std::uint64_t prime_;
};

struct Residue {
  std::uint64_t value;
  std::uint64_t modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// The error element of a common meadow.
struct ErrorElement {
  friend bool operator==(ErrorElement, ErrorElement) { return true; }
};

/// An element of one of the supported meadows.
class MeadowValue {
 public:
  static MeadowValue rational(Rational q);
  static MeadowValue residue(std::uint64_t v, std::uint64_t p);
  static MeadowValue error() { return MeadowValue(ErrorElement{}); }
  /// The image of an integer in `m`.
  static MeadowValue from_integer(const Integer& n, const Meadow& m);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_residue() const { return std::holds_alternative<Residue>(v_); }
  bool is_error() const { return std::holds_alternative<ErrorElement>(v_); }
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const Residue& as_residue() const { return std::get<Residue>(v_); }

  /// True for the zero of any carrier; false for the error element.
  bool is_zero() const;

  /// "p/q", "n mod p", or "a".
  std::string to_string() const;

  friend bool operator==(const MeadowValue& a, const MeadowValue& b);

 private:
  explicit MeadowValue(std::variant<Rational, Residue, ErrorElement> v) : v_(std::move(v)) {}
  std::variant<Rational, Residue, ErrorElement> v_;
};

/// Values for the free variables of a term.
using Assignment = std::map<std::string, MeadowValue>;

/// Homomorphic evaluation; x/y is x * y^-1. Throws EvalError on an unbound
/// variable and DomainError on a value from the wrong carrier.
MeadowValue eval(const Term& t, const Meadow& m, const Assignment& env = {});

/// Values of all subterms in one pass, indexed like subterms(t) (preorder).
std::vector<MeadowValue> eval_subterms(const Term& t, const Meadow& m, const Assignment& env = {});

/// Value of a closed term. Throws DomainError on an open term.
MeadowValue denote(const Term& t, const Meadow& m);

struct CheckReport {
  bool valid = true;
  std::uint64_t assignments_checked = 0;
  std::optional<Assignment> counterexample;
};

/// {"status":"valid"|"counterexample","assignments_checked":n,
///  "counterexample":{var:value,...}|null}
std::string to_json(const CheckReport& report);

/// Exhaustive check of `guards != 0 -> lhs = rhs` over every assignment of
/// the free variables in a finite meadow. Assignments are enumerated in
/// lexicographic order of (sorted variable, residue); the reported
/// counterexample is the first failing one, and `assignments_checked`
/// counts up to and including it, so the report does not depend on
/// `threads`.
CheckReport check_identity(const Term& lhs, const Term& rhs, std::span<const Term> guards,
                           const Meadow& m, unsigned threads = 1);

/// Sampled check for any meadow: only the supplied assignments are tried.
CheckReport check_identity(const Term& lhs, const Term& rhs, std::span<const Term> guards,
                           const Meadow& m, std::span<const Assignment> samples);

/// Every assignment of `vars` over a small value grid: {0, 1, -1, 2, 1/2}
/// for Q0 and CommonQ (CommonQ adds `a`).
std::vector<Assignment> sample_assignments(const std::vector<std::string>& vars, const Meadow& m);

}  // namespace fracterm
