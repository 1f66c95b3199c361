#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracterm/numbers.hpp"

namespace fracterm {

/// Function symbols of the divisive meadow signature. There is no inverse
/// symbol; 0 and 1 are the numerals 0 and 1.
enum class Op { Numeral, Var, Add, Mul, Neg, Div };

const char* op_name(Op op);

/// Path of 0-based child indices from the root of a term.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<std::size_t> path) : path_(path) {}
  explicit Position(std::vector<std::size_t> path) : path_(std::move(path)) {}

  const std::vector<std::size_t>& path() const { return path_; }
  std::size_t depth() const { return path_.size(); }
  bool is_root() const { return path_.empty(); }

  Position child(std::size_t index) const;
  /// True if this position is a (non-strict) prefix of `other`.
  bool is_prefix_of(const Position& other) const;

  /// "[0,1,1]"
  std::string to_string() const;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<std::size_t> path_;
};

/// Immutable arithmetical term. Copies share structure.
class Term {
 public:
  static Term numeral(Integer n);
  static Term numeral(unsigned long n) { return numeral(Integer(n)); }
  static Term var(std::string name);
  static Term add(Term lhs, Term rhs);
  static Term mul(Term lhs, Term rhs);
  static Term neg(Term arg);
  static Term div(Term numerator, Term denominator);

  Op op() const;
  /// Value of a Numeral; only valid when op() == Op::Numeral.
  const Integer& value() const;
  /// Name of a Var; only valid when op() == Op::Var.
  const std::string& name() const;
  std::span<const Term> args() const;
  const Term& arg(std::size_t i) const;

  bool is(Op op) const { return this->op() == op; }
  bool is_numeral(unsigned long n) const;

  std::size_t node_count() const;
  std::size_t depth() const;

  /// Syntactic equality: same tree, numerals compared by value.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term compound(Op op, std::vector<Term> children);
  std::shared_ptr<const Node> node_;
};

/// Numeral k.
Term numeral(const Integer& k);

/// Replaces each numeral n >= 2 by the left-nested sum of n units.
Term expand_numeral(const Term& t);

bool is_closed(const Term& t);

/// True if no division occurs anywhere in t (a polynomial term).
bool is_division_free(const Term& t);

/// Syntactic equality; the same relation as operator==.
bool eq_syn(const Term& s, const Term& t);

/// Throws PositionError if p does not address a subterm of t.
const Term& subterm_at(const Term& t, const Position& p);

/// All (position, subterm) pairs in preorder.
std::vector<std::pair<Position, Term>> subterms(const Term& t);

/// t with the subterm at p replaced by `replacement`.
Term replace_at(const Term& t, const Position& p, Term replacement);

/// Sorted, deduplicated free variable names.
std::vector<std::string> free_variables(const Term& t);

/// Convenience builders used heavily by tests and rule schemas.
inline Term operator+(Term a, Term b) { return Term::add(std::move(a), std::move(b)); }
inline Term operator*(Term a, Term b) { return Term::mul(std::move(a), std::move(b)); }
inline Term operator/(Term a, Term b) { return Term::div(std::move(a), std::move(b)); }
inline Term operator-(Term a) { return Term::neg(std::move(a)); }

}  // namespace fracterm
