#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fracterm/rules.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// One rewrite step. `before` and `after` are whole terms; `after` is
/// `before` with one instance of `rule` applied at `position`.
struct Step {
  Rule rule;
  Position position;
  Instantiation instantiation;
  Term before;
  Term after;
  std::vector<SideCondition> conditions;
};

struct Derivation {
  std::vector<Step> steps;
};

/// A simplified closed flat fraction (+-k)/l with gcd(k, l) = 1 and l >= 1;
/// zero is 0/1. `conditions` collects every k != 0 hypothesis the
/// derivation used plus the result's own denominator.
struct NormalForm {
  Term result;
  std::set<SideCondition> conditions;
  std::optional<Derivation> trace;
};

enum class Mode {
  /// All meadow laws: CFAR merges sums, DBZ discards zero denominators.
  Full,
  /// Division-safe: CR + QCR + DIV1 + DIV2 + FEQ (plus the closure rules
  /// MUL, NEG, SIGN, UNIT). Unsafe inputs are refused with SafetyError.
  Safe,
};

/// Throws DomainError for an open term.
NormalForm normalize_full(const Term& t, bool record_trace = false);

/// Throws DomainError for an open term and SafetyError, naming the
/// outermost uncommon fraction, for an unsafe one. Always records a trace.
NormalForm normalize_safe(const Term& t);

NormalForm normalize(const Term& t, Mode mode, bool record_trace);

/// True if `t` already has the normal-form shape.
bool is_normal_form(const Term& t);

struct Comparison {
  bool equal;
  NormalForm left;
  NormalForm right;
  std::set<SideCondition> conditions;
};

/// Compares normal forms syntactically. In safe mode both sides must be
/// safe (SafetyError otherwise).
Comparison check_equal(const Term& s, const Term& t, Mode mode);

/// "5/7", "-1/2", "0/1"
std::string display(const NormalForm& nf);

/// {"result":<term>,"conditions":[k,...],"steps":[{"rule","position",
/// "before","after","conditions"[,"instantiation"]},...]}; "steps" only
/// when a trace was recorded.
std::string to_json(const NormalForm& nf);
std::string to_json(const Derivation& d);

/// Reads the JSON produced by to_json(const NormalForm&).
NormalForm normal_form_from_json(std::string_view json);

/// Replays every step with rewrite() and checks that it reproduces
/// `after` and the recorded conditions, and that consecutive steps chain.
/// Returns the index of the first bad step, or nullopt.
std::optional<std::size_t> replay(const Derivation& d, RuleOptions options);

}  // namespace fracterm
