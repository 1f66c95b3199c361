#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracterm/meadow.hpp"
#include "fracterm/term.hpp"

namespace fracterm {

/// A (conditional) identity `guards != 0 -> lhs = rhs` over variables.
struct Identity {
  std::string name;
  std::string text;  // human-readable form
  Term lhs;
  Term rhs;
  std::vector<Term> guards;
  /// Whether the identity holds in every involutive meadow
  /// (Q0 and all GF(p)). FAR is the one that does not.
  bool involutive_valid = true;
  /// Whether it holds in the common meadow, error element included.
  bool common_valid = true;
};

/// QCR, DIV1, DIV2, DBZ, INV, SQUARE, DIVMUL, GIL, CFAR, FAR, FEQ, MULFRAC,
/// RECIP, NEGFRAC, SIGN, UNIT.
const std::vector<Identity>& identity_catalog();

/// Throws DomainError for an unknown name.
const Identity& find_identity(std::string_view name);

struct IdentityResult {
  const Identity* identity;
  CheckReport report;
  /// report.valid agrees with involutive_valid (Q0, GF(p)) or
  /// common_valid (CommonQ).
  bool as_expected;
};

/// Checks each identity in `names` (all when empty): exhaustively for
/// GF(p), on sample_assignments() otherwise.
std::vector<IdentityResult> check_identities(const Meadow& m, const std::vector<std::string>& names = {},
                                             unsigned threads = 1);

}  // namespace fracterm
