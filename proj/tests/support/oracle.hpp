#pragma once

// Test-only reference semantics, written without the library's evaluator:
// Boost rationals for Q0 and brute-force inverse tables for GF(p).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracterm/term.hpp"

namespace oracle {

using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big(const fracterm::Integer& n) { return BigInt(n.get_str(10)); }

// 0^-1 = 0
inline BigRat q0_eval(const fracterm::Term& t, const std::map<std::string, BigRat>& env = {}) {
  using fracterm::Op;
  switch (t.op()) {
    case Op::Numeral: return BigRat(big(t.value()));
    case Op::Var: return env.at(t.name());
    case Op::Add: return q0_eval(t.arg(0), env) + q0_eval(t.arg(1), env);
    case Op::Mul: return q0_eval(t.arg(0), env) * q0_eval(t.arg(1), env);
    case Op::Neg: return -q0_eval(t.arg(0), env);
    case Op::Div: {
      BigRat d = q0_eval(t.arg(1), env);
      if (d == 0) return BigRat(0);
      return q0_eval(t.arg(0), env) / d;
    }
  }
  return 0;
}

// rationals plus the absorbing error element (nullopt)
inline std::optional<BigRat> common_eval(const fracterm::Term& t) {
  using fracterm::Op;
  if (t.is(Op::Numeral)) return BigRat(big(t.value()));
  std::vector<std::optional<BigRat>> v;
  for (const auto& a : t.args()) {
    v.push_back(common_eval(a));
    if (!v.back()) return std::nullopt;
  }
  switch (t.op()) {
    case Op::Add: return *v[0] + *v[1];
    case Op::Mul: return *v[0] * *v[1];
    case Op::Neg: return -*v[0];
    case Op::Div:
      if (*v[1] == 0) return std::nullopt;
      return *v[0] / *v[1];
    default: return std::nullopt;
  }
}

class Gf {
 public:
  explicit Gf(std::uint64_t p) : p_(p), inv_(p, 0) {
    for (std::uint64_t x = 1; x < p; ++x)
      for (std::uint64_t y = 1; y < p; ++y)
        if (x * y % p == 1) inv_[x] = y;
  }
  std::uint64_t prime() const { return p_; }
  std::uint64_t inv(std::uint64_t x) const { return inv_[x]; }

  std::uint64_t eval(const fracterm::Term& t, const std::map<std::string, std::uint64_t>& env = {}) const {
    using fracterm::Op;
    switch (t.op()) {
      case Op::Numeral: {
        fracterm::Integer r = t.value() % static_cast<unsigned long>(p_);
        return r.get_ui();
      }
      case Op::Var: return env.at(t.name());
      case Op::Add: return (eval(t.arg(0), env) + eval(t.arg(1), env)) % p_;
      case Op::Mul: return eval(t.arg(0), env) * eval(t.arg(1), env) % p_;
      case Op::Neg: return (p_ - eval(t.arg(0), env)) % p_;
      case Op::Div: return eval(t.arg(0), env) * inv_[eval(t.arg(1), env)] % p_;
    }
    return 0;
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> inv_;
};

// Safe: no Div subterm whose denominator is zero in Q0.
inline bool q0_safe(const fracterm::Term& t) {
  if (t.is(fracterm::Op::Div) && q0_eval(t.arg(1)) == 0) return false;
  for (const auto& a : t.args())
    if (!q0_safe(a)) return false;
  return true;
}

}  // namespace oracle
