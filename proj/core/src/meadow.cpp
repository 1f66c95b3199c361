#include "fracterm/meadow.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "fracterm/errors.hpp"
#include "json_detail.hpp"

namespace fracterm {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// x^(p-2); 0^-1 = 0 needs its own case only because 0^0 = 1 when p = 2.
u64 inv_mod(u64 x, u64 p) {
  if (x == 0) return 0;
  return pow_mod(x, p - 2, p);
}

u64 reduce(const Integer& n, u64 p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), Integer(std::to_string(p), 10).get_mpz_t());
  return r.get_ui();
}

Integer to_integer(u64 v) { return Integer(std::to_string(v), 10); }

const MeadowValue& lookup(const Assignment& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw EvalError("unbound variable '" + name + "'");
  return it->second;
}

// Carrier policies: each supplies a value type, leaf conversions, and the
// four operations. `Value` for the common meadow uses nullopt as `a`.
struct Q0Domain {
  using Value = Rational;
  Value numeral(const Integer& n) const { return Rational(n); }
  Value var(const std::string& name, const MeadowValue& v) const {
    if (!v.is_rational()) throw DomainError("variable '" + name + "' is not a rational");
    return v.as_rational();
  }
  Value neg(const Value& a) const { return Rational(-a); }
  Value add(const Value& a, const Value& b) const { return Rational(a + b); }
  Value mul(const Value& a, const Value& b) const { return Rational(a * b); }
  Value div(const Value& a, const Value& b) const {
    if (b == 0) return Rational(0);
    return Rational(a / b);
  }
  MeadowValue wrap(Value v) const { return MeadowValue::rational(std::move(v)); }
};

struct GfDomain {
  using Value = u64;
  u64 p;
  Value numeral(const Integer& n) const { return reduce(n, p); }
  Value var(const std::string& name, const MeadowValue& v) const {
    if (!v.is_residue() || v.as_residue().modulus != p) {
      throw DomainError("variable '" + name + "' is not a residue mod " + std::to_string(p));
    }
    return v.as_residue().value;
  }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
  Value add(Value a, Value b) const { return static_cast<u64>((static_cast<u128>(a) + b) % p); }
  Value mul(Value a, Value b) const { return mul_mod(a, b, p); }
  Value div(Value a, Value b) const { return mul_mod(a, inv_mod(b, p), p); }
  MeadowValue wrap(Value v) const { return MeadowValue::residue(v, p); }
};

struct CommonDomain {
  using Value = std::optional<Rational>;
  Value numeral(const Integer& n) const { return Rational(n); }
  Value var(const std::string& name, const MeadowValue& v) const {
    if (v.is_error()) return std::nullopt;
    if (!v.is_rational()) throw DomainError("variable '" + name + "' is not a rational");
    return v.as_rational();
  }
  Value neg(const Value& a) const {
    if (!a) return std::nullopt;
    return Rational(-*a);
  }
  // The error element absorbs from either argument.
  Value add(const Value& a, const Value& b) const {
    if (!a || !b) return std::nullopt;
    return Rational(*a + *b);
  }
  Value mul(const Value& a, const Value& b) const {
    if (!a || !b) return std::nullopt;
    return Rational(*a * *b);
  }
  Value div(const Value& a, const Value& b) const {
    if (!a || !b || *b == 0) return std::nullopt;
    return Rational(*a / *b);
  }
  MeadowValue wrap(const Value& v) const {
    return v ? MeadowValue::rational(*v) : MeadowValue::error();
  }
};

template <class D>
typename D::Value eval_in(const D& d, const Term& t, const Assignment& env) {
  switch (t.op()) {
    case Op::Numeral: return d.numeral(t.value());
    case Op::Var: return d.var(t.name(), lookup(env, t.name()));
    case Op::Neg: return d.neg(eval_in(d, t.arg(0), env));
    case Op::Add: return d.add(eval_in(d, t.arg(0), env), eval_in(d, t.arg(1), env));
    case Op::Mul: return d.mul(eval_in(d, t.arg(0), env), eval_in(d, t.arg(1), env));
    case Op::Div: return d.div(eval_in(d, t.arg(0), env), eval_in(d, t.arg(1), env));
  }
  return d.numeral(Integer(0));
}

// Writes the value of every subterm into `out` at its preorder index.
template <class D>
typename D::Value eval_all(const D& d, const Term& t, const Assignment& env, std::size_t index,
                           std::vector<MeadowValue>& out) {
  typename D::Value v;
  switch (t.op()) {
    case Op::Numeral: v = d.numeral(t.value()); break;
    case Op::Var: v = d.var(t.name(), lookup(env, t.name())); break;
    case Op::Neg: v = d.neg(eval_all(d, t.arg(0), env, index + 1, out)); break;
    default: {
      auto a = eval_all(d, t.arg(0), env, index + 1, out);
      auto b = eval_all(d, t.arg(1), env, index + 1 + t.arg(0).node_count(), out);
      v = t.is(Op::Add) ? d.add(a, b) : t.is(Op::Mul) ? d.mul(a, b) : d.div(a, b);
    }
  }
  out[index] = d.wrap(v);
  return v;
}

bool guards_hold(std::span<const Term> guards, const Meadow& m, const Assignment& env) {
  return std::all_of(guards.begin(), guards.end(), [&](const Term& g) {
    auto v = eval(g, m, env);
    return !v.is_zero() && !v.is_error();
  });
}

}  // namespace

Meadow Meadow::gfp(std::uint64_t p) {
  if (p < 2 || p > (std::numeric_limits<u64>::max() >> 1)) {
    throw DomainError("modulus must be a prime in [2, 2^63)");
  }
  if (mpz_probab_prime_p(to_integer(p).get_mpz_t(), 40) == 0) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
  return Meadow(Kind::Gfp, p);
}

Meadow Meadow::parse(std::string_view spec) {
  if (spec == "q0") return q0();
  if (spec == "common") return common();
  if (spec.starts_with("gf:")) {
    auto digits = spec.substr(3);
    if (digits.empty() || digits.size() > 19 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw DomainError("bad meadow '" + std::string(spec) + "'");
    }
    return gfp(std::stoull(std::string(digits)));
  }
  throw DomainError("unknown meadow '" + std::string(spec) + "' (expected q0, common, or gf:P)");
}

std::string Meadow::to_string() const {
  switch (kind_) {
    case Kind::Q0: return "q0";
    case Kind::CommonQ: return "common";
    case Kind::Gfp: return "gf:" + std::to_string(prime_);
  }
  return "?";
}

MeadowValue MeadowValue::rational(Rational q) {
  q.canonicalize();
  return MeadowValue(std::move(q));
}

MeadowValue MeadowValue::residue(std::uint64_t v, std::uint64_t p) {
  return MeadowValue(Residue{v % p, p});
}

MeadowValue MeadowValue::from_integer(const Integer& n, const Meadow& m) {
  if (m.kind() == Meadow::Kind::Gfp) return residue(reduce(n, m.prime()), m.prime());
  return rational(Rational(n));
}

bool MeadowValue::is_zero() const {
  if (is_rational()) return as_rational() == 0;
  if (is_residue()) return as_residue().value == 0;
  return false;
}

std::string MeadowValue::to_string() const {
  if (is_rational()) return to_fraction_string(as_rational());
  if (is_residue()) {
    return std::to_string(as_residue().value) + " mod " + std::to_string(as_residue().modulus);
  }
  return "a";
}

bool operator==(const MeadowValue& a, const MeadowValue& b) { return a.v_ == b.v_; }

MeadowValue eval(const Term& t, const Meadow& m, const Assignment& env) {
  switch (m.kind()) {
    case Meadow::Kind::Q0: {
      Q0Domain d;
      return d.wrap(eval_in(d, t, env));
    }
    case Meadow::Kind::Gfp: {
      GfDomain d{m.prime()};
      return d.wrap(eval_in(d, t, env));
    }
    case Meadow::Kind::CommonQ: {
      CommonDomain d;
      return d.wrap(eval_in(d, t, env));
    }
  }
  return MeadowValue::error();
}

std::vector<MeadowValue> eval_subterms(const Term& t, const Meadow& m, const Assignment& env) {
  std::vector<MeadowValue> out(t.node_count(), MeadowValue::error());
  switch (m.kind()) {
    case Meadow::Kind::Q0: eval_all(Q0Domain{}, t, env, 0, out); break;
    case Meadow::Kind::Gfp: eval_all(GfDomain{m.prime()}, t, env, 0, out); break;
    case Meadow::Kind::CommonQ: eval_all(CommonDomain{}, t, env, 0, out); break;
  }
  return out;
}

MeadowValue denote(const Term& t, const Meadow& m) {
  if (!is_closed(t)) throw DomainError("term is not closed");
  return eval(t, m);
}

std::string to_json(const CheckReport& report) {
  detail::Json j;
  j["status"] = report.valid ? "valid" : "counterexample";
  j["assignments_checked"] = report.assignments_checked;
  if (report.counterexample) {
    detail::Json cx = detail::Json::object();
    for (const auto& [name, value] : *report.counterexample) cx[name] = value.to_string();
    j["counterexample"] = std::move(cx);
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump();
}

CheckReport check_identity(const Term& lhs, const Term& rhs, std::span<const Term> guards,
                           const Meadow& m, unsigned threads) {
  if (!m.is_finite()) throw DomainError("exhaustive checking needs a finite meadow; pass samples");
  std::vector<std::string> vars = free_variables(lhs);
  for (const auto& v : free_variables(rhs)) vars.push_back(v);
  for (const auto& g : guards) {
    for (const auto& v : free_variables(g)) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  const u64 p = m.prime();
  u64 total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > (u64{1} << 32) / p) throw DomainError("too many assignments for exhaustive check");
    total *= p;
  }

  // Index i encodes residues in base p, first variable most significant.
  auto assignment_at = [&](u64 index) {
    Assignment env;
    for (std::size_t k = vars.size(); k-- > 0;) {
      env.insert_or_assign(vars[k], MeadowValue::residue(index % p, p));
      index /= p;
    }
    return env;
  };
  auto first_failure = [&](u64 begin, u64 end) -> std::optional<u64> {
    for (u64 i = begin; i < end; ++i) {
      Assignment env = assignment_at(i);
      if (!guards_hold(guards, m, env)) continue;
      if (!(eval(lhs, m, env) == eval(rhs, m, env))) return i;
    }
    return std::nullopt;
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<u64>(total, 64))));
  std::vector<std::optional<u64>> found(threads);
  if (threads == 1) {
    found[0] = first_failure(0, total);
  } else {
    std::vector<std::thread> pool;
    const u64 chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const u64 begin = std::min(total, w * chunk);
      const u64 end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] { found[w] = first_failure(begin, end); });
    }
    for (auto& th : pool) th.join();
  }

  CheckReport report;
  std::optional<u64> first;
  for (const auto& f : found) {
    if (f && (!first || *f < *first)) first = f;
  }
  if (first) {
    report.valid = false;
    report.assignments_checked = *first + 1;
    report.counterexample = assignment_at(*first);
  } else {
    report.assignments_checked = total;
  }
  return report;
}

CheckReport check_identity(const Term& lhs, const Term& rhs, std::span<const Term> guards,
                           const Meadow& m, std::span<const Assignment> samples) {
  CheckReport report;
  for (const auto& env : samples) {
    ++report.assignments_checked;
    if (!guards_hold(guards, m, env)) continue;
    if (!(eval(lhs, m, env) == eval(rhs, m, env))) {
      report.valid = false;
      report.counterexample = env;
      break;
    }
  }
  return report;
}

std::vector<Assignment> sample_assignments(const std::vector<std::string>& vars, const Meadow& m) {
  std::vector<MeadowValue> grid;
  if (m.is_finite()) {
    for (u64 v = 0; v < std::min<u64>(m.prime(), 8); ++v) grid.push_back(MeadowValue::residue(v, m.prime()));
  } else {
    for (const char* q : {"0", "1", "-1", "2", "1/2"}) grid.push_back(MeadowValue::rational(Rational(q, 10)));
    if (m.kind() == Meadow::Kind::CommonQ) grid.push_back(MeadowValue::error());
  }
  std::vector<Assignment> out{Assignment{}};
  for (const auto& name : vars) {
    std::vector<Assignment> next;
    next.reserve(out.size() * grid.size());
    for (const auto& env : out) {
      for (const auto& value : grid) {
        Assignment e = env;
        e.insert_or_assign(name, value);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace fracterm
