#include "fracterm/term.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "fracterm/errors.hpp"

namespace fracterm {

struct Term::Node {
  Op op;
  Integer value;
  std::string name;
  std::vector<Term> children;
  std::size_t node_count = 1;
  std::size_t depth = 1;
};

const char* op_name(Op op) {
  switch (op) {
    case Op::Numeral: return "num";
    case Op::Var: return "var";
    case Op::Add: return "add";
    case Op::Mul: return "mul";
    case Op::Neg: return "neg";
    case Op::Div: return "div";
  }
  return "?";
}

Position Position::child(std::size_t index) const {
  auto path = path_;
  path.push_back(index);
  return Position(std::move(path));
}

bool Position::is_prefix_of(const Position& other) const {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::string Position::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(path_[i]);
  }
  return out + "]";
}

Term Term::numeral(Integer n) {
  assert(n >= 0);
  if (n < 0) throw DomainError("numerals are natural numbers");
  auto node = std::make_shared<Node>();
  node->op = Op::Numeral;
  node->value = std::move(n);
  return Term(std::move(node));
}

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::Var;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::add(Term lhs, Term rhs) { return compound(Op::Add, {std::move(lhs), std::move(rhs)}); }
Term Term::mul(Term lhs, Term rhs) { return compound(Op::Mul, {std::move(lhs), std::move(rhs)}); }
Term Term::neg(Term arg) { return compound(Op::Neg, {std::move(arg)}); }
Term Term::div(Term numerator, Term denominator) {
  return compound(Op::Div, {std::move(numerator), std::move(denominator)});
}

Op Term::op() const { return node_->op; }
const Integer& Term::value() const {
  assert(node_->op == Op::Numeral);
  return node_->value;
}
const std::string& Term::name() const {
  assert(node_->op == Op::Var);
  return node_->name;
}
std::span<const Term> Term::args() const { return node_->children; }
const Term& Term::arg(std::size_t i) const {
  assert(i < node_->children.size());
  return node_->children[i];
}
bool Term::is_numeral(unsigned long n) const {
  return node_->op == Op::Numeral && node_->value == n;
}
std::size_t Term::node_count() const { return node_->node_count; }
std::size_t Term::depth() const { return node_->depth; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->op != b.node_->op) return false;
  if (a.node_->node_count != b.node_->node_count) return false;
  switch (a.node_->op) {
    case Op::Numeral: return a.node_->value == b.node_->value;
    case Op::Var: return a.node_->name == b.node_->name;
    default: break;
  }
  const auto& xs = a.node_->children;
  const auto& ys = b.node_->children;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] == ys[i])) return false;
  }
  return true;
}

Term numeral(const Integer& k) { return Term::numeral(k); }

Term expand_numeral(const Term& t) {
  switch (t.op()) {
    case Op::Numeral: {
      if (t.value() <= 1) return t;
      Term sum = Term::add(Term::numeral(1), Term::numeral(1));
      for (Integer i = 2; i < t.value(); ++i) sum = Term::add(sum, Term::numeral(1));
      return sum;
    }
    case Op::Var: return t;
    case Op::Neg: return Term::neg(expand_numeral(t.arg(0)));
    case Op::Add: return Term::add(expand_numeral(t.arg(0)), expand_numeral(t.arg(1)));
    case Op::Mul: return Term::mul(expand_numeral(t.arg(0)), expand_numeral(t.arg(1)));
    case Op::Div: return Term::div(expand_numeral(t.arg(0)), expand_numeral(t.arg(1)));
  }
  return t;
}

bool is_closed(const Term& t) {
  if (t.is(Op::Var)) return false;
  return std::all_of(t.args().begin(), t.args().end(), [](const Term& a) { return is_closed(a); });
}

bool is_division_free(const Term& t) {
  if (t.is(Op::Div)) return false;
  return std::all_of(t.args().begin(), t.args().end(),
                     [](const Term& a) { return is_division_free(a); });
}

bool eq_syn(const Term& s, const Term& t) { return s == t; }

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p.path()) {
    if (i >= cur->args().size()) {
      throw PositionError("position " + p.to_string() + " does not address a subterm");
    }
    cur = &cur->arg(i);
  }
  return *cur;
}

namespace {

void collect(const Term& t, std::vector<std::size_t>& path,
             std::vector<std::pair<Position, Term>>& out) {
  out.emplace_back(Position(path), t);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    path.push_back(i);
    collect(t.arg(i), path, out);
    path.pop_back();
  }
}

Term rebuild(const Term& t, std::vector<Term> children) {
  switch (t.op()) {
    case Op::Add: return Term::add(std::move(children[0]), std::move(children[1]));
    case Op::Mul: return Term::mul(std::move(children[0]), std::move(children[1]));
    case Op::Div: return Term::div(std::move(children[0]), std::move(children[1]));
    case Op::Neg: return Term::neg(std::move(children[0]));
    default: return t;
  }
}

Term replace_from(const Term& t, const std::vector<std::size_t>& path, std::size_t at,
                  Term replacement) {
  if (at == path.size()) return replacement;
  std::vector<Term> children(t.args().begin(), t.args().end());
  children[path[at]] = replace_from(t.arg(path[at]), path, at + 1, std::move(replacement));
  return rebuild(t, std::move(children));
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is(Op::Var)) out.insert(t.name());
  for (const auto& a : t.args()) collect_vars(a, out);
}

}  // namespace

std::vector<std::pair<Position, Term>> subterms(const Term& t) {
  std::vector<std::pair<Position, Term>> out;
  out.reserve(t.node_count());
  std::vector<std::size_t> path;
  collect(t, path, out);
  return out;
}

Term replace_at(const Term& t, const Position& p, Term replacement) {
  (void)subterm_at(t, p);
  return replace_from(t, p.path(), 0, std::move(replacement));
}

std::vector<std::string> free_variables(const Term& t) {
  std::set<std::string> vars;
  collect_vars(t, vars);
  return {vars.begin(), vars.end()};
}

Term Term::compound(Op op, std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  std::size_t count = 1;
  std::size_t depth = 0;
  for (const auto& c : children) {
    count += c.node_count();
    depth = std::max(depth, c.depth());
  }
  node->node_count = count;
  node->depth = depth + 1;
  node->children = std::move(children);
  return Term(std::move(node));
}

}  // namespace fracterm
