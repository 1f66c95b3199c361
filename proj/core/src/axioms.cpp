#include "fracterm/axioms.hpp"

#include <algorithm>

#include "fracterm/errors.hpp"
#include "fracterm/syntax.hpp"

namespace fracterm {

namespace {

Identity make(std::string name, std::string_view lhs, std::string_view rhs,
              std::vector<std::string_view> guards = {}, bool valid = true, bool common = true) {
  Identity id{std::move(name), "", parse(lhs), parse(rhs), {}, valid, common};
  for (auto g : guards) {
    id.guards.push_back(parse(g));
    id.text += std::string(g) + " != 0 & ";
  }
  if (!id.guards.empty()) {
    id.text.resize(id.text.size() - 3);
    id.text += " -> ";
  }
  id.text += std::string(lhs) + " = " + std::string(rhs);
  return id;
}

std::vector<Identity> build_catalog() {
  std::vector<Identity> c;
  c.push_back(make("QCR", "x/y + u/y", "(x+u)/y"));
  c.push_back(make("DIV1", "(x/y)/z", "x/(y*z)"));
  c.push_back(make("DIV2", "x/(y/z)", "(x*z*z)/(y*z)"));
  c.push_back(make("DBZ", "x/0", "0/1", {}, true, false));
  c.push_back(make("INV", "1/(1/x)", "x", {}, true, false));
  c.push_back(make("SQUARE", "(x*x)/x", "x", {}, true, false));
  c.push_back(make("DIVMUL", "x/y", "x*(1/y)"));
  c.push_back(make("GIL", "x/x", "1", {"x"}));
  c.push_back(make("CFAR", "x/y + u/v", "(x*v + y*u)/(y*v)", {"y", "v"}));
  c.push_back(make("FAR", "x/y + u/v", "(x*v + y*u)/(y*v)", {}, false, true));
  c.push_back(make("FEQ", "x/y", "(x*z)/(y*z)", {"z"}));
  c.push_back(make("MULFRAC", "(x/y)*(u/v)", "(x*u)/(y*v)"));
  c.push_back(make("RECIP", "1/(x/y)", "y/x", {}, true, false));
  c.push_back(make("NEGFRAC", "-(x/y)", "(-x)/y"));
  c.push_back(make("SIGN", "x/(-y)", "(-x)/y"));
  c.push_back(make("UNIT", "x", "x/1"));
  return c;
}

}  // namespace

const std::vector<Identity>& identity_catalog() {
  static const std::vector<Identity> catalog = build_catalog();
  return catalog;
}

const Identity& find_identity(std::string_view name) {
  const auto& c = identity_catalog();
  auto it = std::find_if(c.begin(), c.end(), [&](const Identity& id) { return id.name == name; });
  if (it == c.end()) throw DomainError("unknown identity '" + std::string(name) + "'");
  return *it;
}

std::vector<IdentityResult> check_identities(const Meadow& m, const std::vector<std::string>& names,
                                             unsigned threads) {
  std::vector<const Identity*> selected;
  if (names.empty()) {
    for (const auto& id : identity_catalog()) selected.push_back(&id);
  } else {
    for (const auto& n : names) selected.push_back(&find_identity(n));
  }
  std::vector<IdentityResult> out;
  for (const Identity* id : selected) {
    CheckReport report;
    if (m.is_finite()) {
      report = check_identity(id->lhs, id->rhs, id->guards, m, threads);
    } else {
      std::vector<std::string> vars = free_variables(id->lhs + id->rhs);
      for (const auto& g : id->guards) {
        for (auto& v : free_variables(g)) vars.push_back(std::move(v));
      }
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      auto samples = sample_assignments(vars, m);
      report = check_identity(id->lhs, id->rhs, id->guards, m, samples);
    }
    const bool expected =
        m.kind() == Meadow::Kind::CommonQ ? id->common_valid : id->involutive_valid;
    const bool as_expected = report.valid == expected;
    out.push_back({id, std::move(report), as_expected});
  }
  return out;
}

}  // namespace fracterm
