#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "fracterm/axioms.hpp"
#include "fracterm/calculator.hpp"
#include "fracterm/classify.hpp"
#include "fracterm/errors.hpp"
#include "fracterm/fracpair.hpp"
#include "fracterm/meadow.hpp"
#include "fracterm/syntax.hpp"

namespace fracterm::cli {

namespace {

std::string conditions_text(const std::set<SideCondition>& conditions) {
  std::string s = "[";
  bool first = true;
  for (const auto& c : conditions) {
    if (!first) s += ",";
    s += c.k.get_str(10);
    first = false;
  }
  return s + "]";
}

std::string assignment_text(const Assignment& env) {
  std::string s;
  for (const auto& [name, value] : env) {
    if (!s.empty()) s += ", ";
    s += name + "=" + value.to_string();
  }
  return "{" + s + "}";
}

struct Options {
  std::string expr;
  std::string expr2;
  std::string meadow = "q0";
  std::string mode;
  std::string relation;
  bool json = false;
  bool trace = false;
  std::string fp_op;
  std::string fp_a;
  std::string fp_b;
  std::string zero_mode = "collapse";
  std::vector<std::string> axioms;
  unsigned threads = 1;
};

Mode parse_mode(const std::string& s) { return s == "full" ? Mode::Full : Mode::Safe; }

void cmd_parse(const Options& o, std::ostream& out) {
  Term t = parse(o.expr);
  out << (o.json ? to_json(t) : print(t)) << "\n";
}

void cmd_classify(const Options& o, std::ostream& out) {
  out << to_json(classify(parse(o.expr), Meadow::parse(o.meadow))) << "\n";
}

void cmd_eval(const Options& o, std::ostream& out) {
  Term t = parse(o.expr);
  out << eval(t, Meadow::parse(o.meadow)).to_string() << "\n";
}

void cmd_normalize(const Options& o, std::ostream& out) {
  Term t = parse(o.expr);
  NormalForm nf = normalize(t, parse_mode(o.mode.empty() ? "safe" : o.mode), o.trace);
  if (o.json || o.trace) {
    out << to_json(nf) << "\n";
  } else {
    out << display(nf) << "\n" << "conditions: " << conditions_text(nf.conditions) << "\n";
  }
}

void cmd_equal(const Options& o, std::ostream& out) {
  Term s = parse(o.expr);
  Term t = parse(o.expr2);
  if (!o.mode.empty()) {
    Comparison c = check_equal(s, t, parse_mode(o.mode));
    out << (c.equal ? "true" : "false") << "\n"
        << "left: " << display(c.left) << "\n"
        << "right: " << display(c.right) << "\n"
        << "conditions: " << conditions_text(c.conditions) << "\n";
    return;
  }
  const std::string rel = o.relation.empty() ? "val" : o.relation;
  const Meadow m = Meadow::parse(o.meadow);
  bool result = false;
  if (rel == "syn") {
    result = eq_syn(s, t);
  } else if (rel == "pair") {
    result = eq_pair(s, t, m);
  } else {
    result = eq_val(s, t, m);
  }
  out << (result ? "true" : "false") << "\n";
}

void cmd_fracpair(const Options& o, std::ostream& out) {
  const Fracpair a = parse_fracpair(o.fp_a);
  auto second = [&] {
    if (o.fp_b.empty()) throw DomainError("fracpair " + o.fp_op + " needs two operands");
    return parse_fracpair(o.fp_b);
  };
  const ZeroMode zm = o.zero_mode == "sum" ? ZeroMode::SumNumerators : ZeroMode::Collapse;
  auto emit = [&](const Fracpair& r) { out << (o.json ? to_json(r) : to_string(r)) << "\n"; };
  if (o.fp_op == "add") {
    emit(fp_add(a, second(), zm));
  } else if (o.fp_op == "mul") {
    emit(fp_mul(a, second()));
  } else if (o.fp_op == "div") {
    emit(fp_div(a, second()));
  } else if (o.fp_op == "neg") {
    emit(fp_neg(a));
  } else if (o.fp_op == "eq") {
    out << (fp_eq(a, second()) ? "true" : "false") << "\n";
  } else if (o.fp_op == "equiv") {
    out << (fp_equiv(a, second()) ? "true" : "false") << "\n";
  } else {
    out << fp_value(a).to_string() << "\n";
  }
}

void cmd_axioms(const Options& o, std::ostream& out) {
  const Meadow m = Meadow::parse(o.meadow);
  auto results = check_identities(m, o.axioms, o.threads);
  if (o.json) {
    out << "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      out << (i ? "," : "") << "{\"identity\":\"" << r.identity->name << "\",\"expected\":"
          << (r.as_expected ? "true" : "false") << ",\"report\":" << to_json(r.report) << "}";
    }
    out << "]\n";
    return;
  }
  out << "identities in " << m.to_string() << (m.is_finite() ? " (exhaustive)" : " (sampled)") << "\n";
  for (const auto& r : results) {
    out << std::left << std::setw(9) << r.identity->name << std::setw(15)
        << (r.report.valid ? "valid" : "counterexample") << std::setw(12)
        << (r.as_expected ? "expected" : "UNEXPECTED") << std::right << std::setw(8)
        << r.report.assignments_checked << "  " << r.identity->text;
    if (r.report.counterexample) out << "  at " << assignment_text(*r.report.counterexample);
    out << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractions as terms over meadows: parse, classify, evaluate, normalize."};
  app.name("fracterm");
  app.require_subcommand(1, 1);
  Options o;

  const std::vector<std::string> meadow_help{"q0, common, or gf:P"};
  auto* parse_cmd = app.add_subcommand("parse", "Echo the canonical form or JSON tree of EXPR");
  parse_cmd->add_option("expr", o.expr, "expression")->required();
  parse_cmd->add_flag("--json", o.json, "print the JSON tree");

  auto* classify_cmd = app.add_subcommand("classify", "Fraction classes of EXPR as JSON");
  classify_cmd->add_option("expr", o.expr, "expression")->required();
  classify_cmd->add_option("--meadow", o.meadow, meadow_help[0]);

  auto* eval_cmd = app.add_subcommand("eval", "Value of a closed EXPR in a meadow");
  eval_cmd->add_option("expr", o.expr, "expression")->required();
  eval_cmd->add_option("--meadow", o.meadow, meadow_help[0]);

  auto* norm_cmd = app.add_subcommand("normalize", "Simplified flat fraction equal to EXPR");
  norm_cmd->add_option("expr", o.expr, "expression")->required();
  norm_cmd->add_option("--mode", o.mode, "full or safe (default safe)")
      ->check(CLI::IsMember({"full", "safe"}));
  norm_cmd->add_flag("--trace", o.trace, "print the derivation as JSON");
  norm_cmd->add_flag("--json", o.json, "print the normal form as JSON");

  auto* equal_cmd = app.add_subcommand("equal", "Compare two expressions");
  equal_cmd->add_option("lhs", o.expr, "expression")->required();
  equal_cmd->add_option("rhs", o.expr2, "expression")->required();
  auto* rel = equal_cmd->add_option("--relation", o.relation, "syn, pair, or val (default val)")
                  ->check(CLI::IsMember({"syn", "pair", "val"}));
  auto* emode = equal_cmd->add_option("--mode", o.mode, "compare normal forms: full or safe")
                    ->check(CLI::IsMember({"full", "safe"}));
  rel->excludes(emode);
  equal_cmd->add_option("--meadow", o.meadow, meadow_help[0]);

  auto* fp_cmd = app.add_subcommand("fracpair", "Integer fracpair arithmetic");
  fp_cmd->add_option("op", o.fp_op, "add, mul, div, neg, eq, equiv, value")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "div", "neg", "eq", "equiv", "value"}));
  fp_cmd->add_option("a", o.fp_a, "p/q")->required();
  fp_cmd->add_option("b", o.fp_b, "r/s");
  fp_cmd->add_option("--zero-mode", o.zero_mode, "sum or collapse (default collapse)")
      ->check(CLI::IsMember({"sum", "collapse"}));
  fp_cmd->add_flag("--json", o.json, "print {num, den} JSON");

  auto* ax_cmd = app.add_subcommand("axioms", "Check the identity catalog in a meadow");
  ax_cmd->add_option("--meadow", o.meadow, "gf:P for exhaustive checks; q0 or common sample");
  ax_cmd->add_option("--axiom", o.axioms, "identity name (repeatable; default all)");
  ax_cmd->add_option("--threads", o.threads, "worker threads for exhaustive checks");
  ax_cmd->add_flag("--json", o.json, "print reports as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (parse_cmd->parsed()) cmd_parse(o, out);
    if (classify_cmd->parsed()) cmd_classify(o, out);
    if (eval_cmd->parsed()) cmd_eval(o, out);
    if (norm_cmd->parsed()) cmd_normalize(o, out);
    if (equal_cmd->parsed()) cmd_equal(o, out);
    if (fp_cmd->parsed()) cmd_fracpair(o, out);
    if (ax_cmd->parsed()) cmd_axioms(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const SafetyError& e) {
    err << "safety error: " << e.what() << "\n";
    return kSafetyError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace fracterm::cli
