#include "fracterm/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "fracterm/errors.hpp"
#include "json_detail.hpp"

namespace fracterm {

namespace {

enum class Tok { Number, Mixed, Ident, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < src.size() && is_digit(src[j])) ++j;
    return j;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c)) {
      std::size_t end = digits(i);
      // Mixed literal: digits '_' digits '/' digits, no whitespace inside.
      if (end < src.size() && src[end] == '_') {
        std::size_t p_end = digits(end + 1);
        if (p_end == end + 1 || p_end >= src.size() || src[p_end] != '/') {
          throw ParseError("malformed mixed literal", i);
        }
        std::size_t q_end = digits(p_end + 1);
        if (q_end == p_end + 1) throw ParseError("malformed mixed literal", i);
        out.push_back({Tok::Mixed, i, std::string(src.substr(i, q_end - i))});
        i = q_end;
        continue;
      }
      if (end < src.size() && src[end] == '.') {
        throw ParseError("decimal fractions are not part of the syntax", end);
      }
      out.push_back({Tok::Number, i, std::string(src.substr(i, end - i))});
      i = end;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, i, std::string(src.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, src.size(), ""});
  return out;
}

Integer parse_natural(const std::string& digits) { return Integer(digits, 10); }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term parse_all() {
    if (peek().kind == Tok::End) throw ParseError("empty input", 0);
    Term t = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Term expr() {
    Term lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      Term rhs = term();
      lhs = Term::add(std::move(lhs), minus ? Term::neg(std::move(rhs)) : std::move(rhs));
    }
    return lhs;
  }

  Term term() {
    Term lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool slash = next().kind == Tok::Slash;
      Term rhs = factor();
      lhs = slash ? Term::div(std::move(lhs), std::move(rhs)) : Term::mul(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Term factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return Term::neg(factor());
    }
    return atom();
  }

  Term atom() {
    const Token& tok = next();
    switch (tok.kind) {
      case Tok::Number: return Term::numeral(parse_natural(tok.text));
      case Tok::Mixed: return mixed(tok);
      case Tok::Ident: return Term::var(tok.text);
      case Tok::LParen: {
        Term inner = expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().offset);
        next();
        return inner;
      }
      case Tok::End: throw ParseError("unexpected end of input", tok.offset);
      default: throw ParseError("unexpected '" + tok.text + "'", tok.offset);
    }
  }

  // n_p/q abbreviates n + p/q for n >= 1 and a positive proper p/q.
  static Term mixed(const Token& tok) {
    auto underscore = tok.text.find('_');
    auto slash = tok.text.find('/');
    Integer n = parse_natural(tok.text.substr(0, underscore));
    Integer p = parse_natural(tok.text.substr(underscore + 1, slash - underscore - 1));
    Integer q = parse_natural(tok.text.substr(slash + 1));
    if (n < 1 || p < 1 || p >= q) {
      throw ParseError("mixed literal needs n >= 1 and 0 < p < q", tok.offset);
    }
    return Term::add(Term::numeral(n), Term::div(Term::numeral(p), Term::numeral(q)));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print_to(const Term& t, std::string& out) {
  switch (t.op()) {
    case Op::Numeral: out += t.value().get_str(10); return;
    case Op::Var: out += t.name(); return;
    case Op::Neg:
      out += "(-";
      print_to(t.arg(0), out);
      out += ")";
      return;
    case Op::Add:
    case Op::Mul:
    case Op::Div: {
      const char sym = t.is(Op::Add) ? '+' : t.is(Op::Mul) ? '*' : '/';
      out += "(";
      print_to(t.arg(0), out);
      out += sym;
      print_to(t.arg(1), out);
      out += ")";
      return;
    }
  }
}

}  // namespace

Term parse(std::string_view src) { return Parser(lex(src)).parse_all(); }

std::string print(const Term& t) {
  std::string out;
  print_to(t, out);
  return out;
}

namespace detail {

Json term_json(const Term& t) {
  switch (t.op()) {
    case Op::Numeral: return Json{{"num", t.value().get_str(10)}};
    case Op::Var: return Json{{"var", t.name()}};
    default: break;
  }
  Json args = Json::array();
  for (const auto& a : t.args()) args.push_back(term_json(a));
  return Json{{"op", op_name(t.op())}, {"args", std::move(args)}};
}

Term term_from_json_value(const Json& j) {
  if (!j.is_object()) throw ParseError("term JSON must be an object", 0);
  if (j.contains("num")) {
    const auto& v = j.at("num");
    if (!v.is_string() || v.get<std::string>().empty()) throw ParseError("\"num\" must be a decimal string", 0);
    const auto s = v.get<std::string>();
    for (char c : s) {
      if (!is_digit(c)) throw ParseError("\"num\" must be a decimal string", 0);
    }
    return Term::numeral(Integer(s, 10));
  }
  if (j.contains("var")) {
    const auto& v = j.at("var");
    if (!v.is_string() || v.get<std::string>().empty()) throw ParseError("\"var\" must be a name", 0);
    return Term::var(v.get<std::string>());
  }
  if (!j.contains("op") || !j.contains("args") || !j.at("args").is_array()) {
    throw ParseError("term JSON needs \"num\", \"var\", or \"op\"+\"args\"", 0);
  }
  if (!j.at("op").is_string()) throw ParseError("\"op\" must be a string", 0);
  const auto op = j.at("op").get<std::string>();
  if (op != "neg" && op != "add" && op != "mul" && op != "div") throw ParseError("unknown op \"" + op + "\"", 0);
  const auto& args = j.at("args");
  auto arity = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("wrong arity for \"" + op + "\"", 0);
  };
  if (op == "neg") {
    arity(1);
    return Term::neg(term_from_json_value(args[0]));
  }
  arity(2);
  Term a = term_from_json_value(args[0]);
  Term b = term_from_json_value(args[1]);
  if (op == "add") return Term::add(std::move(a), std::move(b));
  if (op == "mul") return Term::mul(std::move(a), std::move(b));
  return Term::div(std::move(a), std::move(b));
}

}  // namespace detail

std::string to_json(const Term& t) { return detail::term_json(t).dump(); }

Term term_from_json(std::string_view json) {
  detail::Json j;
  try {
    j = detail::Json::parse(json);
  } catch (const detail::Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return detail::term_from_json_value(j);
}

}  // namespace fracterm
