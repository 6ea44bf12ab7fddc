#include "dp/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <unordered_set>
#include <utility>

namespace dp {

Formula Formula::make(Kind kind, std::string name, std::uint32_t exponent,
                      std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->exponent = exponent;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name)) throw FormulaError("invalid variable name '" + name + "'");
  return make(Kind::Var, std::move(name), 0, {});
}
Formula Formula::bot() { return make(Kind::Bot, {}, 0, {}); }
Formula Formula::top() { return make(Kind::Top, {}, 0, {}); }
Formula Formula::strong(Formula lhs, Formula rhs) {
  return make(Kind::Strong, {}, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::min(Formula lhs, Formula rhs) {
  return make(Kind::Min, {}, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::imp(Formula lhs, Formula rhs) {
  return make(Kind::Imp, {}, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::neg(Formula arg) { return make(Kind::Neg, {}, 0, {std::move(arg)}); }
Formula Formula::lor(Formula lhs, Formula rhs) {
  return make(Kind::Or, {}, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::iff(Formula lhs, Formula rhs) {
  return make(Kind::Iff, {}, 0, {std::move(lhs), std::move(rhs)});
}
Formula Formula::delta(Formula arg) { return make(Kind::Delta, {}, 0, {std::move(arg)}); }
Formula Formula::power(Formula arg, std::uint32_t exponent) {
  return make(Kind::Power, {}, exponent, {std::move(arg)});
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::Strong:
    case Kind::Min:
    case Kind::Imp:
    case Kind::Or:
    case Kind::Iff:
      return true;
    default:
      return false;
  }
}

bool Formula::is_unary() const {
  return kind() == Kind::Neg || kind() == Kind::Delta || kind() == Kind::Power;
}

bool Formula::contains_delta() const {
  if (kind() == Kind::Delta) return true;
  return std::any_of(node_->children.begin(), node_->children.end(),
                     [](const Formula& c) { return c.contains_delta(); });
}

std::size_t Formula::node_count() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.node_count();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.exponent() != b.exponent()) return false;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  return ca.size() == cb.size() && std::equal(ca.begin(), ca.end(), cb.begin());
}

bool is_identifier(std::string_view s) {
  if (s.empty() || s == "D") return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                         join_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

// {{{ Lexer

namespace {

enum class Tok { Ident, Nat, Iff, Imp, Or, And, Strong, Neg, Delta, Caret, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

struct Alias {
  std::string_view utf8;
  Tok type;
  std::string_view canonical;
};

constexpr std::array<Alias, 8> kUnicodeAliases{{
    {"¬", Tok::Neg, "~"},
    {"∧", Tok::And, "/\\"},
    {"∨", Tok::Or, "\\/"},
    {"→", Tok::Imp, "->"},
    {"↔", Tok::Iff, "<->"},
    {"Δ", Tok::Delta, "D"},
    {"⊥", Tok::Nat, "0"},
    {"⊤", Tok::Nat, "1"},
}};

std::string describe(const Token& t) {
  if (t.type == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string word(text.substr(start, i - start));
      out.push_back({word == "D" ? Tok::Delta : Tok::Ident, std::move(word), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Nat, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (starts("<->")) {
      out.push_back({Tok::Iff, "<->", start});
      i += 3;
      continue;
    }
    if (starts("->")) {
      out.push_back({Tok::Imp, "->", start});
      i += 2;
      continue;
    }
    if (starts("\\/")) {
      out.push_back({Tok::Or, "\\/", start});
      i += 2;
      continue;
    }
    if (starts("/\\")) {
      out.push_back({Tok::And, "/\\", start});
      i += 2;
      continue;
    }
    switch (ch) {
      case '&':
        out.push_back({Tok::Strong, "&", start});
        ++i;
        continue;
      case '~':
        out.push_back({Tok::Neg, "~", start});
        ++i;
        continue;
      case '^':
        out.push_back({Tok::Caret, "^", start});
        ++i;
        continue;
      case '(':
        out.push_back({Tok::LParen, "(", start});
        ++i;
        continue;
      case ')':
        out.push_back({Tok::RParen, ")", start});
        ++i;
        continue;
      default:
        break;
    }
    bool matched = false;
    for (const auto& alias : kUnicodeAliases) {
      if (starts(alias.utf8)) {
        out.push_back({alias.type, std::string(alias.canonical), start});
        i += alias.utf8.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw ParseError(start, {"formula token"}, "'" + std::string(1, ch) + "'");
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

// }}}

// {{{ Recursive-descent parser, one function per grammar level.

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().type != Tok::End) fail({"'<->'", "'->'", "'\\/'", "'/\\'", "'&'", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), describe(peek()));
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::Iff)) f = Formula::iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::Imp)) return Formula::imp(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = Formula::lor(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_strong();
    while (accept(Tok::And)) f = Formula::min(f, parse_strong());
    return f;
  }

  Formula parse_strong() {
    Formula f = parse_unary();
    while (accept(Tok::Strong)) f = Formula::strong(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Tok::Neg)) return Formula::neg(parse_unary());
    if (accept(Tok::Delta)) return Formula::delta(parse_unary());
    return parse_postfix();
  }

  Formula parse_postfix() {
    Formula f = parse_atom();
    if (accept(Tok::Caret)) {
      if (peek().type != Tok::Nat) fail({"natural number"});
      const Token& t = advance();
      std::uint32_t n = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(t.pos, {"exponent below 2^32"}, describe(t));
      return Formula::power(f, n);
    }
    return f;
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Ident:
        advance();
        return Formula::var(t.text);
      case Tok::Nat:
        if (t.text == "0") {
          advance();
          return Formula::bot();
        }
        if (t.text == "1") {
          advance();
          return Formula::top();
        }
        break;
      case Tok::LParen: {
        advance();
        Formula f = parse_iff();
        if (!accept(Tok::RParen)) fail({"')'"});
        return f;
      }
      default:
        break;
    }
    fail({"identifier", "'0'", "'1'", "'('", "'~'", "'D'"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// }}}

// Binding strength, loosest first; atoms bind tightest.
int level(const Formula& f) {
  switch (f.kind()) {
    case Kind::Iff:
      return 1;
    case Kind::Imp:
      return 2;
    case Kind::Or:
      return 3;
    case Kind::Min:
      return 4;
    case Kind::Strong:
      return 5;
    case Kind::Neg:
    case Kind::Delta:
      return 6;
    case Kind::Power:
      return 7;
    default:
      return 8;
  }
}

std::string_view infix(Kind k) {
  switch (k) {
    case Kind::Iff:
      return " <-> ";
    case Kind::Imp:
      return " -> ";
    case Kind::Or:
      return " \\/ ";
    case Kind::Min:
      return " /\\ ";
    case Kind::Strong:
      return " & ";
    default:
      return "";
  }
}

void render_into(const Formula& f, std::string& out);

void render_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Var:
      out += f.name();
      return;
    case Kind::Bot:
      out += '0';
      return;
    case Kind::Top:
      out += '1';
      return;
    case Kind::Neg:
    case Kind::Delta: {
      // Only atoms and other prefix operators go unparenthesised after a prefix.
      const int l = level(f.arg());
      std::string operand;
      render_wrapped(f.arg(), l != 6 && l != 8, operand);
      out += f.kind() == Kind::Neg ? "~" : "D";
      // "D" glued to an identifier or digit would lex as one identifier.
      const auto first = static_cast<unsigned char>(operand.front());
      if (f.kind() == Kind::Delta && (std::isalnum(first) || first == '_')) out += ' ';
      out += operand;
      return;
    }
    case Kind::Power:
      render_wrapped(f.arg(), level(f.arg()) != 8, out);
      out += '^';
      out += std::to_string(f.exponent());
      return;
    default:
      break;
  }
  const int l = level(f);
  const bool right_assoc = f.kind() == Kind::Imp;
  render_wrapped(f.lhs(), right_assoc ? level(f.lhs()) <= l : level(f.lhs()) < l, out);
  out += infix(f.kind());
  render_wrapped(f.rhs(), right_assoc ? level(f.rhs()) < l : level(f.rhs()) <= l, out);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == Kind::Var) {
      if (seen.insert(g.name()).second) out.push_back(g.name());
      return;
    }
    if (g.is_binary()) {
      walk(g.lhs());
      walk(g.rhs());
    } else if (g.is_unary()) {
      walk(g.arg());
    }
  };
  walk(f);
  return out;
}

Formula expand_derived(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
    case Kind::Bot:
      return f;
    case Kind::Top:
      return Formula::imp(Formula::bot(), Formula::bot());
    case Kind::Strong:
      return Formula::strong(expand_derived(f.lhs()), expand_derived(f.rhs()));
    case Kind::Min:
      return Formula::min(expand_derived(f.lhs()), expand_derived(f.rhs()));
    case Kind::Imp:
      return Formula::imp(expand_derived(f.lhs()), expand_derived(f.rhs()));
    case Kind::Neg:
      return Formula::imp(expand_derived(f.arg()), Formula::bot());
    case Kind::Or: {
      Formula a = expand_derived(f.lhs());
      Formula b = expand_derived(f.rhs());
      return Formula::min(Formula::imp(Formula::imp(a, b), b), Formula::imp(Formula::imp(b, a), a));
    }
    case Kind::Iff: {
      Formula a = expand_derived(f.lhs());
      Formula b = expand_derived(f.rhs());
      return Formula::min(Formula::imp(a, b), Formula::imp(b, a));
    }
    case Kind::Power: {
      if (f.exponent() == 0) return Formula::imp(Formula::bot(), Formula::bot());
      Formula a = expand_derived(f.arg());
      Formula acc = a;
      for (std::uint32_t i = 1; i < f.exponent(); ++i) acc = Formula::strong(acc, a);
      return acc;
    }
    case Kind::Delta:
      throw FormulaError("expand_derived: Delta has no abbreviation in the MTL signature");
  }
  throw FormulaError("expand_derived: unknown node kind");
}

}  // namespace dp
