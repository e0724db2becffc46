#pragma once

// Tokens and infix polynomial parsing shared by the session language and
// the tests.

#include "gradedkernel/polynomial.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

struct SourceLocation {
  int line = 1;
  int column = 1;
  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct ParseError : std::runtime_error {
  enum class Kind { lexical, syntax, undeclared, arity, limit };
  ParseError(Kind k, SourceLocation l, const std::string& msg)
      : std::runtime_error(l.to_string() + ": " + kind_name(k) + ": " + msg), kind(k), loc(l) {}

  static std::string kind_name(Kind k) {
    switch (k) {
      case Kind::lexical: return "lexical error";
      case Kind::syntax: return "syntax error";
      case Kind::undeclared: return "use before declaration";
      case Kind::arity: return "arity mismatch";
      case Kind::limit: return "limit exceeded";
    }
    return "error";
  }

  Kind kind;
  SourceLocation loc;
};

struct Token {
  enum class Type { name, integer, punct, end };
  Type type = Type::end;
  std::string text;
  SourceLocation loc;
  /// No whitespace between this token and the previous one.
  bool adjacent = false;

  bool is(std::string_view p) const { return type == Type::punct && text == p; }
  bool is_name() const { return type == Type::name; }
  bool is_word(std::string_view w) const { return type == Type::name && text == w; }
};

/// Splits text into names, integers and single-character punctuation.
/// '#' starts a comment running to the end of the line.
inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourceLocation loc;
  std::size_t i = 0;
  bool adjacent = false;
  auto advance = [&](std::size_t k) {
    for (std::size_t s = 0; s < k; ++s, ++i) {
      if (text[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      adjacent = false;
      continue;
    }
    if (std::isspace(c)) {
      advance(1);
      adjacent = false;
      continue;
    }
    Token t;
    t.loc = loc;
    t.adjacent = adjacent && !out.empty();
    std::size_t j = i;
    if (std::isalpha(c) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.type = Token::Type::name;
    } else if (std::isdigit(c)) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.type = Token::Type::integer;
    } else if (std::string_view("=;[](),+-*^/:").find(static_cast<char>(c)) != std::string_view::npos) {
      j = i + 1;
      t.type = Token::Type::punct;
    } else {
      throw ParseError(ParseError::Kind::lexical, loc,
                       "unexpected character " + (std::isprint(c) ? "'" + std::string(1, static_cast<char>(c)) + "'"
                                                                  : "code " + std::to_string(c)));
    }
    t.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
    adjacent = true;
  }
  Token end;
  end.loc = loc;
  out.push_back(end);
  return out;
}

/// Cursor over a token vector.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().type == Token::Type::end; }
  bool accept(std::string_view p) {
    if (!peek().is(p)) return false;
    next();
    return true;
  }
  const Token& expect(std::string_view p) {
    if (!peek().is(p)) error(peek(), "expected '" + std::string(p) + "'");
    return next();
  }
  const Token& expect_name(std::string_view what = "name") {
    if (!peek().is_name()) error(peek(), "expected " + std::string(what));
    return next();
  }
  const Token& expect_integer() {
    if (peek().type != Token::Type::integer) error(peek(), "expected integer");
    return next();
  }

  [[noreturn]] static void error(const Token& t, const std::string& msg) {
    std::string found = t.type == Token::Type::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(ParseError::Kind::syntax, t.loc, msg + ", found " + found);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline constexpr int kMaxNesting = 64;
inline constexpr unsigned kMaxPolynomialPower = 64;

/// expr   := ["-"] term (("+" | "-") term)*
/// term   := factor (["*"] factor | "/" INT)*
/// factor := primary ["^" INT]
/// primary:= INT | NAME | "(" expr ")"
template <Field F>
class PolynomialParser {
 public:
  using Poly = Polynomial<F>;

  PolynomialParser(TokenStream& ts, const RingContext<F>& ctx) : ts_(ts), ctx_(ctx) {}

  Poly parse_expr() {
    Guard g(*this);
    Poly acc;
    bool negate = ts_.accept("-");
    if (!negate) ts_.accept("+");
    acc = parse_term();
    if (negate) acc = ctx_.neg(acc);
    for (;;) {
      if (ts_.accept("+")) acc = ctx_.add(acc, parse_term());
      else if (ts_.accept("-")) acc = ctx_.sub(acc, parse_term());
      else return acc;
    }
  }

 private:
  struct Guard {
    explicit Guard(PolynomialParser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting)
        throw ParseError(ParseError::Kind::limit, p_.ts_.peek().loc, "expression nested too deeply");
    }
    ~Guard() { --p_.depth_; }
    PolynomialParser& p_;
  };

  bool starts_factor() const {
    const auto& t = ts_.peek();
    return t.type == Token::Type::integer || (t.is_name() && is_variable(t.text)) || t.is("(");
  }

  bool is_variable(const std::string& n) const {
    for (const auto& v : ctx_.names())
      if (v == n) return true;
    return false;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    for (;;) {
      if (ts_.accept("*")) {
        acc = ctx_.mul(acc, parse_factor());
      } else if (ts_.peek().is("/")) {
        const Token& slash = ts_.next();
        const Token& d = ts_.expect_integer();
        auto den = ctx_.field().parse(d.text);
        if (ctx_.field().is_zero(den)) throw ParseError(ParseError::Kind::syntax, slash.loc, "division by zero");
        acc = ctx_.scale(acc, ctx_.field().inv(den));
      } else if (starts_factor()) {
        acc = ctx_.mul(acc, parse_factor());
      } else {
        return acc;
      }
    }
  }

  Poly parse_factor() {
    Token at = ts_.peek();
    Poly base = parse_primary();
    if (!ts_.accept("^")) return base;
    const Token& e = ts_.expect_integer();
    if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent)
      throw ParseError(ParseError::Kind::limit, e.loc, "exponent exceeds " + std::to_string(kMaxExponent));
    auto k = static_cast<unsigned>(std::stoul(e.text));
    if (base.size() > 1 && k > kMaxPolynomialPower)
      throw ParseError(ParseError::Kind::limit, e.loc,
                       "power of a non-monomial exceeds " + std::to_string(kMaxPolynomialPower));
    if (base.size() == 1)
      for (std::size_t v = 0; v < ctx_.nvars(); ++v)
        if (static_cast<std::uint64_t>(base.lead().mono[v]) * k > kMaxExponent)
          throw ParseError(ParseError::Kind::limit, e.loc, "exponent exceeds " + std::to_string(kMaxExponent));
    try {
      return ctx_.pow(base, k);
    } catch (const std::overflow_error& ex) {
      throw ParseError(ParseError::Kind::limit, at.loc, ex.what());
    }
  }

  Poly parse_primary() {
    const Token& t = ts_.peek();
    if (t.type == Token::Type::integer) {
      ts_.next();
      return ctx_.constant(ctx_.field().parse(t.text));
    }
    if (t.is_name()) {
      for (std::size_t v = 0; v < ctx_.nvars(); ++v)
        if (ctx_.names()[v] == t.text) {
          ts_.next();
          return ctx_.variable(v);
        }
      throw ParseError(ParseError::Kind::undeclared, t.loc, "unknown variable '" + t.text + "'");
    }
    if (ts_.accept("(")) {
      Poly p = parse_expr();
      ts_.expect(")");
      return p;
    }
    TokenStream::error(t, "expected polynomial");
  }

  TokenStream& ts_;
  const RingContext<F>& ctx_;
  int depth_ = 0;
};

/// Parses a whole string as one polynomial.
template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, const RingContext<F>& ctx) {
  TokenStream ts(lex(text));
  PolynomialParser<F> p(ts, ctx);
  auto f = p.parse_expr();
  if (!ts.at_end()) TokenStream::error(ts.peek(), "unexpected trailing input");
  return f;
}

}  // namespace gk
