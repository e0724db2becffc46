#pragma once

// Session scripts: declarations of rings, ideals and modules followed by
// commands, evaluated in order.
//
//   session := stmt*
//   stmt    := decl ";" | cmd ";"
//   decl    := "ring" NAME "=" field "[" NAME ("," NAME)* "]"
//            | "ideal" NAME "=" poly ("," poly)*
//            | "module" NAME "=" ("quotient" NAME | "coker" matrix)
//   field   := "QQ" | "ZZ/" INT
//   matrix  := "[" row ("," row)* "]"      rows index generators
//   row     := "[" poly ("," poly)* "]"
//   cmd     := ("betti" | "depth" | "dim" | "hilbert" | "localcoh" | "ass") MODULE
//            | "ext" MODULE MODULE INT | "hom" MODULE MODULE
//            | ("canonical" | "lyubeznik") (RING | IDEAL | MODULE)
//            | "formal" MODULE (IDEAL | RING) INT
//            | "verify" ("all" | CLAIMID)
//
// Ideals and modules live over the most recently declared ring. A ring
// name given where an ideal is expected stands for its maximal ideal;
// canonical and lyubeznik act on S/I for an ideal I or a quotient module.

#include "gradedkernel/report.hpp"

#include <map>
#include <sstream>
#include <variant>

namespace gk {

struct Arg {
  enum class Type { name, integer };
  Type type = Type::name;
  std::string text;
  SourceLocation loc;
};

struct Statement {
  enum class Kind { ring, ideal, module_quotient, module_coker, command };
  Kind kind = Kind::command;
  SourceLocation loc;
  std::string text;  // tokens re-joined with single spaces
  std::string name;  // declared name
  std::string ring;  // ring in scope for ideals and modules
  FieldSpec field;
  std::vector<std::string> vars;
  std::vector<std::vector<Token>> polys;
  std::string ref;  // ideal of a quotient module
  std::vector<std::vector<std::vector<Token>>> matrix;
  std::string command;
  std::vector<Arg> args;
};

struct SessionScript {
  std::vector<Statement> statements;
};

inline constexpr int kMaxExtIndex = 32;
inline constexpr int kMaxTowerLevel = 32;

namespace detail {

enum class SymbolKind { ring, ideal, module };

struct Symbol {
  SymbolKind kind;
  std::string ring;
  bool quotient = false;  // module declared as a quotient
};

enum class ArgKind { module, ideal_or_ring, ring_like, integer };

inline const std::map<std::string, std::vector<ArgKind>>& command_signatures() {
  static const std::map<std::string, std::vector<ArgKind>> sig = {
      {"betti", {ArgKind::module}},
      {"depth", {ArgKind::module}},
      {"dim", {ArgKind::module}},
      {"hilbert", {ArgKind::module}},
      {"localcoh", {ArgKind::module}},
      {"ass", {ArgKind::module}},
      {"ext", {ArgKind::module, ArgKind::module, ArgKind::integer}},
      {"hom", {ArgKind::module, ArgKind::module}},
      {"canonical", {ArgKind::ring_like}},
      {"lyubeznik", {ArgKind::ring_like}},
      {"formal", {ArgKind::module, ArgKind::ideal_or_ring, ArgKind::integer}},
  };
  return sig;
}

inline std::string join_tokens(const std::vector<Token>& toks, std::size_t a, std::size_t b) {
  std::string s;
  for (std::size_t k = a; k < b; ++k) {
    if (k > a && !toks[k].adjacent) s += ' ';
    s += toks[k].text;
  }
  return s;
}

class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : toks_(lex(text)) {}

  SessionScript parse() {
    SessionScript script;
    while (peek().type != Token::Type::end) script.statements.push_back(statement());
    return script;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { TokenStream::error(t, msg); }
  const Token& expect(std::string_view p) {
    if (!peek().is(p)) fail(peek(), "expected '" + std::string(p) + "'");
    return next();
  }
  const Token& expect_name(const std::string& what) {
    if (!peek().is_name()) fail(peek(), "expected " + what);
    return next();
  }

  void declare(const Token& name, Symbol s) {
    if (symbols_.count(name.text))
      throw ParseError(ParseError::Kind::syntax, name.loc, "'" + name.text + "' is already declared");
    symbols_.emplace(name.text, std::move(s));
  }

  const Symbol& lookup(const Token& t) const {
    auto it = symbols_.find(t.text);
    if (it == symbols_.end())
      throw ParseError(ParseError::Kind::undeclared, t.loc, "'" + t.text + "' is not declared");
    return it->second;
  }

  const std::string& current_ring(const Token& at) const {
    if (current_ring_.empty()) throw ParseError(ParseError::Kind::undeclared, at.loc, "no ring declared");
    return current_ring_;
  }

  Statement statement() {
    std::size_t start = pos_;
    const Token& head = peek();
    if (!head.is_name()) fail(head, "expected a declaration or command");
    Statement st;
    st.loc = head.loc;
    if (head.text == "ring") ring_decl(st);
    else if (head.text == "ideal") ideal_decl(st);
    else if (head.text == "module") module_decl(st);
    else command(st);
    st.text = join_tokens(toks_, start, pos_);
    expect(";");
    return st;
  }

  void ring_decl(Statement& st) {
    next();
    st.kind = Statement::Kind::ring;
    const Token& name = expect_name("ring name");
    st.name = name.text;
    expect("=");
    const Token& f = expect_name("field (QQ or ZZ/p)");
    if (f.text == "QQ") {
      st.field = FieldSpec::rationals();
    } else if (f.text == "ZZ") {
      expect("/");
      if (peek().type != Token::Type::integer) fail(peek(), "expected characteristic");
      const Token& p = next();
      std::uint64_t v = p.text.size() > 10 ? 0 : std::stoull(p.text);
      if (v < 2 || v > (1ull << 31) || !is_prime(v))
        throw ParseError(ParseError::Kind::syntax, p.loc, "characteristic must be a prime below 2^31");
      st.field = FieldSpec::prime(static_cast<std::uint32_t>(v));
    } else {
      fail(f, "expected field (QQ or ZZ/p)");
    }
    expect("[");
    for (;;) {
      const Token& v = expect_name("variable name");
      if (std::find(st.vars.begin(), st.vars.end(), v.text) != st.vars.end())
        throw ParseError(ParseError::Kind::syntax, v.loc, "duplicate variable '" + v.text + "'");
      st.vars.push_back(v.text);
      if (st.vars.size() > kMaxVariables)
        throw ParseError(ParseError::Kind::limit, v.loc, "more than " + std::to_string(kMaxVariables) + " variables");
      if (!peek().is(",")) break;
      next();
    }
    expect("]");
    declare(name, {SymbolKind::ring, name.text});
    ring_vars_[name.text] = st.vars;
    current_ring_ = name.text;
  }

  // Tokens of one polynomial, up to a top-level ',', ';' or ']'.
  std::vector<Token> poly_tokens(const std::string& ring) {
    std::vector<Token> out;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.type == Token::Type::end) break;
      if (depth == 0 && (t.is(",") || t.is(";") || t.is("]"))) break;
      if (t.is("(")) ++depth;
      if (t.is(")")) --depth;
      out.push_back(next());
    }
    if (out.empty()) fail(peek(), "expected polynomial");
    Token end;
    end.loc = peek().loc;
    out.push_back(end);
    // validate syntax and variables over QQ
    RingContext<RationalField> ctx(ring_vars_.at(ring), RationalField());
    TokenStream ts(out);
    PolynomialParser<RationalField> pp(ts, ctx);
    pp.parse_expr();
    if (!ts.at_end()) TokenStream::error(ts.peek(), "unexpected token in polynomial");
    out.pop_back();
    return out;
  }

  void ideal_decl(Statement& st) {
    const Token& kw = next();
    st.kind = Statement::Kind::ideal;
    const Token& name = expect_name("ideal name");
    st.name = name.text;
    st.ring = current_ring(kw);
    expect("=");
    for (;;) {
      st.polys.push_back(poly_tokens(st.ring));
      if (!peek().is(",")) break;
      next();
    }
    declare(name, {SymbolKind::ideal, st.ring});
  }

  void module_decl(Statement& st) {
    const Token& kw = next();
    const Token& name = expect_name("module name");
    st.name = name.text;
    st.ring = current_ring(kw);
    expect("=");
    const Token& how = expect_name("'quotient' or 'coker'");
    if (how.text == "quotient") {
      st.kind = Statement::Kind::module_quotient;
      const Token& ref = expect_name("ideal name");
      const Symbol& s = lookup(ref);
      if (s.kind != SymbolKind::ideal) fail(ref, "expected ideal name");
      if (s.ring != st.ring)
        throw ParseError(ParseError::Kind::syntax, ref.loc, "ideal '" + ref.text + "' lives over another ring");
      st.ref = ref.text;
      declare(name, {SymbolKind::module, st.ring, true});
    } else if (how.text == "coker") {
      st.kind = Statement::Kind::module_coker;
      expect("[");
      for (;;) {
        expect("[");
        std::vector<std::vector<Token>> row;
        for (;;) {
          row.push_back(poly_tokens(st.ring));
          if (!peek().is(",")) break;
          next();
        }
        const Token& close = expect("]");
        if (!st.matrix.empty() && row.size() != st.matrix.front().size())
          throw ParseError(ParseError::Kind::arity, close.loc,
                           "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                               std::to_string(st.matrix.front().size()));
        st.matrix.push_back(std::move(row));
        if (!peek().is(",")) break;
        next();
      }
      expect("]");
      declare(name, {SymbolKind::module, st.ring, false});
    } else {
      fail(how, "expected 'quotient' or 'coker'");
    }
  }

  void command(Statement& st) {
    const Token& head = next();
    st.kind = Statement::Kind::command;
    st.command = head.text;
    if (head.text == "verify") {
      const Token& t = peek();
      if (!t.is_name()) fail(t, "expected 'all' or a claim id");
      std::string id = next().text;
      while ((peek().is("-") || peek().is_name() || peek().type == Token::Type::integer) && peek().adjacent)
        id += next().text;
      if (id != "all" && !parse_claim_id(id)) throw ParseError(ParseError::Kind::syntax, t.loc, "unknown claim '" + id + "'");
      st.args.push_back({Arg::Type::name, id, t.loc});
      return;
    }
    auto it = command_signatures().find(head.text);
    if (it == command_signatures().end()) fail(head, "unknown command");
    while (peek().is_name() || peek().type == Token::Type::integer) {
      const Token& a = next();
      st.args.push_back({a.is_name() ? Arg::Type::name : Arg::Type::integer, a.text, a.loc});
    }
    const auto& sig = it->second;
    if (st.args.size() != sig.size()) {
      if (!peek().is(";") && st.args.size() < sig.size()) fail(peek(), "expected argument");
      throw ParseError(ParseError::Kind::arity, head.loc,
                       "'" + head.text + "' takes " + std::to_string(sig.size()) + " argument" +
                           (sig.size() == 1 ? "" : "s") + ", got " + std::to_string(st.args.size()));
    }
    std::string module_ring;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      const Arg& a = st.args[k];
      Token at;
      at.loc = a.loc;
      at.text = a.text;
      at.type = a.type == Arg::Type::name ? Token::Type::name : Token::Type::integer;
      if (sig[k] == ArgKind::integer) {
        if (a.type != Arg::Type::integer) fail(at, "expected integer");
        int limit = head.text == "ext" ? kMaxExtIndex : kMaxTowerLevel;
        if (a.text.size() > 3 || std::stoi(a.text) > limit)
          throw ParseError(ParseError::Kind::limit, a.loc, "integer argument exceeds " + std::to_string(limit));
        if (head.text == "formal" && std::stoi(a.text) < 1)
          throw ParseError(ParseError::Kind::syntax, a.loc, "tower level must be positive");
        continue;
      }
      if (a.type != Arg::Type::name) fail(at, "expected name");
      const Symbol& s = lookup(at);
      switch (sig[k]) {
        case ArgKind::module:
          if (s.kind != SymbolKind::module) fail(at, "expected module name");
          if (!module_ring.empty() && module_ring != s.ring)
            throw ParseError(ParseError::Kind::syntax, a.loc, "modules live over different rings");
          module_ring = s.ring;
          break;
        case ArgKind::ideal_or_ring:
          if (s.kind == SymbolKind::module) fail(at, "expected ideal or ring name");
          if (s.ring != module_ring)
            throw ParseError(ParseError::Kind::syntax, a.loc, "'" + a.text + "' lives over another ring");
          break;
        case ArgKind::ring_like:
          if (s.kind == SymbolKind::module && !s.quotient) fail(at, "expected ring, ideal or quotient module");
          break;
        case ArgKind::integer:
          break;
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Symbol> symbols_;
  std::map<std::string, std::vector<std::string>> ring_vars_;
  std::string current_ring_;
};

}  // namespace detail

/// Throws ParseError with a line:column location on malformed input.
inline SessionScript parse_session(std::string_view text) { return detail::SessionParser(text).parse(); }

struct SessionOptions {
  std::optional<FieldSpec> field;  // overrides the script's ring declarations
  std::uint64_t seed = 0;
  int tmax = 6;
  std::optional<std::pair<int, int>> window;
  std::optional<int> max_steps;
  std::optional<double> timeout;
  CorpusParams corpus;
};

struct SessionOutcome {
  ReportDocument report;
  std::string text;
  int exit_code = 0;  // 0 ok, 1 engine error, 2 parse error, 3 golden failure
};

struct EngineError : std::runtime_error {
  EngineError(SourceLocation l, const std::string& msg) : std::runtime_error(l.to_string() + ": " + msg), loc(l) {}
  SourceLocation loc;
};

namespace detail {

struct Rendered {
  std::string text;
  json data;
  std::optional<VerifyResult> verify;
};

inline std::string render_lyubeznik(const LyubeznikTable& t, int n) {
  std::ostringstream os;
  os << "dim R = " << t.dim << "\n     ";
  for (int j = 0; j <= n; ++j) os << " j=" << j;
  os << '\n';
  for (int i = 0; i <= t.ibound; ++i) {
    os << "i=" << i << ":  ";
    for (int j = 0; j <= n; ++j) {
      auto v = t.at(i, j);
      std::string cell = v ? std::to_string(v) : ".";
      os << std::string(4 - std::min<std::size_t>(cell.size(), 3), ' ') << cell;
    }
    os << '\n';
  }
  if (t.truncated) os << "(resolutions over R truncated)\n";
  return os.str();
}

inline std::string render_series(const HilbertSeries& hs) {
  if (hs.is_zero()) return "0";
  int d = hs.dimension();
  std::string num = hs.reduced_numerator().to_string();
  return d == 0 ? num : "(" + num + ") / (1 - t)^" + std::to_string(d);
}

inline json series_json(const HilbertSeries& hs) {
  json num = json::array();
  auto p = hs.reduced_numerator();
  if (!hs.is_zero())
    for (int e = p.low(); e <= p.high(); ++e)
      if (p.coefficient(e)) num.push_back({{"degree", e}, {"coefficient", p.coefficient(e)}});
  return {{"numerator", num}, {"dimension", hs.dimension()}};
}

template <Field F>
class Executor {
 public:
  Executor(F field, const SessionOptions& opts) : field_(std::move(field)), opts_(opts) {}

  Rendered run(const Statement& st) {
    switch (st.kind) {
      case Statement::Kind::ring: {
        if (!opts_.field && st.field != field_.spec())
          throw EngineError(st.loc, "session already uses " + field_.spec().name() + "; pass --field to override");
        rings_.emplace(st.name, RingContext<F>(st.vars, field_));
        return {"", json::object()};
      }
      case Statement::Kind::ideal: {
        const auto& S = rings_.at(st.ring);
        std::vector<Polynomial<F>> gens;
        for (const auto& toks : st.polys) gens.push_back(poly(toks, S, st.loc));
        for (const auto& g : gens)
          if (!g.is_homogeneous()) throw EngineError(st.loc, "ideal generator " + S.format(g) + " is not homogeneous");
        ideals_.emplace(st.name, IdealEntry{st.ring, gens});
        return {"", json::object()};
      }
      case Statement::Kind::module_quotient: {
        const auto& I = ideals_.at(st.ref);
        modules_.emplace(st.name, ModuleEntry{st.ring, PresentedModule<F>::cyclic(rings_.at(st.ring), I.gens), st.ref});
        return {"", json::object()};
      }
      case Statement::Kind::module_coker:
        modules_.emplace(st.name, ModuleEntry{st.ring, coker(st), ""});
        return {"", json::object()};
      case Statement::Kind::command:
        return command(st);
    }
    return {};
  }

 private:
  struct IdealEntry {
    std::string ring;
    std::vector<Polynomial<F>> gens;
  };
  struct ModuleEntry {
    std::string ring;
    PresentedModule<F> module;
    std::string ideal;  // set for quotient modules
  };

  Polynomial<F> poly(const std::vector<Token>& toks, const RingContext<F>& S, SourceLocation loc) {
    auto all = toks;
    Token end;
    end.loc = loc;
    all.push_back(end);
    TokenStream ts(all);
    PolynomialParser<F> pp(ts, S);
    try {
      return pp.parse_expr();
    } catch (const ParseError& e) {
      throw EngineError(e.loc, std::string(e.what()).substr(e.loc.to_string().size() + 2));
    }
  }

  PresentedModule<F> coker(const Statement& st) {
    const auto& S = rings_.at(st.ring);
    const std::size_t rows = st.matrix.size(), cols = st.matrix.front().size();
    std::vector<std::vector<Polynomial<F>>> c(cols, std::vector<Polynomial<F>>(rows));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < cols; ++k) {
        c[k][r] = poly(st.matrix[r][k], S, st.loc);
        if (!c[k][r].is_homogeneous()) throw EngineError(st.loc, "matrix entry " + S.format(c[k][r]) + " is not homogeneous");
      }
    // generator degrees: propagate deg(e_r) + deg(entry) = column degree
    std::vector<std::optional<int>> deg(rows);
    std::vector<std::optional<int>> coldeg(cols);
    for (std::size_t seed = 0; seed < rows; ++seed) {
      if (deg[seed]) continue;
      deg[seed] = 0;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < cols; ++k)
          for (std::size_t r = 0; r < rows; ++r) {
            if (c[k][r].is_zero()) continue;
            int e = static_cast<int>(c[k][r].lead().mono.degree());
            if (deg[r] && !coldeg[k]) {
              coldeg[k] = *deg[r] + e;
              changed = true;
            } else if (coldeg[k] && !deg[r]) {
              deg[r] = *coldeg[k] - e;
              changed = true;
            } else if (deg[r] && coldeg[k] && *deg[r] + e != *coldeg[k]) {
              throw EngineError(st.loc, "matrix is not homogeneous for any grading of the generators");
            }
          }
      }
    }
    std::vector<int> gens;
    for (auto& d : deg) gens.push_back(*d);
    int low = *std::min_element(gens.begin(), gens.end());
    for (auto& g : gens) g -= low;
    try {
      return PresentedModule<F>(S, gens, matrix_from_columns<F>(gens, c));
    } catch (const std::invalid_argument& e) {
      throw EngineError(st.loc, e.what());
    }
  }

  const ModuleEntry& module(const Arg& a) { return modules_.at(a.text); }

  // ring generators, ideal generators, or the ideal of a quotient module
  std::pair<RingContext<F>, std::vector<Polynomial<F>>> ring_and_ideal(const Arg& a) {
    if (auto it = rings_.find(a.text); it != rings_.end()) return {it->second, {}};
    if (auto it = ideals_.find(a.text); it != ideals_.end()) return {rings_.at(it->second.ring), it->second.gens};
    const auto& m = modules_.at(a.text);
    return {rings_.at(m.ring), ideals_.at(m.ideal).gens};
  }

  Rendered command(const Statement& st) {
    DeadlineGuard guard(opts_.timeout.value_or(0));
    try {
      return dispatch(st);
    } catch (const TimeoutError&) {
      throw EngineError(st.loc, "'" + st.command + "' exceeded the time limit of " + json(*opts_.timeout).dump() + " s");
    } catch (const EngineError&) {
      throw;
    } catch (const std::exception& e) {
      throw EngineError(st.loc, e.what());
    }
  }

  std::pair<int, int> window_or(std::pair<int, int> fallback) const { return opts_.window.value_or(fallback); }

  Rendered dispatch(const Statement& st) {
    const auto& cmd = st.command;
    if (cmd == "betti") {
      const auto& M = module(st.args[0]).module;
      std::size_t len = opts_.max_steps ? static_cast<std::size_t>(std::max(*opts_.max_steps, 0)) : M.ring.nvars() + 1;
      auto t = betti_table(M, len);
      std::string text = render_betti(t);
      if (t.truncated) text += "(truncated at length " + std::to_string(len) + ")\n";
      return {text, betti_json(t)};
    }
    if (cmd == "depth") {
      int d = depth(module(st.args[0]).module);
      return {"depth = " + std::to_string(d) + "\n", json{{"depth", d}}};
    }
    if (cmd == "dim") {
      int d = krull_dim(module(st.args[0]).module);
      return {"dim = " + std::to_string(d) + "\n", json{{"dim", d}}};
    }
    if (cmd == "hilbert") {
      const auto& M = module(st.args[0]).module;
      auto hs = hilbert_series(M);
      int lo = hs.initial_degree().value_or(0);
      auto [a, b] = window_or({lo, lo + 8});
      std::string text = "HS = " + render_series(hs) + "\nHF:";
      json values = json::array();
      for (int j = a; j <= b; ++j) {
        text += " " + std::to_string(j) + ":" + std::to_string(hs.value(j));
        values.push_back({{"degree", j}, {"dim", hs.value(j)}});
      }
      json data = series_json(hs);
      data["values"] = values;
      return {text + "\n", data};
    }
    if (cmd == "localcoh") {
      const auto& M = module(st.args[0]).module;
      auto [lo, hi] = window_or(default_cohomology_window(M));
      auto t = local_cohomology_table(M, lo, hi);
      return {render_cohomology(t), cohomology_json(t)};
    }
    if (cmd == "ext" || cmd == "hom") {
      const auto& M = module(st.args[0]).module;
      const auto& N = module(st.args[1]).module;
      std::size_t i = cmd == "ext" ? static_cast<std::size_t>(std::stoi(st.args[2].text)) : 0;
      auto E = minimal_presentation(ext_presentation(M, N, i));
      auto hs = hilbert_series(E);
      std::string label = cmd == "ext" ? "Ext^" + std::to_string(i) : std::string("Hom");
      std::string text = label + "(" + st.args[0].text + ", " + st.args[1].text + "): " + presentation_text(E) +
                         "HS = " + render_series(hs) + "\n";
      json data = presentation_json(E);
      data["series"] = series_json(hs);
      return {text, data};
    }
    if (cmd == "canonical") {
      auto [S, I] = ring_and_ideal(st.args[0]);
      auto R = make_quotient_ring(S, I);
      auto w = canonical_module(R);
      return {"omega: " + presentation_text(w), presentation_json(w)};
    }
    if (cmd == "lyubeznik") {
      auto [S, I] = ring_and_ideal(st.args[0]);
      auto R = make_quotient_ring(S, I);
      int n = static_cast<int>(S.nvars());
      auto t = lyubeznik_table(R, opts_.max_steps.value_or(n));
      return {render_lyubeznik(t, n), lyubeznik_json(t)};
    }
    if (cmd == "ass") {
      auto primes = associated_primes_monomial(module(st.args[0]).module);
      const auto& S = module(st.args[0]).module.ring;
      std::string text;
      json arr = json::array();
      for (const auto& p : primes.primes) {
        std::string gens = "(";
        for (std::size_t k = 0; k < p.variables.size(); ++k) gens += (k ? ", " : "") + S.names()[p.variables[k]];
        gens += ")";
        text += gens + "  dim " + std::to_string(p.dim) + "  witness " + S.format_monomial(p.witness) + "\n";
        arr.push_back({{"prime", gens}, {"dim", p.dim}, {"witness", S.format_monomial(p.witness)}});
      }
      if (primes.primes.empty()) text = "none\n";
      return {text, json{{"primes", arr}}};
    }
    if (cmd == "formal") {
      const auto& M = module(st.args[0]).module;
      auto [S, a] = ring_and_ideal(st.args[1]);
      if (a.empty()) a = all_variables(S);
      int tmax = std::stoi(st.args[2].text);
      auto [lo, hi] = window_or(default_tower_window(M, a, tmax));
      auto tower = formal_tower(M, a, tmax, lo, hi);
      Reading reading = tower.literal ? Reading::literal : Reading::two_ideal;
      std::string text = "reading: " + reading_name(reading) + ", a = (";
      for (std::size_t k = 0; k < tower.inner_ideal.size(); ++k) text += (k ? ", " : "") + tower.inner_ideal[k];
      text += ")\n";
      for (int t = 1; t <= tower.tmax(); ++t)
        text += "t = " + std::to_string(t) + "\n" + render_cohomology(tower.stages[static_cast<std::size_t>(t - 1)]);
      text += "stabilization:";
      bool any = false;
      for (const auto& [key, v] : tower.stabilization) {
        if (!tower.stages.back().at(key.first, key.second)) continue;
        any = true;
        text += " (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")@" +
                (v ? std::to_string(*v) : std::string("none"));
      }
      if (!any) text += " nothing nonzero";
      return {text + "\n", tower_witness(tower, reading)};
    }
    if (cmd == "verify") {
      auto corpus = corpus_generate(opts_.seed, opts_.corpus, field_);
      Bounds b;
      b.tmax = opts_.tmax;
      b.window = opts_.window;
      b.max_length = opts_.max_steps;
      std::vector<ClaimId> claims(kAllClaims.begin(), kAllClaims.end());
      if (st.args[0].text != "all") claims = {*parse_claim_id(st.args[0].text)};
      auto v = verify_all(corpus, b, claims);
      return {render_verify(v), json{{"cases", corpus.size()}, {"reports", v.reports.size()}}, v};
    }
    throw EngineError(st.loc, "unknown command '" + cmd + "'");
  }

  static std::string presentation_text(const PresentedModule<F>& M) {
    std::string s = std::to_string(M.num_generators()) + " generator" + (M.num_generators() == 1 ? "" : "s");
    if (M.num_generators()) {
      s += " in degrees";
      for (int d : M.generator_degrees) s += " " + std::to_string(d);
    }
    s += ", " + std::to_string(M.relations.cols()) + " relation" + (M.relations.cols() == 1 ? "" : "s") + "\n";
    for (std::size_t c = 0; c < M.relations.cols(); ++c) {
      s += "  (";
      for (std::size_t r = 0; r < M.relations.rows(); ++r)
        s += (r ? ", " : "") + M.ring.format(M.relations.at(r, c));
      s += ")\n";
    }
    return s;
  }

  static json presentation_json(const PresentedModule<F>& M) {
    json rel = json::array();
    for (std::size_t c = 0; c < M.relations.cols(); ++c) {
      json col = json::array();
      for (std::size_t r = 0; r < M.relations.rows(); ++r) col.push_back(M.ring.format(M.relations.at(r, c)));
      rel.push_back(col);
    }
    return {{"generator_degrees", M.generator_degrees}, {"relations", rel}};
  }

  static std::string render_verify(const VerifyResult& v) {
    std::ostringstream os;
    for (const auto& r : v.reports) {
      os << r.claim << "  " << r.example << "  " << r.reading << "  " << verdict_name(r.verdict);
      if (r.verdict != Verdict::pass && r.notes.size() > 1) os << "  -- " << r.notes[r.notes.size() - 2];
      os << '\n';
    }
    os << "summary: PASS " << v.summary.pass << ", FAIL " << v.summary.fail << ", INCONCLUSIVE "
       << v.summary.inconclusive << ", crashes " << v.summary.crashes << '\n';
    if (!v.discrepancies.empty()) {
      os << "discrepancies with printed values:\n";
      for (const auto& d : v.discrepancies)
        os << "  " << d.example << " [" << d.kind << "] printed " << d.printed << "; computed " << d.computed << '\n';
    }
    for (const auto& g : v.golden) os << "golden " << g.name << ": " << (g.passed ? "ok" : "FAILED") << " (" << g.detail << ")\n";
    for (const auto& n : v.notes) os << "note: " << n << '\n';
    return os.str();
  }

  F field_;
  const SessionOptions& opts_;
  std::map<std::string, RingContext<F>> rings_;
  std::map<std::string, IdealEntry> ideals_;
  std::map<std::string, ModuleEntry> modules_;
};

template <Field F>
SessionOutcome execute_with(const SessionScript& script, const SessionOptions& opts, F field,
                            ReportDocument doc) {
  SessionOutcome out;
  Executor<F> ex(field, opts);
  for (const auto& st : script.statements) {
    CommandResult r;
    r.line = st.loc.line;
    r.column = st.loc.column;
    r.statement = st.text;
    r.kind = st.kind == Statement::Kind::command ? st.command
             : st.kind == Statement::Kind::ring  ? "ring"
             : st.kind == Statement::Kind::ideal ? "ideal"
                                                 : "module";
    try {
      auto rendered = ex.run(st);
      r.text = rendered.text;
      r.data = rendered.data;
      r.verify = std::move(rendered.verify);
      if (r.verify && !r.verify->golden_ok() && out.exit_code == 0) out.exit_code = 3;
    } catch (const EngineError& e) {
      r.status = "error";
      r.error = e.what();
      r.data = json::object();
      doc.results.push_back(std::move(r));
      out.text += "error: " + std::string(e.what()) + "\n";
      out.exit_code = 1;
      break;
    }
    if (st.kind == Statement::Kind::command) out.text += "-- " + std::to_string(r.line) + ": " + r.statement + "\n" + r.text;
    doc.results.push_back(std::move(r));
  }
  out.report = std::move(doc);
  return out;
}

}  // namespace detail

/// Field of a session: the override if given, else the first ring's.
inline FieldSpec session_field(const SessionScript& script, const SessionOptions& opts) {
  if (opts.field) return *opts.field;
  for (const auto& st : script.statements)
    if (st.kind == Statement::Kind::ring) return st.field;
  return PrimeField().spec();
}

inline ReportMetadata session_metadata(const SessionOptions& opts, const FieldSpec& field) {
  ReportMetadata m;
#ifdef GRADEDKERNEL_VERSION
  m.version = GRADEDKERNEL_VERSION;
#endif
  m.field = field.name();
  m.seed = opts.seed;
  m.tmax = opts.tmax;
  m.window = opts.window;
  m.max_steps = opts.max_steps;
  m.timeout = opts.timeout;
  return m;
}

inline SessionOutcome execute(const SessionScript& script, const SessionOptions& opts) {
  auto field = session_field(script, opts);
  ReportDocument doc;
  doc.metadata = session_metadata(opts, field);
  if (field.kind == FieldSpec::Kind::rationals) return detail::execute_with(script, opts, RationalField(), doc);
  return detail::execute_with(script, opts, PrimeField(field.characteristic), doc);
}

/// Parses and executes; parse errors give exit code 2 and a one-entry report.
inline SessionOutcome run_session(std::string_view text, const SessionOptions& opts) {
  SessionScript script;
  try {
    script = parse_session(text);
  } catch (const ParseError& e) {
    SessionOutcome out;
    out.report.metadata = session_metadata(opts, opts.field.value_or(PrimeField().spec()));
    CommandResult r;
    r.line = e.loc.line;
    r.column = e.loc.column;
    r.kind = "parse";
    r.status = "error";
    r.error = e.what();
    r.data = json::object();
    out.report.results.push_back(r);
    out.text = "error: " + std::string(e.what()) + "\n";
    out.exit_code = 2;
    return out;
  }
  return execute(script, opts);
}

}  // namespace gk
