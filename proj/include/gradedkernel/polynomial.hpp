#pragma once

#include "gradedkernel/field.hpp"
#include "gradedkernel/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gk {

template <Field F>
struct Term {
  typename F::Element coef;
  Monomial mono;
};

/// Sparse polynomial; terms sorted strictly descending in degrevlex, no zero
/// coefficients. Arithmetic lives on RingContext, which owns the field.
template <Field F>
struct Polynomial {
  std::vector<Term<F>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const Term<F>& lead() const { return terms.front(); }

  /// Total degree when homogeneous; std::nullopt for the zero polynomial.
  std::optional<std::uint32_t> homogeneous_degree() const {
    if (terms.empty()) return std::nullopt;
    return terms.front().mono.degree();
  }

  bool is_homogeneous() const {
    return std::all_of(terms.begin(), terms.end(), [&](const Term<F>& t) {
      return t.mono.degree() == terms.front().mono.degree();
    });
  }

  bool is_monomial() const { return terms.size() == 1; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].mono == b.terms[i].mono) || !(a.terms[i].coef == b.terms[i].coef)) return false;
    return true;
  }
};

/// is_homogeneous operation: (true, degree) for homogeneous nonzero f,
/// (true, nullopt) for zero, (false, nullopt) otherwise.
template <Field F>
std::pair<bool, std::optional<std::uint32_t>> homogeneity(const Polynomial<F>& f) {
  if (f.is_zero()) return {true, std::nullopt};
  if (!f.is_homogeneous()) return {false, std::nullopt};
  return {true, f.lead().mono.degree()};
}

/// Division of f by a list of polynomials whose leading terms are used as
/// reducers (lowest index wins ties). Returns the remainder.
template <Field F>
Polynomial<F> reduce_polynomial(const F& field, Polynomial<F> f, const std::vector<Polynomial<F>>& by);

/// The graded ring S = k[x_1..x_n] or a homogeneous quotient S/I, where
/// quotient_gb holds the reduced Groebner basis of I. All arithmetic
/// returns canonical normal forms.
template <Field F>
class RingContext {
 public:
  using Element = typename F::Element;
  using Poly = Polynomial<F>;

  RingContext(std::vector<std::string> names, F field)
      : names_(std::move(names)), field_(std::move(field)), order_{names_.size()} {
    if (names_.size() > kMaxVariables)
      throw std::invalid_argument("too many variables");
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& quotient_gb() const { return quotient_gb_; }
  bool has_quotient() const { return !quotient_gb_.empty(); }

  /// The polynomial ring this context is a quotient of.
  RingContext ambient() const { return RingContext(names_, field_); }

  /// Installs I's reduced Groebner basis. Callers go through
  /// make_quotient_ring() in groebner.hpp, which computes it.
  void set_quotient_gb(std::vector<Poly> gb) {
    for (const auto& g : gb)
      if (!g.is_homogeneous()) throw std::invalid_argument("quotient ideal must be homogeneous");
    quotient_gb_ = std::move(gb);
  }

  bool same_ring(const RingContext& o) const {
    return names_ == o.names_ && field_ == o.field_ && quotient_gb_ == o.quotient_gb_;
  }

  Monomial one_monomial() const { return Monomial(nvars()); }

  Poly zero() const { return {}; }
  Poly constant(const Element& c) const {
    Poly p;
    if (!field_.is_zero(c)) p.terms.push_back({c, one_monomial()});
    return p;
  }
  Poly one() const { return constant(field_.one()); }
  Poly variable(std::size_t i) const { return monomial(Monomial::variable(nvars(), i)); }
  Poly monomial(const Monomial& m, std::optional<Element> c = std::nullopt) const {
    check(m);
    Poly p;
    p.terms.push_back({c ? *c : field_.one(), m});
    if (field_.is_zero(p.terms[0].coef)) p.terms.clear();
    return reduce(std::move(p));
  }

  /// Sorts, merges and drops zero terms, then reduces modulo the quotient.
  Poly canonicalize(std::vector<Term<F>> terms) const {
    for (auto& t : terms) check(t.mono);
    std::sort(terms.begin(), terms.end(),
              [](const Term<F>& a, const Term<F>& b) { return degrevlex(a.mono, b.mono) > 0; });
    Poly out;
    for (auto& t : terms) {
      if (!out.terms.empty() && out.terms.back().mono == t.mono) {
        out.terms.back().coef = field_.add(out.terms.back().coef, t.coef);
        if (field_.is_zero(out.terms.back().coef)) out.terms.pop_back();
      } else if (!field_.is_zero(t.coef)) {
        out.terms.push_back(std::move(t));
      }
    }
    return reduce(std::move(out));
  }

  Poly add(const Poly& f, const Poly& g) const { return combine(f, field_.one(), g); }
  Poly sub(const Poly& f, const Poly& g) const { return combine(f, field_.neg(field_.one()), g); }
  Poly neg(const Poly& f) const { return scale(f, field_.neg(field_.one())); }

  Poly scale(const Poly& f, const Element& c) const {
    if (field_.is_zero(c)) return {};
    Poly out = f;
    for (auto& t : out.terms) t.coef = field_.mul(t.coef, c);
    return out;
  }

  /// f + c*g, both canonical; the sum of normal forms is a normal form.
  Poly combine(const Poly& f, const Element& c, const Poly& g) const {
    return add_scaled_shifted(f, c, one_monomial(), g);
  }

  /// f + c*m*g without reduction modulo the quotient (m*g may leave the
  /// normal-form set); used internally by the division algorithm.
  Poly add_scaled_shifted(const Poly& f, const Element& c, const Monomial& m, const Poly& g) const {
    Poly out;
    out.terms.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.terms.push_back(f.terms[i++]);
        continue;
      }
      Monomial gm = g.terms[j].mono * m;
      if (i == f.size()) {
        out.terms.push_back({field_.mul(c, g.terms[j].coef), gm});
        ++j;
        continue;
      }
      auto cmp = degrevlex(f.terms[i].mono, gm);
      if (cmp > 0) {
        out.terms.push_back(f.terms[i++]);
      } else if (cmp < 0) {
        out.terms.push_back({field_.mul(c, g.terms[j].coef), gm});
        ++j;
      } else {
        auto s = field_.add(f.terms[i].coef, field_.mul(c, g.terms[j].coef));
        if (!field_.is_zero(s)) out.terms.push_back({s, f.terms[i].mono});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Poly mul(const Poly& f, const Poly& g) const {
    std::vector<Term<F>> terms;
    terms.reserve(f.size() * g.size());
    for (const auto& a : f.terms)
      for (const auto& b : g.terms) terms.push_back({field_.mul(a.coef, b.coef), a.mono * b.mono});
    return canonicalize(std::move(terms));
  }

  Poly mul_term(const Poly& f, const Element& c, const Monomial& m) const {
    if (field_.is_zero(c)) return {};
    Poly out;
    out.terms.reserve(f.size());
    for (const auto& t : f.terms) out.terms.push_back({field_.mul(t.coef, c), t.mono * m});
    return reduce(std::move(out));
  }

  Poly pow(const Poly& f, unsigned e) const {
    Poly acc = one(), base = f;
    for (; e; e >>= 1) {
      if (e & 1) acc = mul(acc, base);
      if (e > 1) base = mul(base, base);
    }
    return acc;
  }

  Poly reduce(Poly f) const {
    if (quotient_gb_.empty() || f.is_zero()) return f;
    return reduce_polynomial(field_, std::move(f), quotient_gb_);
  }

  Poly make_monic(const Poly& f) const {
    if (f.is_zero()) return f;
    return scale(f, field_.inv(f.lead().coef));
  }

  /// True when the terms are sorted, duplicate-free and zero-free.
  bool is_canonical(const Poly& f) const {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (field_.is_zero(f.terms[i].coef) || f.terms[i].mono.num_vars() != nvars()) return false;
      if (i && degrevlex(f.terms[i - 1].mono, f.terms[i].mono) <= 0) return false;
    }
    return true;
  }

  std::string format_monomial(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += '*';
      s += names_[i];
      if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
  }

  std::string format(const Poly& f) const {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const auto& t = f.terms[k];
      bool negative = field_.is_negative(t.coef);
      auto magnitude = negative ? field_.neg(t.coef) : t.coef;
      if (k == 0) s += negative ? "-" : "";
      else s += negative ? " - " : " + ";
      bool unit = field_.is_one(magnitude);
      if (t.mono.is_one()) {
        s += field_.to_string(magnitude);
      } else {
        if (!unit) s += field_.to_string(magnitude) + "*";
        s += format_monomial(t.mono);
      }
    }
    return s;
  }

 private:
  void check(const Monomial& m) const {
    if (m.num_vars() != nvars()) throw std::invalid_argument("context mismatch: wrong number of variables");
  }

  std::vector<std::string> names_;
  F field_;
  MonomialOrder order_;
  std::vector<Poly> quotient_gb_;
};

template <Field F>
Polynomial<F> reduce_polynomial(const F& field, Polynomial<F> f, const std::vector<Polynomial<F>>& by) {
  Polynomial<F> rem;
  while (!f.is_zero()) {
    const auto& lt = f.terms.front();
    const Polynomial<F>* reducer = nullptr;
    for (const auto& g : by) {
      if (divides(g.lead().mono, lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (!reducer) {
      rem.terms.push_back(lt);
      f.terms.erase(f.terms.begin());
      continue;
    }
    auto c = field.neg(field.div(lt.coef, reducer->lead().coef));
    Monomial q = lt.mono / reducer->lead().mono;
    // f <- f + c*q*g; the leading terms cancel
    Polynomial<F> next;
    next.terms.reserve(f.size() + reducer->size());
    std::size_t i = 0, j = 0;
    const auto& g = *reducer;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        next.terms.push_back(std::move(f.terms[i++]));
        continue;
      }
      Monomial gm = g.terms[j].mono * q;
      if (i == f.size()) {
        next.terms.push_back({field.mul(c, g.terms[j].coef), gm});
        ++j;
        continue;
      }
      auto cmp = degrevlex(f.terms[i].mono, gm);
      if (cmp > 0) {
        next.terms.push_back(std::move(f.terms[i++]));
      } else if (cmp < 0) {
        next.terms.push_back({field.mul(c, g.terms[j].coef), gm});
        ++j;
      } else {
        auto s = field.add(f.terms[i].coef, field.mul(c, g.terms[j].coef));
        if (!field.is_zero(s)) next.terms.push_back({s, f.terms[i].mono});
        ++i;
        ++j;
      }
    }
    f = std::move(next);
  }
  return rem;
}

}  // namespace gk
