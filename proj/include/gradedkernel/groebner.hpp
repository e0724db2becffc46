#pragma once

// Buchberger's algorithm for homogeneous submodules of graded free modules,
// processed degree by degree. Quotient rings S/I are handled in S by adding
// the products g*e_c (g in the Groebner basis of I) as background generators.

#include "gradedkernel/deadline.hpp"
#include "gradedkernel/hilbert.hpp"
#include "gradedkernel/module.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gk {

/// Term order on a free module with generator degrees `degrees`.
/// Components at or past `elimination_boundary` form a lower block whose
/// terms are smaller than every term of the upper block. Inside a block,
/// terms compare by weighted degree, then degrevlex on the monomial, then
/// by component with the lower index greater.
struct ModuleOrder {
  static constexpr std::size_t kNoBoundary = std::numeric_limits<std::size_t>::max();

  std::vector<int> degrees;
  std::size_t elimination_boundary = kNoBoundary;

  bool lower_block(std::size_t c) const { return c >= elimination_boundary; }

  std::strong_ordering compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
    bool la = lower_block(ca), lb = lower_block(cb);
    if (la != lb) return la ? std::strong_ordering::less : std::strong_ordering::greater;
    long wa = static_cast<long>(a.degree()) + degrees[ca];
    long wb = static_cast<long>(b.degree()) + degrees[cb];
    if (wa != wb) return wa <=> wb;
    for (std::size_t i = a.num_vars(); i-- > 0;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return cb <=> ca;
  }

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;
};

namespace detail {

template <Field F>
struct MTerm {
  typename F::Element coef;
  Monomial mono;
  std::uint32_t comp;
};

template <Field F>
using MVec = std::vector<MTerm<F>>;

template <Field F>
class ModuleArith {
 public:
  using Element = typename F::Element;

  ModuleArith(const F& field, const ModuleOrder& order) : field_(field), order_(&order) {}

  const F& field() const { return field_; }
  const ModuleOrder& order() const { return *order_; }

  std::strong_ordering cmp(const MTerm<F>& a, const MTerm<F>& b) const {
    return order_->compare(a.mono, a.comp, b.mono, b.comp);
  }

  int degree(const MVec<F>& v) const {
    return static_cast<int>(v.front().mono.degree()) + order_->degrees[v.front().comp];
  }

  void canonicalize(MVec<F>& v) const {
    std::sort(v.begin(), v.end(), [&](const MTerm<F>& a, const MTerm<F>& b) { return cmp(a, b) > 0; });
    MVec<F> out;
    out.reserve(v.size());
    for (auto& t : v) {
      if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
        out.back().coef = field_.add(out.back().coef, t.coef);
        if (field_.is_zero(out.back().coef)) out.pop_back();
      } else if (!field_.is_zero(t.coef)) {
        out.push_back(std::move(t));
      }
    }
    v = std::move(out);
  }

  void make_monic(MVec<F>& v) const {
    if (v.empty() || field_.is_one(v.front().coef)) return;
    auto inv = field_.inv(v.front().coef);
    for (auto& t : v) t.coef = field_.mul(t.coef, inv);
  }

  /// f[from..] + c*m*g[gfrom..]
  MVec<F> axpy(const MVec<F>& f, std::size_t from, const Element& c, const Monomial& m, const MVec<F>& g,
               std::size_t gfrom) const {
    MVec<F> out;
    out.reserve(f.size() - from + g.size() - gfrom);
    std::size_t i = from, j = gfrom;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(f[i++]);
        continue;
      }
      MTerm<F> gt{field_.zero(), g[j].mono * m, g[j].comp};
      if (i == f.size()) {
        gt.coef = field_.mul(c, g[j].coef);
        out.push_back(std::move(gt));
        ++j;
        continue;
      }
      auto o = cmp(f[i], gt);
      if (o > 0) {
        out.push_back(f[i++]);
      } else if (o < 0) {
        gt.coef = field_.mul(c, g[j].coef);
        out.push_back(std::move(gt));
        ++j;
      } else {
        auto s = field_.add(f[i].coef, field_.mul(c, g[j].coef));
        if (!field_.is_zero(s)) out.push_back({std::move(s), f[i].mono, f[i].comp});
        ++i;
        ++j;
      }
    }
    return out;
  }

  MVec<F> shifted(const MVec<F>& g, const Monomial& m) const {
    MVec<F> out = g;
    for (auto& t : out) t.mono = t.mono * m;
    return out;
  }

 private:
  F field_;
  const ModuleOrder* order_;
};

/// Monic module vectors indexed by leading component, used as reducers.
template <Field F>
class Reducer {
 public:
  Reducer(const F& field, const ModuleOrder& order) : arith_(field, order), by_comp_(order.degrees.size()) {}

  const ModuleArith<F>& arith() const { return arith_; }
  std::size_t size() const { return elems_.size(); }
  const MVec<F>& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<std::uint32_t>& in_component(std::uint32_t c) const { return by_comp_[c]; }

  std::size_t add(MVec<F> v) {
    arith_.make_monic(v);
    auto idx = elems_.size();
    by_comp_[v.front().comp].push_back(static_cast<std::uint32_t>(idx));
    elems_.push_back(std::move(v));
    return idx;
  }

  std::optional<std::size_t> find_divisor(const Monomial& m, std::uint32_t comp) const {
    for (auto k : by_comp_[comp])
      if (divides(elems_[k].front().mono, m)) return k;
    return std::nullopt;
  }

  /// Full reduction. With upper_only, stops at the first lower-block term
  /// and returns the rest unreduced.
  MVec<F> reduce(MVec<F> f, bool upper_only = false) const {
    MVec<F> rem;
    const auto& field = arith_.field();
    std::size_t pos = 0;
    while (pos < f.size()) {
      const auto& t = f[pos];
      if (upper_only && arith_.order().lower_block(t.comp)) {
        rem.insert(rem.end(), f.begin() + static_cast<std::ptrdiff_t>(pos), f.end());
        break;
      }
      auto k = find_divisor(t.mono, t.comp);
      if (!k) {
        rem.push_back(t);
        ++pos;
        continue;
      }
      deadline_check();
      const auto& g = elems_[*k];
      auto c = field.neg(t.coef);
      Monomial m = t.mono / g.front().mono;
      f = arith_.axpy(f, pos + 1, c, m, g, 1);
      pos = 0;
    }
    return rem;
  }

 private:
  ModuleArith<F> arith_;
  std::vector<MVec<F>> elems_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
};

/// Degree-by-degree Buchberger with the product criterion (rank one only)
/// and Buchberger's chain criterion. Background vectors count toward the
/// submodule; generator vectors are additionally tested for minimality.
template <Field F>
class GroebnerEngine {
 public:
  GroebnerEngine(const F& field, ModuleOrder order) : order_(std::move(order)), basis_(field, order_) {}

  const ModuleOrder& order() const { return order_; }

  void add_background(MVec<F> v) { push_input(std::move(v), true); }
  void add_generator(MVec<F> v) {
    minimal_.push_back(false);
    push_input(std::move(v), false);
  }

  void run() {
    std::stable_sort(inputs_.begin(), inputs_.end(), [](const Input& a, const Input& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.background && !b.background;
    });
    std::size_t next = 0;
    for (;;) {
      std::optional<int> d;
      if (next < inputs_.size()) d = inputs_[next].degree;
      if (!pairs_.empty()) d = d ? std::min(*d, pairs_.begin()->first) : pairs_.begin()->first;
      if (!d) break;
      process_pairs(*d);
      while (next < inputs_.size() && inputs_[next].degree == *d) {
        auto& in = inputs_[next++];
        auto r = basis_.reduce(std::move(in.vec));
        if (r.empty()) continue;
        if (!in.background) minimal_[in.index] = true;
        insert(std::move(r));
        process_pairs(*d);
      }
    }
    inputs_.clear();
  }

  /// Which generators (in insertion order) are needed, given the background.
  const std::vector<bool>& minimal() const { return minimal_; }

  const Reducer<F>& basis() const { return basis_; }

  /// Reduced Groebner basis: minimal leading terms, tails fully reduced,
  /// listed in order of discovery.
  std::vector<MVec<F>> reduced_basis() const {
    const std::size_t n = basis_.size();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& li = basis_[i].front();
      bool drop = false;
      for (auto j : basis_.in_component(li.comp)) {
        if (j == i) continue;
        const auto& lj = basis_[j].front();
        if (divides(lj.mono, li.mono) && (!(lj.mono == li.mono) || j < i)) {
          drop = true;
          break;
        }
      }
      if (!drop) kept.push_back(i);
    }
    Reducer<F> red(basis_.arith().field(), order_);
    for (auto i : kept) red.add(basis_[i]);
    std::vector<MVec<F>> out;
    out.reserve(kept.size());
    for (auto i : kept) {
      const auto& g = basis_[i];
      MVec<F> tail(g.begin() + 1, g.end());
      MVec<F> r{g.front()};
      auto t = red.reduce(std::move(tail));
      r.insert(r.end(), t.begin(), t.end());
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  struct Input {
    MVec<F> vec;
    int degree;
    bool background;
    std::size_t index;
  };

  static std::uint64_t key(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

  void push_input(MVec<F> v, bool background) {
    std::size_t idx = background ? 0 : minimal_.size() - 1;
    if (v.empty()) return;
    int d = basis_.arith().degree(v);
    for (const auto& t : v)
      if (static_cast<int>(t.mono.degree()) + order_.degrees[t.comp] != d)
        throw std::invalid_argument("inhomogeneous input to Groebner basis computation");
    inputs_.push_back({std::move(v), d, background, idx});
  }

  void insert(MVec<F> r) {
    auto idx = basis_.add(std::move(r));
    const auto& lead = basis_[idx].front();
    const bool rank_one = order_.degrees.size() == 1;
    for (auto k : basis_.in_component(lead.comp)) {
      if (k == idx) continue;
      const auto& lk = basis_[k].front().mono;
      if (rank_one && coprime(lk, lead.mono)) continue;
      Monomial l = lcm(lk, lead.mono);
      int d = static_cast<int>(l.degree()) + order_.degrees[lead.comp];
      pairs_[d].push_back({k, idx});
      pending_.insert(key(k, idx));
    }
  }

  void process_pairs(int d) {
    for (;;) {
      auto it = pairs_.find(d);
      if (it == pairs_.end()) return;
      if (it->second.empty()) {
        pairs_.erase(it);
        return;
      }
      auto [i, j] = it->second.front();
      it->second.pop_front();
      pending_.erase(key(i, j));
      const auto& gi = basis_[i];
      const auto& gj = basis_[j];
      const auto comp = gi.front().comp;
      Monomial l = lcm(gi.front().mono, gj.front().mono);
      bool chain = false;
      for (auto k : basis_.in_component(comp)) {
        if (k == i || k == j) continue;
        if (divides(basis_[k].front().mono, l) && !pending_.count(key(i, k)) && !pending_.count(key(j, k))) {
          chain = true;
          break;
        }
      }
      if (chain) continue;
      deadline_check();
      const auto& ar = basis_.arith();
      auto s = ar.axpy(ar.shifted(gi, l / gi.front().mono), 1, ar.field().neg(ar.field().one()),
                       l / gj.front().mono, gj, 1);
      auto r = basis_.reduce(std::move(s));
      if (!r.empty()) insert(std::move(r));
    }
  }

  ModuleOrder order_;
  Reducer<F> basis_;
  std::vector<Input> inputs_;
  std::vector<bool> minimal_;
  std::map<int, std::deque<std::pair<std::size_t, std::size_t>>> pairs_;
  std::unordered_set<std::uint64_t> pending_;
};

template <Field F>
MVec<F> to_mvec(const F& field, const ModuleOrder& order, const std::vector<Polynomial<F>>& comps,
                std::size_t offset = 0) {
  MVec<F> v;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& t : comps[c].terms) v.push_back({t.coef, t.mono, static_cast<std::uint32_t>(c + offset)});
  ModuleArith<F>(field, order).canonicalize(v);
  return v;
}

/// Components [offset, offset + rank) of v, as polynomials.
template <Field F>
std::vector<Polynomial<F>> from_mvec(const MVec<F>& v, std::size_t offset, std::size_t rank) {
  std::vector<Polynomial<F>> comps(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp >= offset + rank) continue;
    comps[t.comp - offset].terms.push_back({t.coef, t.mono});
  }
  return comps;
}

template <Field F>
void add_quotient_background(GroebnerEngine<F>& eng, const RingContext<F>& ctx, std::size_t first,
                             std::size_t last) {
  for (std::size_t c = first; c < last; ++c)
    for (const auto& q : ctx.quotient_gb()) {
      MVec<F> v;
      for (const auto& t : q.terms) v.push_back({t.coef, t.mono, static_cast<std::uint32_t>(c)});
      eng.add_background(std::move(v));
    }
}

template <Field F>
int column_degree_or(const std::vector<Polynomial<F>>& col, const std::vector<int>& degrees, int fallback) {
  FreeModuleElement<F> e(col, degrees);
  if (!e.is_homogeneous()) throw std::invalid_argument("inhomogeneous input to Groebner basis computation");
  return e.degree().value_or(fallback);
}

}  // namespace detail

template <Field F>
struct GroebnerBasis {
  std::vector<FreeModuleElement<F>> elements;
  ModuleOrder order;
  bool reduced = true;
  /// (leading monomial, component) of each element.
  std::vector<std::pair<Monomial, std::size_t>> leads;
};

namespace detail {
template <Field F>
GroebnerBasis<F> package_basis(const std::vector<MVec<F>>& vs, const ModuleOrder& order) {
  GroebnerBasis<F> gb;
  gb.order = order;
  for (const auto& v : vs) {
    gb.elements.push_back({from_mvec(v, 0, order.degrees.size()), order.degrees});
    gb.leads.emplace_back(v.front().mono, v.front().comp);
  }
  return gb;
}
}  // namespace detail

/// Reduced Groebner basis of the submodule of (+) S(-degrees[i]) generated
/// by gens, together with I*F when ctx is a quotient ring S/I.
template <Field F>
GroebnerBasis<F> groebner_basis(const std::vector<int>& degrees, const std::vector<FreeModuleElement<F>>& gens,
                                const RingContext<F>& ctx) {
  ModuleOrder order{degrees};
  detail::GroebnerEngine<F> eng(ctx.field(), order);
  detail::add_quotient_background(eng, ctx, 0, degrees.size());
  for (const auto& g : gens) {
    if (g.rank() != degrees.size() || g.degrees != degrees)
      throw std::invalid_argument("generators must lie in the same free module");
    if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous input to Groebner basis computation");
    eng.add_generator(detail::to_mvec(ctx.field(), order, g.components));
  }
  eng.run();
  return detail::package_basis<F>(eng.reduced_basis(), order);
}

template <Field F>
GroebnerBasis<F> groebner_basis(const std::vector<FreeModuleElement<F>>& gens, const RingContext<F>& ctx) {
  if (gens.empty()) return groebner_basis<F>(std::vector<int>{0}, gens, ctx);
  return groebner_basis(gens.front().degrees, gens, ctx);
}

/// Reduced Groebner basis of an ideal, as polynomials.
template <Field F>
std::vector<Polynomial<F>> ideal_groebner_basis(const std::vector<Polynomial<F>>& gens, const RingContext<F>& ctx) {
  std::vector<FreeModuleElement<F>> els;
  for (const auto& g : gens) els.push_back({{g}, {0}});
  auto gb = groebner_basis<F>(std::vector<int>{0}, els, ctx);
  std::vector<Polynomial<F>> out;
  for (auto& e : gb.elements) out.push_back(std::move(e.components[0]));
  return out;
}

/// S/I for the ideal generated by gens (added to any existing quotient).
template <Field F>
RingContext<F> make_quotient_ring(const RingContext<F>& ctx, const std::vector<Polynomial<F>>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw std::invalid_argument("quotient ideal must be homogeneous");
  RingContext<F> out = ctx.ambient();
  std::vector<Polynomial<F>> all = ctx.quotient_gb();
  all.insert(all.end(), gens.begin(), gens.end());
  out.set_quotient_gb(ideal_groebner_basis(all, out));
  return out;
}

template <Field F>
FreeModuleElement<F> normal_form(const FreeModuleElement<F>& f, const GroebnerBasis<F>& gb,
                                 const RingContext<F>& ctx) {
  if (f.degrees != gb.order.degrees) throw std::invalid_argument("context mismatch: free module differs");
  detail::Reducer<F> red(ctx.field(), gb.order);
  for (const auto& e : gb.elements) red.add(detail::to_mvec(ctx.field(), gb.order, e.components));
  auto r = red.reduce(detail::to_mvec(ctx.field(), gb.order, f.components));
  return {detail::from_mvec(r, 0, f.rank()), f.degrees};
}

/// Checks that every S-pair of the basis reduces to zero.
template <Field F>
bool verify_groebner(const GroebnerBasis<F>& gb, const RingContext<F>& ctx) {
  detail::Reducer<F> red(ctx.field(), gb.order);
  for (const auto& e : gb.elements) {
    if (e.is_zero()) return false;
    red.add(detail::to_mvec(ctx.field(), gb.order, e.components));
  }
  const auto& ar = red.arith();
  for (std::size_t i = 0; i < red.size(); ++i)
    for (std::size_t j = i + 1; j < red.size(); ++j) {
      const auto& a = red[i];
      const auto& b = red[j];
      if (a.front().comp != b.front().comp) continue;
      Monomial l = lcm(a.front().mono, b.front().mono);
      auto s = ar.axpy(ar.shifted(a, l / a.front().mono), 1, ar.field().neg(ar.field().one()),
                       l / b.front().mono, b, 1);
      if (!red.reduce(std::move(s)).empty()) return false;
    }
  return true;
}

/// Hilbert series of F / in(U), F = (+) S(-degrees[c]).
template <Field F>
HilbertSeries hilbert_series_from_initial(const GroebnerBasis<F>& gb, std::size_t nvars) {
  const auto& degs = gb.order.degrees;
  std::vector<std::vector<Monomial>> per(degs.size());
  for (const auto& [m, c] : gb.leads) per[c].push_back(m);
  HilbertSeries hs{{}, static_cast<int>(nvars)};
  for (std::size_t c = 0; c < degs.size(); ++c)
    hs.numerator += monomial_ideal_numerator(per[c], nvars).shifted(degs[c]);
  return hs;
}

/// Indices of a minimal generating subset of the columns of m (over ctx).
template <Field F>
std::vector<std::size_t> minimal_generator_indices(const Matrix<F>& m, const RingContext<F>& ctx) {
  ModuleOrder order{m.row_degrees};
  detail::GroebnerEngine<F> eng(ctx.field(), order);
  detail::add_quotient_background(eng, ctx, 0, m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    detail::column_degree_or(m.columns[c], m.row_degrees, 0);
    eng.add_generator(detail::to_mvec(ctx.field(), order, m.columns[c]));
  }
  eng.run();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (eng.minimal()[c]) out.push_back(c);
  return out;
}

/// Minimal generating subset of the columns, entries reduced modulo ctx.
template <Field F>
Matrix<F> minimal_generators(const Matrix<F>& m, const RingContext<F>& ctx) {
  Matrix<F> out(m.row_degrees, {});
  for (auto c : minimal_generator_indices(m, ctx)) {
    auto col = m.columns[c];
    for (auto& p : col) p = ctx.reduce(std::move(p));
    out.append_column(col, m.col_degrees[c]);
  }
  return out;
}

/// Hilbert series of coker(m) over ctx.
template <Field F>
HilbertSeries cokernel_hilbert_series(const Matrix<F>& m, const RingContext<F>& ctx) {
  std::vector<FreeModuleElement<F>> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) gens.push_back(m.column(c));
  return hilbert_series_from_initial(groebner_basis(m.row_degrees, gens, ctx), ctx.nvars());
}

/// Generators of the kernel of m: F_cols -> F_rows over ctx. With
/// `minimize`, a minimal generating set.
template <Field F>
Matrix<F> syzygy_matrix(const Matrix<F>& m, const RingContext<F>& ctx, bool minimize = true) {
  const std::size_t r0 = m.rows(), r = m.cols();
  ModuleOrder order{m.row_degrees, r0};
  order.degrees.insert(order.degrees.end(), m.col_degrees.begin(), m.col_degrees.end());
  detail::GroebnerEngine<F> eng(ctx.field(), order);
  detail::add_quotient_background(eng, ctx, 0, r0);
  for (std::size_t c = 0; c < r; ++c) {
    FreeModuleElement<F> col(m.columns[c], m.row_degrees);
    auto d = col.degree();
    if (!col.is_homogeneous() || (d && *d != m.col_degrees[c]))
      throw std::invalid_argument("syzygy input column is not homogeneous of its stated degree");
    auto v = detail::to_mvec(ctx.field(), order, m.columns[c]);
    v.push_back({ctx.field().one(), ctx.one_monomial(), static_cast<std::uint32_t>(r0 + c)});
    eng.add_generator(std::move(v));
  }
  eng.run();
  Matrix<F> syz(m.col_degrees, {});
  for (const auto& v : eng.reduced_basis()) {
    if (!order.lower_block(v.front().comp)) continue;
    auto col = detail::from_mvec(v, r0, r);
    bool zero = true;
    for (auto& p : col) {
      p = ctx.reduce(std::move(p));
      zero = zero && p.is_zero();
    }
    if (zero) continue;
    // sign convention: first nonzero entry has leading coefficient 1
    for (const auto& p : col)
      if (!p.is_zero()) {
        auto inv = ctx.field().inv(p.lead().coef);
        for (auto& q : col) q = ctx.scale(q, inv);
        break;
      }
    syz.append_column(col, static_cast<int>(v.front().mono.degree()) + order.degrees[v.front().comp]);
  }
  return minimize ? minimal_generators(syz, ctx) : syz;
}

template <Field F>
struct MembershipResult {
  bool member = false;
  /// f = sum certificate[i] * gens[i] when member.
  std::vector<Polynomial<F>> certificate;
};

template <Field F>
MembershipResult<F> membership(const FreeModuleElement<F>& f, const std::vector<FreeModuleElement<F>>& gens,
                               const RingContext<F>& ctx) {
  if (!f.is_homogeneous()) throw std::invalid_argument("membership requires homogeneous input");
  const std::size_t r0 = f.rank(), r = gens.size();
  ModuleOrder order{f.degrees, r0};
  for (const auto& g : gens) {
    if (g.degrees != f.degrees) throw std::invalid_argument("generators must lie in the same free module");
    if (!g.is_homogeneous()) throw std::invalid_argument("membership requires homogeneous input");
    order.degrees.push_back(g.degree().value_or(0));
  }
  MembershipResult<F> res;
  if (f.is_zero()) {
    res.member = true;
    res.certificate.assign(r, Polynomial<F>{});
    return res;
  }
  detail::GroebnerEngine<F> eng(ctx.field(), order);
  detail::add_quotient_background(eng, ctx, 0, r0);
  for (std::size_t i = 0; i < r; ++i) {
    auto v = detail::to_mvec(ctx.field(), order, gens[i].components);
    v.push_back({ctx.field().one(), ctx.one_monomial(), static_cast<std::uint32_t>(r0 + i)});
    eng.add_generator(std::move(v));
  }
  eng.run();
  detail::Reducer<F> red(ctx.field(), order);
  for (auto& v : eng.reduced_basis()) red.add(std::move(v));
  auto rem = red.reduce(detail::to_mvec(ctx.field(), order, f.components), true);
  if (!rem.empty() && !order.lower_block(rem.front().comp)) return res;
  res.member = true;
  res.certificate = detail::from_mvec(rem, r0, r);
  for (auto& p : res.certificate) p = ctx.reduce(ctx.neg(p));
  return res;
}

}  // namespace gk
