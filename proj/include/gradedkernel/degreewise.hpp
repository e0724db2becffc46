#pragma once

// Graded pieces of a presented module M = coker(A) computed by plain linear
// algebra: M_d = (F_0)_d / U_d with U_d spanned by the products m * a_j of
// monomials with relation columns (and with I * F_0 over S/I). No Groebner
// bases are involved, which makes this an independent oracle.

#include "gradedkernel/linalg.hpp"
#include "gradedkernel/module.hpp"

#include <map>
#include <memory>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gk {

template <Field F>
class DegreewiseModel {
 public:
  using Vec = SparseVector<F>;
  using Element = typename F::Element;

  DegreewiseModel(RingContext<F> ctx, std::vector<int> gen_degrees, Matrix<F> relations)
      : ctx_(std::move(ctx)), degs_(std::move(gen_degrees)), rel_(std::move(relations)) {
    if (rel_.rows() != degs_.size()) throw std::invalid_argument("relation rows must match generators");
    for (const auto& q : ctx_.quotient_gb()) ideal_.push_back(q);
  }

  /// Free module with the given generator degrees.
  DegreewiseModel(RingContext<F> ctx, std::vector<int> gen_degrees)
      : DegreewiseModel(std::move(ctx), gen_degrees, Matrix<F>(gen_degrees, {})) {}

  const RingContext<F>& ring() const { return ctx_; }
  const std::vector<int>& generator_degrees() const { return degs_; }

  std::size_t dim(int d) { return piece(d).basis.size(); }

  /// Component and monomial of the k-th basis vector of M_d.
  std::pair<std::uint32_t, Monomial> basis_element(int d, std::size_t k) {
    auto& p = piece(d);
    return p.ambient[p.basis[k]];
  }

  /// Coordinates of a homogeneous element of degree d of F_0 in M_d.
  Vec coords(const std::vector<Polynomial<F>>& elem, int d) {
    std::map<std::uint32_t, Element> acc;
    auto& p = piece(d);
    for (std::size_t c = 0; c < elem.size(); ++c)
      for (const auto& t : elem[c].terms) add_term(p, acc, static_cast<std::uint32_t>(c), t.mono, t.coef);
    return finish(p, acc);
  }

  /// f times the k-th basis vector of M_d, in M_{d + deg f}; f homogeneous.
  Vec multiply(int d, std::size_t k, const Polynomial<F>& f) {
    if (f.is_zero()) return {};
    auto [comp, mono] = basis_element(d, k);
    int e = d + static_cast<int>(f.lead().mono.degree());
    auto& p = piece(e);
    std::map<std::uint32_t, Element> acc;
    for (const auto& t : f.terms) add_term(p, acc, comp, t.mono * mono, t.coef);
    return finish(p, acc);
  }

  Vec multiply_variable(int d, std::size_t k, std::size_t var) {
    auto key = std::make_tuple(d, k, var);
    auto it = var_cache_.find(key);
    if (it != var_cache_.end()) return it->second;
    auto v = multiply(d, k, ctx_.variable(var));
    var_cache_.emplace(key, v);
    return v;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint32_t, Monomial>& k) const {
      return k.second.hash() * 1000003u + k.first;
    }
  };
  struct Piece {
    std::vector<std::pair<std::uint32_t, Monomial>> ambient;
    std::unordered_map<std::pair<std::uint32_t, Monomial>, std::uint32_t, KeyHash> index;
    std::unique_ptr<EchelonBasis<F>> relations;
    std::vector<std::uint32_t> basis;      // ambient indices of non-pivot columns
    std::vector<std::int64_t> to_basis;    // ambient index -> basis index or -1
  };

  void add_term(const Piece& p, std::map<std::uint32_t, Element>& acc, std::uint32_t comp, const Monomial& m,
                const Element& c) const {
    auto it = p.index.find({comp, m});
    if (it == p.index.end()) throw std::logic_error("degreewise model: term outside graded piece");
    auto [pos, inserted] = acc.emplace(it->second, c);
    if (!inserted) pos->second = ctx_.field().add(pos->second, c);
  }

  Vec finish(const Piece& p, const std::map<std::uint32_t, Element>& acc) const {
    Vec v;
    for (const auto& [i, c] : acc)
      if (!ctx_.field().is_zero(c)) v.emplace_back(i, c);
    auto r = p.relations->reduce(v);
    Vec out;
    for (auto& [i, c] : r) out.emplace_back(static_cast<std::uint32_t>(p.to_basis[i]), std::move(c));
    return out;
  }

  Piece& piece(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return *it->second;
    auto p = std::make_unique<Piece>();
    const std::size_t n = ctx_.nvars();
    for (std::size_t c = 0; c < degs_.size(); ++c) {
      if (degs_[c] > d) continue;
      for (auto& m : monomials_of_degree(n, static_cast<std::uint32_t>(d - degs_[c]))) {
        p->index.emplace(std::make_pair(static_cast<std::uint32_t>(c), m), static_cast<std::uint32_t>(p->ambient.size()));
        p->ambient.emplace_back(static_cast<std::uint32_t>(c), m);
      }
    }
    p->relations = std::make_unique<EchelonBasis<F>>(ctx_.field(), static_cast<std::uint32_t>(p->ambient.size()));
    auto insert_product = [&](const Monomial& m, const std::vector<Polynomial<F>>& col) {
      std::map<std::uint32_t, Element> acc;
      for (std::size_t r = 0; r < col.size(); ++r)
        for (const auto& t : col[r].terms) add_term(*p, acc, static_cast<std::uint32_t>(r), t.mono * m, t.coef);
      Vec v;
      for (const auto& [i, c] : acc)
        if (!ctx_.field().is_zero(c)) v.emplace_back(i, c);
      p->relations->insert(v);
    };
    for (std::size_t j = 0; j < rel_.cols(); ++j) {
      int e = rel_.col_degrees[j];
      if (e > d) continue;
      bool zero = true;
      for (const auto& q : rel_.columns[j]) zero = zero && q.is_zero();
      if (zero) continue;
      for (auto& m : monomials_of_degree(n, static_cast<std::uint32_t>(d - e))) insert_product(m, rel_.columns[j]);
    }
    for (std::size_t c = 0; c < degs_.size(); ++c)
      for (const auto& q : ideal_) {
        int e = degs_[c] + static_cast<int>(q.lead().mono.degree());
        if (e > d) continue;
        std::vector<Polynomial<F>> col(degs_.size());
        col[c] = q;
        for (auto& m : monomials_of_degree(n, static_cast<std::uint32_t>(d - e))) insert_product(m, col);
      }
    p->to_basis.assign(p->ambient.size(), -1);
    for (std::uint32_t i = 0; i < p->ambient.size(); ++i)
      if (!p->relations->is_pivot(i)) {
        p->to_basis[i] = static_cast<std::int64_t>(p->basis.size());
        p->basis.push_back(i);
      }
    auto& ref = *p;
    pieces_.emplace(d, std::move(p));
    return ref;
  }

  RingContext<F> ctx_;
  std::vector<int> degs_;
  Matrix<F> rel_;
  std::vector<Polynomial<F>> ideal_;
  std::map<int, std::unique_ptr<Piece>> pieces_;
  std::map<std::tuple<int, std::size_t, std::size_t>, Vec> var_cache_;
};

/// Rank of the degree-d component of the map of free modules given by m
/// (columns = source generators) over m's ring.
template <Field F>
std::size_t degreewise_rank(const RingContext<F>& ctx, const Matrix<F>& m, int d) {
  DegreewiseModel<F> src(ctx, m.col_degrees), dst(ctx, m.row_degrees);
  EchelonBasis<F> eb(ctx.field(), static_cast<std::uint32_t>(dst.dim(d)));
  for (std::size_t k = 0; k < src.dim(d); ++k) {
    auto [c, mono] = src.basis_element(d, k);
    std::vector<Polynomial<F>> img(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) img[r] = ctx.mul_term(m.at(r, c), ctx.field().one(), mono);
    eb.insert(dst.coords(img, d));
  }
  return eb.rank();
}

}  // namespace gk
