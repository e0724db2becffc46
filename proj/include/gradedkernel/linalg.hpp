#pragma once

// Exact sparse linear algebra over a coefficient field: an incrementally
// built echelon basis supporting rank, span membership, reduction to a
// canonical remainder, and kernels via augmented rows.

#include "gradedkernel/deadline.hpp"
#include "gradedkernel/field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gk {

template <Field F>
using SparseVector = std::vector<std::pair<std::uint32_t, typename F::Element>>;

/// Echelon basis of a subspace of F^ncols. Each stored row has leading
/// entry 1 at its pivot column, and no two rows share a pivot.
template <Field F>
class EchelonBasis {
 public:
  using Element = typename F::Element;
  using Row = SparseVector<F>;

  EchelonBasis(const F& field, std::uint32_t ncols)
      : field_(field), ncols_(ncols), pivot_row_(ncols, -1), scratch_(ncols, field.zero()) {}

  std::uint32_t num_cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }

  /// Reduces v against the basis: the result has zero entries in every
  /// pivot column, and v - result lies in the span.
  Row reduce(const Row& v) const { return reduce_impl(v, ncols_); }

  /// Reduces only pivots below `limit`, leaving later columns untouched
  /// by the pivot test (used for augmented kernel computations).
  Row reduce_below(const Row& v, std::uint32_t limit) const { return reduce_impl(v, limit); }

  /// Adds v to the spanning set; returns true when the rank grew.
  bool insert(const Row& v) { return insert_reduced(reduce(v)); }

  /// Inserts a vector already reduced against this basis.
  bool insert_reduced(Row r) {
    if (r.empty()) return false;
    auto inv = field_.inv(r.front().second);
    for (auto& [c, x] : r) x = field_.mul(x, inv);
    pivot_row_[r.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const Row& v) const { return reduce(v).empty(); }

 private:
  Row reduce_impl(const Row& v, std::uint32_t limit) const {
    if (v.empty()) return {};
    deadline_check();
    auto& s = scratch_;
    std::uint32_t lo = ncols_, hi = 0;
    for (const auto& [c, x] : v) {
      s[c] = x;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    for (std::uint32_t c = lo; c <= hi && c < limit; ++c) {
      if (field_.is_zero(s[c]) || pivot_row_[c] < 0) continue;
      auto factor = s[c];
      for (const auto& [pc, px] : rows_[pivot_row_[c]]) {
        s[pc] = field_.sub(s[pc], field_.mul(factor, px));
        if (pc > hi) hi = pc;
      }
    }
    Row out;
    for (std::uint32_t c = lo; c <= hi; ++c) {
      if (!field_.is_zero(s[c])) {
        out.emplace_back(c, std::move(s[c]));
        s[c] = field_.zero();
      }
    }
    return out;
  }

  F field_;
  std::uint32_t ncols_;
  std::vector<int> pivot_row_;
  std::vector<Row> rows_;
  mutable std::vector<Element> scratch_;
};

/// Rank of the span of a set of sparse vectors.
template <Field F>
std::size_t rank_of(const F& field, std::uint32_t ncols, const std::vector<SparseVector<F>>& vectors) {
  EchelonBasis<F> eb(field, ncols);
  for (const auto& v : vectors) eb.insert(v);
  return eb.rank();
}

/// Basis of the kernel of the linear map sending source basis vector r to
/// images[r] (a vector in F^target_dim). Kernel vectors are returned in
/// source coordinates.
template <Field F>
std::vector<SparseVector<F>> kernel_basis(const F& field, std::uint32_t target_dim,
                                          const std::vector<SparseVector<F>>& images) {
  const auto source_dim = static_cast<std::uint32_t>(images.size());
  EchelonBasis<F> eb(field, target_dim + source_dim);
  std::vector<SparseVector<F>> kernel;
  for (std::uint32_t r = 0; r < source_dim; ++r) {
    SparseVector<F> row = images[r];
    row.emplace_back(target_dim + r, field.one());
    auto red = eb.reduce_below(row, target_dim);
    // pivots in the augmented block must not be used, since they would mix
    // kernel vectors with pivot rows
    if (red.empty() || red.front().first >= target_dim) {
      SparseVector<F> k;
      for (auto& [c, x] : red) k.emplace_back(c - target_dim, x);
      kernel.push_back(std::move(k));
    } else {
      eb.insert_reduced(std::move(red));
    }
  }
  return kernel;
}

}  // namespace gk
