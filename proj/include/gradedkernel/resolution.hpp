#pragma once

// Presented modules, graded free resolutions by iterated syzygies, Gaussian
// minimalization, Betti tables and the Koszul-homology Tor oracle.

#include "gradedkernel/degreewise.hpp"
#include "gradedkernel/groebner.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace gk {

/// M = coker(relations : F_1 -> F_0), F_0 = (+) R(-generator_degrees[i]).
template <Field F>
struct PresentedModule {
  RingContext<F> ring;
  std::vector<int> generator_degrees;
  Matrix<F> relations;

  PresentedModule(RingContext<F> r, std::vector<int> gens, Matrix<F> rel)
      : ring(std::move(r)), generator_degrees(std::move(gens)), relations(std::move(rel)) {
    if (relations.row_degrees != generator_degrees)
      throw std::invalid_argument("relation matrix rows must match the generator degrees");
    if (!relations.is_homogeneous()) throw std::invalid_argument("relation matrix is not homogeneous");
  }

  /// R/J for J generated by `ideal` (cyclic, generated in degree 0).
  static PresentedModule cyclic(RingContext<F> r, const std::vector<Polynomial<F>>& ideal) {
    std::vector<std::vector<Polynomial<F>>> cols;
    for (const auto& g : ideal) {
      if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
      cols.push_back({r.reduce(g)});
    }
    auto m = matrix_from_columns<F>({0}, cols);
    return PresentedModule(std::move(r), {0}, std::move(m));
  }

  static PresentedModule free(RingContext<F> r, std::vector<int> degrees) {
    Matrix<F> m(degrees, {});
    return PresentedModule(std::move(r), std::move(degrees), std::move(m));
  }

  std::size_t num_generators() const { return generator_degrees.size(); }
};

template <Field F>
HilbertSeries hilbert_series(const PresentedModule<F>& M) {
  return cokernel_hilbert_series(M.relations, M.ring);
}

template <Field F>
struct FreeResolution {
  RingContext<F> ring;
  std::vector<std::vector<int>> modules;  // generator degrees of F_0 .. F_L
  std::vector<Matrix<F>> maps;            // maps[i-1] = d_i : F_i -> F_{i-1}
  bool minimal = false;
  bool truncated = false;

  explicit FreeResolution(RingContext<F> r) : ring(std::move(r)) {}

  /// Index of the last free module; -1 for the zero module.
  int length() const { return static_cast<int>(modules.size()) - 1; }
  std::size_t rank(std::size_t i) const { return i < modules.size() ? modules[i].size() : 0; }
  const Matrix<F>& map(std::size_t i) const { return maps.at(i - 1); }
};

namespace detail {

template <Field F>
bool is_unit_entry(const Matrix<F>& m, std::size_t r, std::size_t c) {
  const auto& p = m.at(r, c);
  return !p.is_zero() && p.lead().mono.is_one();
}

template <Field F>
std::optional<std::pair<std::size_t, std::size_t>> find_unit(const Matrix<F>& m) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (is_unit_entry(m, r, c)) return std::make_pair(r, c);
  return std::nullopt;
}

/// Column operations clearing row r outside column c, using the unit
/// entry (r, c); then drops row r and column c.
template <Field F>
void cancel_unit(const RingContext<F>& ring, Matrix<F>& m, std::size_t r, std::size_t c) {
  const auto& f = ring.field();
  auto inv = f.inv(m.at(r, c).lead().coef);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    if (k == c || m.at(r, k).is_zero()) continue;
    auto factor = ring.scale(m.at(r, k), f.neg(inv));
    for (std::size_t s = 0; s < m.rows(); ++s)
      if (!m.at(s, c).is_zero()) m.at(s, k) = ring.add(m.at(s, k), ring.mul(factor, m.at(s, c)));
  }
  m.columns.erase(m.columns.begin() + static_cast<std::ptrdiff_t>(c));
  m.col_degrees.erase(m.col_degrees.begin() + static_cast<std::ptrdiff_t>(c));
  for (auto& col : m.columns) col.erase(col.begin() + static_cast<std::ptrdiff_t>(r));
  m.row_degrees.erase(m.row_degrees.begin() + static_cast<std::ptrdiff_t>(r));
}

template <Field F>
void drop_row(Matrix<F>& m, std::size_t r) {
  for (auto& col : m.columns) col.erase(col.begin() + static_cast<std::ptrdiff_t>(r));
  m.row_degrees.erase(m.row_degrees.begin() + static_cast<std::ptrdiff_t>(r));
}

template <Field F>
void drop_column(Matrix<F>& m, std::size_t c) {
  m.columns.erase(m.columns.begin() + static_cast<std::ptrdiff_t>(c));
  m.col_degrees.erase(m.col_degrees.begin() + static_cast<std::ptrdiff_t>(c));
}

}  // namespace detail

/// Same module with a minimal generating set and minimal relations.
template <Field F>
PresentedModule<F> minimal_presentation(const PresentedModule<F>& M) {
  Matrix<F> a = minimal_generators(M.relations, M.ring);
  bool changed = false;
  while (auto u = detail::find_unit(a)) {
    detail::cancel_unit(M.ring, a, u->first, u->second);
    changed = true;
  }
  if (changed) a = minimal_generators(a, M.ring);
  auto degs = a.row_degrees;
  return PresentedModule<F>(M.ring, std::move(degs), std::move(a));
}

template <Field F>
bool entries_in_maximal_ideal(const FreeResolution<F>& res) {
  for (const auto& m : res.maps)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (detail::is_unit_entry(m, r, c)) return false;
  return true;
}

/// Cancels unit entries by Gaussian elimination until every differential
/// has entries in the maximal ideal. Idempotent.
template <Field F>
FreeResolution<F> minimalize(FreeResolution<F> res) {
  const auto& ring = res.ring;
  for (std::size_t i = 1; i <= res.maps.size(); ++i) {
    for (;;) {
      auto u = detail::find_unit(res.maps[i - 1]);
      if (!u) break;
      auto [r, c] = *u;
      detail::cancel_unit(ring, res.maps[i - 1], r, c);
      if (i < res.maps.size()) detail::drop_row(res.maps[i], c);
      if (i >= 2) detail::drop_column(res.maps[i - 2], r);
      res.modules[i].erase(res.modules[i].begin() + static_cast<std::ptrdiff_t>(c));
      res.modules[i - 1].erase(res.modules[i - 1].begin() + static_cast<std::ptrdiff_t>(r));
    }
  }
  // trailing zero free modules
  while (!res.modules.empty() && res.modules.back().empty()) {
    res.modules.pop_back();
    if (!res.maps.empty()) res.maps.pop_back();
  }
  res.minimal = true;
  return res;
}

/// Resolution F_L -> ... -> F_0 -> M of length at most max_length; over S
/// it always terminates by length n.
template <Field F>
FreeResolution<F> free_resolution(const PresentedModule<F>& M, std::size_t max_length) {
  if (max_length < 1) throw std::invalid_argument("max_length must be at least 1");
  auto pres = minimal_presentation(M);
  FreeResolution<F> res(M.ring);
  if (pres.generator_degrees.empty()) {
    res.minimal = true;
    return res;
  }
  res.modules.push_back(pres.generator_degrees);
  Matrix<F> d = pres.relations;
  for (std::size_t i = 1;; ++i) {
    if (d.cols() == 0) break;
    if (i > max_length) {
      res.truncated = true;
      break;
    }
    res.modules.push_back(d.col_degrees);
    res.maps.push_back(d);
    d = syzygy_matrix(res.maps.back(), res.ring);
  }
  if (!M.ring.has_quotient() && !res.truncated && res.length() > static_cast<int>(M.ring.nvars()))
    throw std::logic_error("resolution over a polynomial ring exceeded the number of variables");
  res.minimal = entries_in_maximal_ideal(res);
  if (!res.minimal) res = minimalize(std::move(res));
  return res;
}

template <Field F>
std::size_t default_max_length(const RingContext<F>& ring) {
  return ring.nvars() + (ring.has_quotient() ? 2 : 1);
}

/// d_i o d_{i+1} = 0 for all consecutive maps.
template <Field F>
bool is_complex(const FreeResolution<F>& res) {
  for (std::size_t i = 1; i < res.maps.size(); ++i)
    if (!multiply(res.ring, res.maps[i - 1], res.maps[i]).is_zero()) return false;
  return true;
}

struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}
  bool truncated = false;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int length() const {
    int l = -1;
    for (const auto& [k, v] : entries)
      if (v) l = std::max(l, k.first);
    return l;
  }
  std::vector<long long> totals() const {
    std::vector<long long> t(static_cast<std::size_t>(length() + 1), 0);
    for (const auto& [k, v] : entries) t[static_cast<std::size_t>(k.first)] += v;
    return t;
  }
  bool empty() const { return length() < 0; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

template <Field F>
BettiTable betti_table(const FreeResolution<F>& res) {
  BettiTable t;
  t.truncated = res.truncated;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int d : res.modules[i]) ++t.entries[{static_cast<int>(i), d}];
  return t;
}

template <Field F>
BettiTable betti_table(const PresentedModule<F>& M, std::size_t max_length) {
  return betti_table(free_resolution(M, max_length));
}

/// sum_i (-1)^i sum_j beta_{i,j} t^j.
inline LaurentPolynomial betti_numerator(const BettiTable& t) {
  LaurentPolynomial p;
  for (const auto& [k, v] : t.entries) p += LaurentPolynomial::monomial(k.first % 2 ? -v : v, k.second);
  return p;
}

/// Rows indexed by j - i, columns by i; dots for zeros; totals last.
inline std::string render_betti(const BettiTable& t) {
  if (t.empty()) return "0\n";
  int L = t.length();
  int rlo = std::numeric_limits<int>::max(), rhi = std::numeric_limits<int>::min();
  for (const auto& [k, v] : t.entries)
    if (v) {
      rlo = std::min(rlo, k.second - k.first);
      rhi = std::max(rhi, k.second - k.first);
    }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  std::vector<std::string> head{""};
  for (int i = 0; i <= L; ++i) head.push_back(std::to_string(i));
  cells.push_back(head);
  for (int r = rlo; r <= rhi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= L; ++i) {
      auto v = t.at(i, r + i);
      row.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(row);
  }
  std::vector<std::string> tot{"total:"};
  for (auto v : t.totals()) tot.push_back(std::to_string(v));
  cells.push_back(tot);
  std::vector<std::size_t> width(static_cast<std::size_t>(L + 2), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  if (t.truncated) os << "(truncated)\n";
  return os.str();
}

namespace detail {

inline std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
  return out;
}

/// Rank of the Koszul differential K_i (x) M -> K_{i-1} (x) M in internal
/// degree j, where K_i has generators e_sigma of degree |sigma|.
template <Field F>
std::size_t koszul_rank(DegreewiseModel<F>& M, std::size_t i, int j) {
  const std::size_t n = M.ring().nvars();
  if (i == 0 || i > n) return 0;
  auto src = subsets_of_size(n, i), dst = subsets_of_size(n, i - 1);
  std::map<std::uint32_t, std::uint32_t> dst_index;
  for (std::uint32_t k = 0; k < dst.size(); ++k) dst_index[dst[k]] = k;
  const auto ds = M.dim(j - static_cast<int>(i));
  const auto dt = M.dim(j - static_cast<int>(i) + 1);
  EchelonBasis<F> eb(M.ring().field(), static_cast<std::uint32_t>(dst.size() * dt));
  const auto& f = M.ring().field();
  for (auto sigma : src)
    for (std::size_t b = 0; b < ds; ++b) {
      std::map<std::uint32_t, typename F::Element> acc;
      int pos = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(sigma >> v & 1)) continue;
        auto img = M.multiply_variable(j - static_cast<int>(i), b, v);
        auto base = dst_index.at(sigma & ~(1u << v)) * static_cast<std::uint32_t>(dt);
        for (const auto& [c, x] : img) {
          auto val = pos % 2 ? f.neg(x) : x;
          auto [it, ins] = acc.emplace(base + c, val);
          if (!ins) it->second = f.add(it->second, val);
        }
        ++pos;
      }
      SparseVector<F> row;
      for (auto& [c, x] : acc)
        if (!f.is_zero(x)) row.emplace_back(c, x);
      eb.insert(row);
    }
  return eb.rank();
}

}  // namespace detail

/// dim Tor_i^S(k, M)_j for j in [lo, hi], from the Koszul complex by linear
/// algebra. Over S/I this is Tor over S of the underlying module.
template <Field F>
std::map<int, long long> koszul_tor(const PresentedModule<F>& M, std::size_t i, int lo, int hi) {
  DegreewiseModel<F> model(M.ring, M.generator_degrees, M.relations);
  const std::size_t n = M.ring.nvars();
  std::map<int, long long> out;
  for (int j = lo; j <= hi; ++j) {
    if (i > n) {
      out[j] = 0;
      continue;
    }
    long long c = static_cast<long long>(detail::subsets_of_size(n, i).size() * model.dim(j - static_cast<int>(i)));
    out[j] = c - static_cast<long long>(detail::koszul_rank(model, i, j)) -
             static_cast<long long>(detail::koszul_rank(model, i + 1, j));
  }
  return out;
}

/// Default internal-degree window for oracle comparisons:
/// [min generator degree, max generator + max relation degree + n + 2].
template <Field F>
std::pair<int, int> default_oracle_window(const PresentedModule<F>& M) {
  int lo = 0, gmax = 0, rmax = 0;
  if (!M.generator_degrees.empty()) {
    lo = *std::min_element(M.generator_degrees.begin(), M.generator_degrees.end());
    gmax = *std::max_element(M.generator_degrees.begin(), M.generator_degrees.end());
  }
  for (int d : M.relations.col_degrees) rmax = std::max(rmax, d);
  return {std::min(lo, 0), gmax + rmax + static_cast<int>(M.ring.nvars()) + 2};
}

}  // namespace gk
