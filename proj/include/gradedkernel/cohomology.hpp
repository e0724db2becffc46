#pragma once

// Graded local cohomology tables by local duality,
//   dim H^i_m(M)_j = dim Ext^{n-i}_S(M, S(-n))_{-j},
// a truncated Cech (Koszul-power) oracle, truncation towers M / a^t M and
// Lyubeznik numbers.

#include "gradedkernel/invariants.hpp"

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace gk {

struct CohomologyTable {
  int nvars = 0;
  int lo = 0, hi = -1;
  std::vector<std::vector<long long>> dims;          // dims[i][j - lo]
  std::vector<bool> zero;                            // H^i = 0 (in every degree)
  std::vector<std::optional<int>> top_degree;        // highest nonzero degree
  std::vector<std::optional<long long>> total;       // total dimension when finite

  long long at(int i, int j) const {
    if (i < 0 || i > nvars) return 0;
    if (j < lo || j > hi) throw std::out_of_range("degree outside the table window");
    return dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - lo)];
  }
  bool nonzero_in_window(int i) const {
    if (i < 0 || i > nvars) return false;
    for (auto v : dims[static_cast<std::size_t>(i)])
      if (v) return true;
    return false;
  }
  /// Every nonzero piece above the window's lower end lies inside it.
  bool covers_top() const {
    for (const auto& t : top_degree)
      if (t && *t > hi) return false;
    return true;
  }
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

inline std::string render_cohomology(const CohomologyTable& t) {
  std::size_t w = 1;
  for (int j = t.lo; j <= t.hi; ++j) w = std::max(w, std::to_string(j).size());
  for (const auto& row : t.dims)
    for (auto v : row) w = std::max(w, std::to_string(v).size());
  std::ostringstream os;
  os << std::setw(6) << "j:";
  for (int j = t.lo; j <= t.hi; ++j) os << ' ' << std::setw(static_cast<int>(w)) << j;
  os << '\n';
  for (int i = 0; i <= t.nvars; ++i) {
    os << std::setw(6) << ("H^" + std::to_string(i) + ":");
    for (auto v : t.dims[static_cast<std::size_t>(i)])
      os << ' ' << std::setw(static_cast<int>(w)) << (v ? std::to_string(v) : ".");
    os << '\n';
  }
  return os.str();
}

namespace detail {

inline int max_relation_degree(const std::vector<int>& col_degrees, const std::vector<int>& gen_degrees) {
  int g = 1;
  for (std::size_t c = 0; c < col_degrees.size(); ++c) g = std::max(g, col_degrees[c]);
  for (int d : gen_degrees) g = std::max(g, d);
  return g;
}

}  // namespace detail

/// [-(n + g + 2), n*g + 2], g the largest generator or relation degree.
template <Field F>
std::pair<int, int> default_cohomology_window(const PresentedModule<F>& M) {
  auto MS = restrict_to_ambient(M);
  const int n = static_cast<int>(MS.ring.nvars());
  int g = detail::max_relation_degree(MS.relations.col_degrees, MS.generator_degrees);
  return {-(n + g + 2), n * g + 2};
}

/// Local cohomology over S of M (or of M restricted from S/I).
template <Field F>
CohomologyTable local_cohomology_table(const PresentedModule<F>& M, int lo, int hi) {
  auto MS = restrict_to_ambient(M);
  const auto& S = MS.ring;
  const int n = static_cast<int>(S.nvars());
  auto res = free_resolution(MS, static_cast<std::size_t>(n) + 1);
  auto series = ext_hilbert_series(res, PresentedModule<F>::free(S, {n}), static_cast<std::size_t>(n));
  CohomologyTable t;
  t.nvars = n;
  t.lo = lo;
  t.hi = hi;
  for (int i = 0; i <= n; ++i) {
    const auto& hs = series[static_cast<std::size_t>(n - i)];
    std::vector<long long> row;
    for (int j = lo; j <= hi; ++j) {
      auto v = hs.value(-j);
      if (v < 0) throw std::logic_error("negative local cohomology dimension");
      row.push_back(v);
    }
    t.dims.push_back(std::move(row));
    t.zero.push_back(hs.is_zero());
    auto init = hs.initial_degree();
    t.top_degree.push_back(init ? std::optional<int>(-*init) : std::nullopt);
    t.total.push_back(hs.is_zero() ? std::optional<long long>(0) : hs.length());
  }
  return t;
}

template <Field F>
CohomologyTable local_cohomology_table(const PresentedModule<F>& M) {
  auto [lo, hi] = default_cohomology_window(M);
  return local_cohomology_table(M, lo, hi);
}

struct CechTable {
  CohomologyTable table;
  std::map<std::pair<int, int>, int> power;  // Koszul power used for (i, j)
  bool complete = true;                      // powers k0 and k0 + 1 agreed everywhere
};

/// H^i_m(M)_j as the limit over k of Koszul cohomology H^i(x_1^k..x_n^k; M)_j,
/// from degreewise ranks only. H^i(x^k; M) = Tor_{n-i}(S/(x^k), M)(nk), and
/// (S/(x^k))(nk - n) agrees with the injective hull in degree e once
/// k > -n - e; so with f the largest twist of the resolution in positions
/// n-i-1..n-i+1 the power k0 = f - n - j + 1 already gives the limit. The
/// resolution is used for nothing but this choice of k0; powers k0 and
/// k0 + 1 are both computed and must agree.
template <Field F>
CechTable cech_local_cohomology(const PresentedModule<F>& M, int lo, int hi) {
  auto MS = restrict_to_ambient(M);
  const auto& S = MS.ring;
  const auto& f = S.field();
  const std::size_t n = S.nvars();
  const int ni = static_cast<int>(n);
  DegreewiseModel<F> model(S, MS.generator_degrees, MS.relations);
  std::vector<std::vector<std::uint32_t>> subsets(n + 1);
  for (std::size_t i = 0; i <= n; ++i) subsets[i] = detail::subsets_of_size(n, i);

  auto res = free_resolution(MS, n + 1);
  auto max_twist = [&](int p) {
    int m = 0;
    for (int q = p - 1; q <= p + 1; ++q)
      if (q >= 0 && q <= res.length())
        for (int d : res.modules[static_cast<std::size_t>(q)]) m = std::max(m, d);
    return m;
  };

  std::map<std::tuple<int, int, int>, long long> rank_memo;
  // rank of d^i : C^i -> C^{i+1} in degree j, C^i = (+)_{|s|=i} M_{j+ki}
  auto rank_of = [&](int i, int j, int k) -> long long {
    if (i < 0 || i >= ni) return 0;
    auto key = std::make_tuple(i, j, k);
    if (auto it = rank_memo.find(key); it != rank_memo.end()) return it->second;
    const int ds = j + k * i, dt = ds + k;
    const auto src_dim = model.dim(ds), dst_dim = model.dim(dt);
    long long r = 0;
    if (src_dim && dst_dim) {
      const auto& src = subsets[static_cast<std::size_t>(i)];
      const auto& dst = subsets[static_cast<std::size_t>(i) + 1];
      std::map<std::uint32_t, std::uint32_t> dst_index;
      for (std::uint32_t s = 0; s < dst.size(); ++s) dst_index[dst[s]] = s;
      EchelonBasis<F> eb(f, static_cast<std::uint32_t>(dst.size() * dst_dim));
      for (auto sigma : src)
        for (std::size_t b = 0; b < src_dim; ++b) {
          std::map<std::uint32_t, typename F::Element> acc;
          int below = 0;
          for (std::size_t v = 0; v < n; ++v) {
            if (sigma >> v & 1) {
              ++below;
              continue;
            }
            auto img = model.multiply(ds, b, S.monomial(Monomial::variable(n, v, static_cast<std::uint32_t>(k))));
            auto base = dst_index.at(sigma | (1u << v)) * static_cast<std::uint32_t>(dst_dim);
            for (const auto& [c, x] : img) {
              auto val = below % 2 ? f.neg(x) : x;
              auto [it, ins] = acc.emplace(base + c, val);
              if (!ins) it->second = f.add(it->second, val);
            }
          }
          SparseVector<F> row;
          for (auto& [c, x] : acc)
            if (!f.is_zero(x)) row.emplace_back(c, x);
          eb.insert(row);
        }
      r = static_cast<long long>(eb.rank());
    }
    rank_memo.emplace(key, r);
    return r;
  };
  auto koszul_h = [&](int i, int j, int k) {
    long long dimC = static_cast<long long>(subsets[static_cast<std::size_t>(i)].size() * model.dim(j + k * i));
    return dimC - rank_of(i, j, k) - rank_of(i - 1, j, k);
  };

  CechTable out;
  auto& t = out.table;
  t.nvars = ni;
  t.lo = lo;
  t.hi = hi;
  for (int i = 0; i <= ni; ++i) {
    std::vector<long long> row;
    const int twist = max_twist(ni - i);
    for (int j = lo; j <= hi; ++j) {
      const int k0 = std::max(1, twist - ni - j + 1);
      long long h = koszul_h(i, j, k0);
      if (koszul_h(i, j, k0 + 1) != h) out.complete = false;
      out.power[{i, j}] = k0;
      row.push_back(h);
    }
    t.dims.push_back(std::move(row));
    t.zero.push_back(false);
    t.top_degree.push_back(std::nullopt);
    t.total.push_back(std::nullopt);
  }
  return out;
}

/// Generators of J^t from generators of J (products over multisets).
template <Field F>
std::vector<Polynomial<F>> ideal_power(const RingContext<F>& ring, const std::vector<Polynomial<F>>& gens, int t) {
  if (t < 0) throw std::invalid_argument("negative ideal power");
  std::vector<Polynomial<F>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  if (gens.empty()) return t == 0 ? std::vector<Polynomial<F>>{ring.one()} : out;
  for (;;) {
    Polynomial<F> p = ring.one();
    for (auto i : idx) p = ring.mul(p, gens[i]);
    if (!p.is_zero() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    // next nondecreasing index tuple
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < idx.size(); ++q) idx[q] = idx[pos - 1];
  }
  return out;
}

/// M / J M for J generated by `ideal`.
template <Field F>
PresentedModule<F> truncate_module(const PresentedModule<F>& M, const std::vector<Polynomial<F>>& ideal) {
  Matrix<F> rel = M.relations;
  for (std::size_t c = 0; c < M.num_generators(); ++c)
    for (const auto& g : ideal) {
      auto r = M.ring.reduce(g);
      if (r.is_zero()) continue;
      std::vector<Polynomial<F>> col(M.num_generators());
      col[c] = r;
      rel.append_column(col, M.generator_degrees[c] + static_cast<int>(r.lead().mono.degree()));
    }
  return PresentedModule<F>(M.ring, M.generator_degrees, std::move(rel));
}

struct FormalTower {
  std::vector<CohomologyTable> stages;                        // stages[t-1] for M / a^t M
  std::vector<std::string> inner_ideal;                       // generators of a, formatted
  bool literal = false;                                       // a is the maximal ideal
  int lo = 0, hi = -1;
  std::map<std::pair<int, int>, std::optional<int>> stabilization;  // nullopt: not stabilized

  int tmax() const { return static_cast<int>(stages.size()); }
  long long at(int t, int i, int j) const { return stages.at(static_cast<std::size_t>(t - 1)).at(i, j); }
  friend bool operator==(const FormalTower&, const FormalTower&) = default;
};

/// [-(n + tMax*maxdeg(a) + g + 2), tMax*maxdeg(a) + g + 2].
template <Field F>
std::pair<int, int> default_tower_window(const PresentedModule<F>& M, const std::vector<Polynomial<F>>& a,
                                         int tmax) {
  auto MS = restrict_to_ambient(M);
  const int n = static_cast<int>(MS.ring.nvars());
  int g = detail::max_relation_degree(MS.relations.col_degrees, MS.generator_degrees);
  int da = 1;
  for (const auto& p : a)
    if (!p.is_zero()) da = std::max(da, static_cast<int>(p.lead().mono.degree()));
  int span = tmax * da + g + 2;
  return {-(n + span), span};
}

template <Field F>
bool is_maximal_ideal(const RingContext<F>& ring, const std::vector<Polynomial<F>>& a) {
  // (a) = m iff every variable lies in the linear span of the degree-one generators
  std::vector<Polynomial<F>> lin;
  for (const auto& p : a)
    if (!p.is_zero() && p.lead().mono.degree() == 1) lin.push_back(p);
  const std::size_t n = ring.nvars();
  EchelonBasis<F> eb(ring.field(), static_cast<std::uint32_t>(n));
  for (const auto& p : lin) {
    SparseVector<F> v;
    for (const auto& t : p.terms)
      for (std::size_t x = 0; x < n; ++x)
        if (t.mono[x]) v.emplace_back(static_cast<std::uint32_t>(x), t.coef);
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    eb.insert(v);
  }
  return eb.rank() == n;
}

/// Stage t is the local cohomology table of M / a^t M for t = 1..tmax; an
/// entry is stabilized at the least t after which it is constant through
/// tmax, provided that leaves at least two equal levels.
template <Field F>
FormalTower formal_tower(const PresentedModule<F>& M, const std::vector<Polynomial<F>>& a, int tmax, int lo,
                         int hi) {
  if (tmax < 1) throw std::invalid_argument("tMax must be at least 1");
  for (const auto& p : a)
    if (!p.is_homogeneous()) throw std::invalid_argument("inner ideal must be homogeneous");
  FormalTower tower;
  tower.lo = lo;
  tower.hi = hi;
  tower.literal = is_maximal_ideal(M.ring, a);
  for (const auto& p : a) tower.inner_ideal.push_back(M.ring.format(p));
  for (int t = 1; t <= tmax; ++t)
    tower.stages.push_back(local_cohomology_table(truncate_module(M, ideal_power(M.ring, a, t)), lo, hi));
  const int n = static_cast<int>(M.ring.nvars());
  for (int i = 0; i <= n; ++i)
    for (int j = lo; j <= hi; ++j) {
      int first = tmax;
      while (first > 1 && tower.at(first - 1, i, j) == tower.at(tmax, i, j)) --first;
      tower.stabilization[{i, j}] = first < tmax ? std::optional<int>(first) : std::nullopt;
    }
  return tower;
}

template <Field F>
FormalTower formal_tower(const PresentedModule<F>& M, const std::vector<Polynomial<F>>& a, int tmax) {
  auto [lo, hi] = default_tower_window(M, a, tmax);
  return formal_tower(M, a, tmax, lo, hi);
}

struct LyubeznikTable {
  int dim = -1;                                 // dim R
  int ibound = 0;
  std::map<std::pair<int, int>, long long> values;  // (i, j) -> lambda_{i,j}, j = 0..n
  bool truncated = false;

  long long at(int i, int j) const {
    auto it = values.find({i, j});
    return it == values.end() ? 0 : it->second;
  }
  friend bool operator==(const LyubeznikTable&, const LyubeznikTable&) = default;
};

/// lambda_{i,j} = dim Ext^i_R(k, H^j_m(R)) = beta_i^R(Ext^{n-j}_S(R, S(-n)))
/// by graded Matlis duality.
template <Field F>
LyubeznikTable lyubeznik_table(const RingContext<F>& R, int ibound) {
  if (ibound < 0) throw std::invalid_argument("iBound must be nonnegative");
  auto S = R.ambient();
  const int n = static_cast<int>(R.nvars());
  auto RS = PresentedModule<F>::cyclic(S, R.quotient_gb());
  LyubeznikTable out;
  out.dim = krull_dim(RS);
  out.ibound = ibound;
  auto res = free_resolution(RS, static_cast<std::size_t>(n) + 1);
  auto omega = PresentedModule<F>::free(S, {n});
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= ibound; ++i) out.values[{i, j}] = 0;
    if (n - j > res.length()) continue;
    auto E = ext_presentation(RS, omega, static_cast<std::size_t>(n - j));
    auto ER = minimal_presentation(extend_to_quotient(E, R));
    if (ER.num_generators() == 0) continue;
    auto resE = free_resolution(ER, static_cast<std::size_t>(ibound));
    if (resE.truncated) out.truncated = true;
    for (int i = 0; i <= ibound && i <= resE.length(); ++i)
      out.values[{i, j}] = static_cast<long long>(resE.rank(static_cast<std::size_t>(i)));
  }
  return out;
}

}  // namespace gk
