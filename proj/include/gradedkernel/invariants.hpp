#pragma once

// Hom and Ext of presented modules, Hilbert functions, dimension, depth,
// projective dimension, Bass numbers, canonical modules and associated
// primes of monomial quotients.

#include "gradedkernel/resolution.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gk {

/// The same module viewed over the ambient polynomial ring: the relations
/// gain the columns g * e_c for g in the quotient ideal.
template <Field F>
PresentedModule<F> restrict_to_ambient(const PresentedModule<F>& M) {
  if (!M.ring.has_quotient()) return M;
  RingContext<F> S = M.ring.ambient();
  Matrix<F> rel = M.relations;
  for (std::size_t c = 0; c < M.num_generators(); ++c)
    for (const auto& q : M.ring.quotient_gb()) {
      std::vector<Polynomial<F>> col(M.num_generators());
      col[c] = q;
      rel.append_column(col, M.generator_degrees[c] + static_cast<int>(q.lead().mono.degree()));
    }
  return PresentedModule<F>(S, M.generator_degrees, std::move(rel));
}

/// A module over S annihilated by I, reinterpreted over R = S/I.
template <Field F>
PresentedModule<F> extend_to_quotient(const PresentedModule<F>& M, const RingContext<F>& R) {
  Matrix<F> rel(M.generator_degrees, {});
  for (std::size_t c = 0; c < M.relations.cols(); ++c) {
    auto col = M.relations.columns[c];
    bool zero = true;
    for (auto& p : col) {
      p = R.reduce(std::move(p));
      zero = zero && p.is_zero();
    }
    if (!zero) rel.append_column(col, M.relations.col_degrees[c]);
  }
  return PresentedModule<F>(R, M.generator_degrees, std::move(rel));
}

template <Field F>
std::map<int, long long> hilbert_function(const PresentedModule<F>& M, int lo, int hi) {
  auto hs = hilbert_series(M);
  std::map<int, long long> out;
  for (int d = lo; d <= hi; ++d) out[d] = hs.value(d);
  return out;
}

/// Order of the pole of the Hilbert series at t = 1; -1 for the zero module.
template <Field F>
int krull_dim(const PresentedModule<F>& M) {
  return hilbert_series(M).dimension();
}

struct ProjDim {
  int value = 0;
  bool lower_bound = false;  // the true value is at least `value`
  std::string to_string() const { return (lower_bound ? ">= " : "") + std::to_string(value); }
  friend bool operator==(const ProjDim&, const ProjDim&) = default;
};

/// Length of the minimal resolution over M's ring; over quotient rings a
/// resolution still running at `bound` gives ">= bound". Zero module: -1.
template <Field F>
ProjDim projdim(const PresentedModule<F>& M, std::size_t bound) {
  auto res = free_resolution(M, std::max<std::size_t>(bound, 1));
  return {res.length(), res.truncated};
}

/// Depth by Auslander-Buchsbaum over S (modules over S/I are restricted).
template <Field F>
int depth(const PresentedModule<F>& M) {
  auto MS = restrict_to_ambient(M);
  auto res = free_resolution(MS, MS.ring.nvars() + 1);
  if (res.length() < 0) throw std::domain_error("depth of the zero module is undefined");
  return static_cast<int>(MS.ring.nvars()) - res.length();
}

/// Depth from the Koszul complex: n - max{i : Tor_i(k, M) != 0}.
template <Field F>
int depth_koszul(const PresentedModule<F>& M) {
  auto MS = restrict_to_ambient(M);
  auto [lo, hi] = default_oracle_window(MS);
  const int n = static_cast<int>(MS.ring.nvars());
  for (int i = n; i >= 0; --i) {
    auto tor = koszul_tor(MS, static_cast<std::size_t>(i), lo, hi);
    for (const auto& [j, v] : tor)
      if (v) return n - i;
  }
  throw std::domain_error("depth of the zero module is undefined");
}

struct InvariantRecord {
  int dim = -1;
  int depth = 0;
  ProjDim projdim;
  bool cohen_macaulay = false;
};

/// dim, depth and projdim; projdim over M's own ring (bounded over S/I).
template <Field F>
InvariantRecord invariant_record(const PresentedModule<F>& M, std::size_t bound = 0) {
  InvariantRecord r;
  r.dim = krull_dim(M);
  r.depth = depth(M);
  r.projdim = projdim(M, bound ? bound : default_max_length(M.ring));
  r.cohen_macaulay = r.dim == r.depth;
  return r;
}

namespace detail {

template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.row_degrees != b.row_degrees) throw std::invalid_argument("hstack: row mismatch");
  Matrix<F> out = a;
  for (std::size_t c = 0; c < b.cols(); ++c) out.append_column(b.columns[c], b.col_degrees[c]);
  return out;
}

template <Field F>
Matrix<F> identity_matrix(const RingContext<F>& ring, const std::vector<int>& degrees) {
  Matrix<F> m(degrees, degrees);
  for (std::size_t i = 0; i < degrees.size(); ++i) m.at(i, i) = ring.one();
  return m;
}

/// Basis degrees of Hom(F, G0) = F^* (x) G0, index k * |G0| + l.
inline std::vector<int> hom_degrees(const std::vector<int>& f, const std::vector<int>& g0) {
  std::vector<int> out;
  for (int fk : f)
    for (int gl : g0) out.push_back(gl - fk);
  return out;
}

/// h -> h o d as a map Hom(F_{i-1}, G0) -> Hom(F_i, G0), for d : F_i -> F_{i-1}.
template <Field F>
Matrix<F> precompose(const Matrix<F>& d, const std::vector<int>& g0) {
  const std::size_t G = g0.size();
  Matrix<F> m(hom_degrees(d.col_degrees, g0), hom_degrees(d.row_degrees, g0));
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t l = 0; l < G; ++l)
      for (std::size_t c = 0; c < d.cols(); ++c) m.at(c * G + l, r * G + l) = d.at(r, c);
  return m;
}

/// id_{F^*} (x) psi : F^* (x) G1 -> F^* (x) G0.
template <Field F>
Matrix<F> tensor_relations(const Matrix<F>& psi, const std::vector<int>& f) {
  const std::size_t G0 = psi.rows(), G1 = psi.cols();
  Matrix<F> m(hom_degrees(f, psi.row_degrees), hom_degrees(f, psi.col_degrees));
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t mcol = 0; mcol < G1; ++mcol)
      for (std::size_t l = 0; l < G0; ++l) m.at(k * G0 + l, k * G1 + mcol) = psi.at(l, mcol);
  return m;
}

/// First `k` coordinates of each column.
template <Field F>
Matrix<F> project_rows(const Matrix<F>& m, std::size_t k) {
  std::vector<int> rows(m.row_degrees.begin(), m.row_degrees.begin() + static_cast<std::ptrdiff_t>(k));
  Matrix<F> out(rows, {});
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Polynomial<F>> col(m.columns[c].begin(), m.columns[c].begin() + static_cast<std::ptrdiff_t>(k));
    out.append_column(col, m.col_degrees[c]);
  }
  return out;
}

}  // namespace detail

/// (im K + im B) / im B, presented on the columns of K.
template <Field F>
PresentedModule<F> subquotient_presentation(const RingContext<F>& ring, const Matrix<F>& K, const Matrix<F>& B) {
  auto syz = syzygy_matrix(detail::hstack(K, B), ring);
  auto rel = detail::project_rows(syz, K.cols());
  return minimal_presentation(PresentedModule<F>(ring, K.col_degrees, rel));
}

/// Generators of {u : T u in im B}.
template <Field F>
Matrix<F> kernel_modulo(const RingContext<F>& ring, const Matrix<F>& T, const Matrix<F>& B) {
  auto syz = syzygy_matrix(detail::hstack(T, B), ring);
  auto k = detail::project_rows(syz, T.cols());
  return minimal_generators(k, ring);
}

/// Ext^i(M, N) over the common ring, as the homology of Hom(F_., N).
template <Field F>
PresentedModule<F> ext_presentation(const PresentedModule<F>& M, const PresentedModule<F>& N, std::size_t i) {
  if (!M.ring.same_ring(N.ring)) throw std::invalid_argument("context mismatch: Ext over different rings");
  const auto& ring = M.ring;
  auto res = free_resolution(M, i + 1);
  const auto& g0 = N.generator_degrees;
  if (static_cast<int>(i) > res.length()) return PresentedModule<F>::free(ring, {});
  const auto& Fi = res.modules[i];
  auto hom_i = detail::hom_degrees(Fi, g0);
  Matrix<F> K;
  if (static_cast<int>(i) + 1 <= res.length()) {
    auto T = detail::precompose(res.map(i + 1), g0);
    auto Bt = detail::tensor_relations(N.relations, res.modules[i + 1]);
    K = kernel_modulo(ring, T, Bt);
  } else {
    K = detail::identity_matrix(ring, hom_i);
  }
  Matrix<F> B = detail::tensor_relations(N.relations, Fi);
  if (i >= 1) B = detail::hstack(B, detail::precompose(res.map(i), g0));
  return subquotient_presentation(ring, K, B);
}

template <Field F>
PresentedModule<F> hom_presentation(const PresentedModule<F>& M, const PresentedModule<F>& N) {
  return ext_presentation(M, N, 0);
}

namespace detail {

/// Hilbert series of Hom(F, N) for free F.
template <Field F>
HilbertSeries hom_free_series(const std::vector<int>& f, const HilbertSeries& hsN) {
  HilbertSeries out{{}, hsN.denominator_exponent};
  for (int fk : f) out.numerator += hsN.numerator.shifted(-fk);
  return out;
}

/// Hilbert series of the image of h -> h o d in Hom(F_i, N), d: F_i -> F_{i-1}.
template <Field F>
HilbertSeries image_series(const RingContext<F>& ring, const Matrix<F>& d, const PresentedModule<F>& N,
                           const HilbertSeries& hsN) {
  auto target = hom_free_series<F>(d.col_degrees, hsN);
  auto rel = hstack(tensor_relations(N.relations, d.col_degrees), precompose(d, N.generator_degrees));
  auto coker = cokernel_hilbert_series(rel, ring);
  return {target.numerator - coker.numerator, target.denominator_exponent};
}

}  // namespace detail

/// Hilbert series of Ext^i(M, N) for i = 0..imax from Hilbert series of
/// images only; needs the resolution of M up to imax + 1.
template <Field F>
std::vector<HilbertSeries> ext_hilbert_series(const FreeResolution<F>& res, const PresentedModule<F>& N,
                                              std::size_t imax) {
  const auto& ring = res.ring;
  auto hsN = hilbert_series(N);
  const int n = static_cast<int>(ring.nvars());
  std::vector<HilbertSeries> images(imax + 2, HilbertSeries{{}, n});  // images[i]: im in Hom(F_i, N)
  for (std::size_t i = 1; i <= imax + 1 && static_cast<int>(i) <= res.length(); ++i)
    images[i] = detail::image_series(ring, res.map(i), N, hsN);
  std::vector<HilbertSeries> out;
  for (std::size_t i = 0; i <= imax; ++i) {
    if (static_cast<int>(i) > res.length()) {
      out.push_back({{}, n});
      continue;
    }
    auto hom = detail::hom_free_series<F>(res.modules[i], hsN);
    // ker(Hom(F_i,N) -> Hom(F_{i+1},N)) has series hom - images[i+1]
    LaurentPolynomial num = hom.numerator - images[i + 1].numerator - images[i].numerator;
    out.push_back({num, n});
  }
  return out;
}

struct BassNumbers {
  std::vector<long long> mu;
  bool truncated = false;  // resolution of k was still running
};

/// mu_i(N) = dim_k Ext^i(k, N) over N's ring for i <= imax.
template <Field F>
BassNumbers bass_numbers(const PresentedModule<F>& N, std::size_t imax) {
  std::vector<Polynomial<F>> vars;
  for (std::size_t v = 0; v < N.ring.nvars(); ++v) vars.push_back(N.ring.variable(v));
  auto k = PresentedModule<F>::cyclic(N.ring, vars);
  auto res = free_resolution(k, imax + 1);
  BassNumbers b;
  b.truncated = res.truncated;
  for (const auto& hs : ext_hilbert_series(res, N, imax)) {
    auto len = hs.length();
    if (!len) throw std::logic_error("Ext(k, N) must have finite length");
    b.mu.push_back(*len);
  }
  return b;
}

/// omega_R = Ext^{n-d}_S(R, S(-n)) as an R-module, d = dim R.
template <Field F>
PresentedModule<F> canonical_module(const RingContext<F>& R, std::optional<int> d = std::nullopt) {
  auto S = R.ambient();
  auto RS = PresentedModule<F>::cyclic(S, R.quotient_gb());
  const int n = static_cast<int>(R.nvars());
  int dim = d ? *d : krull_dim(RS);
  if (dim < 0) throw std::invalid_argument("canonical module of the zero ring");
  auto omega = PresentedModule<F>::free(S, {n});
  auto ext = ext_presentation(RS, omega, static_cast<std::size_t>(n - dim));
  return minimal_presentation(extend_to_quotient(ext, R));
}

struct PrimeEntry {
  std::vector<std::size_t> variables;  // indices of the generating variables
  Monomial witness;                    // (I : witness) is this prime
  int dim = 0;                         // dim R/p
  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

struct PrimeList {
  std::vector<PrimeEntry> primes;
};

/// Associated primes of S/I, I monomial, by checking (I : m) for every
/// standard monomial with exponents bounded by those of the generators.
template <Field F>
PrimeList associated_primes_monomial(const PresentedModule<F>& M) {
  auto MS = restrict_to_ambient(M);
  if (MS.num_generators() != 1) throw std::invalid_argument("associated primes need a cyclic module S/I");
  const std::size_t n = MS.ring.nvars();
  std::vector<Monomial> gens;
  for (const auto& col : MS.relations.columns) {
    if (col[0].is_zero()) continue;
    if (!col[0].is_monomial()) throw std::invalid_argument("associated primes need a monomial ideal");
    gens.push_back(col[0].lead().mono);
  }
  detail::minimalize_monomials(gens);
  std::vector<std::uint32_t> maxexp(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v) maxexp[v] = std::max(maxexp[v], g[v]);
  PrimeList out;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::uint32_t> e(n, 0);
  for (;;) {
    Monomial m = Monomial::from_exponents(e);
    bool standard = std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
    if (standard) {
      std::vector<Monomial> colon;
      for (const auto& g : gens) colon.push_back(g / gcd(g, m));
      detail::minimalize_monomials(colon);
      bool prime = std::all_of(colon.begin(), colon.end(), [](const Monomial& c) { return c.degree() == 1; });
      if (prime) {
        std::vector<std::size_t> vars;
        for (const auto& c : colon)
          for (std::size_t v = 0; v < n; ++v)
            if (c[v]) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        if (seen.insert(vars).second)
          out.primes.push_back({vars, m, static_cast<int>(n - vars.size())});
      }
    }
    std::size_t v = 0;
    while (v < n && e[v] == maxexp[v]) e[v++] = 0;
    if (v == n) break;
    ++e[v];
  }
  std::sort(out.primes.begin(), out.primes.end(),
            [](const PrimeEntry& a, const PrimeEntry& b) {
              return a.variables.size() != b.variables.size() ? a.variables.size() < b.variables.size()
                                                              : a.variables < b.variables;
            });
  return out;
}

}  // namespace gk
