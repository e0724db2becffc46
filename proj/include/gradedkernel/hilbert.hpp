#pragma once

// Hilbert series N(t) / (1 - t)^n of graded modules, with N a Laurent
// polynomial, and the numerator of S/J for monomial ideals J.

#include "gradedkernel/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(long long c, int e) {
    LaurentPolynomial p;
    p.low_ = e;
    p.coeffs_ = {c};
    p.normalize();
    return p;
  }
  static LaurentPolynomial one() { return monomial(1, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  long long coefficient(int e) const {
    if (e < low_ || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  const std::vector<long long>& coefficients() const { return coeffs_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return axpy(1, o); }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return axpy(-1, o); }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    p.normalize();
    return p;
  }

  LaurentPolynomial shifted(int s) const {
    LaurentPolynomial p = *this;
    if (!p.is_zero()) p.low_ += s;
    return p;
  }

  long long value_at_one() const {
    long long s = 0;
    for (auto c : coeffs_) s += c;
    return s;
  }

  /// Exact quotient by (1 - t), or nullopt when 1 is not a root.
  std::optional<LaurentPolynomial> divided_by_one_minus_t() const {
    if (is_zero()) return *this;
    if (value_at_one() != 0) return std::nullopt;
    // p = (1 - t) q  =>  q_k = sum_{i <= k} p_i
    LaurentPolynomial q;
    q.low_ = low_;
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
      acc += coeffs_[i];
      q.coeffs_.push_back(acc);
    }
    q.normalize();
    return q;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      long long c = coeffs_[i];
      if (!c) continue;
      int e = low_ + static_cast<int>(i);
      s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      long long m = c < 0 ? -c : c;
      if (e == 0) s += std::to_string(m);
      else {
        if (m != 1) s += std::to_string(m);
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  LaurentPolynomial& axpy(long long sign, const LaurentPolynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      low_ = o.low_;
      coeffs_.clear();
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(is_zero() ? o.high() : high(), o.high());
    std::vector<long long> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      c[static_cast<std::size_t>(o.low_ - lo) + i] += sign * o.coeffs_[i];
    coeffs_ = std::move(c);
    low_ = lo;
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  int low_ = 0;
  std::vector<long long> coeffs_;
};

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Series numerator(t) / (1 - t)^denominator_exponent.
struct HilbertSeries {
  LaurentPolynomial numerator;
  int denominator_exponent = 0;

  bool is_zero() const { return numerator.is_zero(); }

  /// dim_k M_d.
  long long value(int d) const {
    const int n = denominator_exponent;
    long long s = 0;
    for (int e = numerator.low(); e <= numerator.high() && e <= d; ++e) {
      long long c = numerator.coefficient(e);
      if (!c) continue;
      s += n == 0 ? (e == d ? c : 0) : c * binomial(d - e + n - 1, n - 1);
    }
    return s;
  }

  /// Order of the pole at t = 1, i.e. the Krull dimension; -1 for zero.
  int dimension() const {
    if (is_zero()) return -1;
    int k = 0;
    LaurentPolynomial p = numerator;
    while (k < denominator_exponent) {
      auto q = p.divided_by_one_minus_t();
      if (!q) break;
      p = *q;
      ++k;
    }
    return denominator_exponent - k;
  }

  /// Numerator over (1 - t)^dimension with no further cancellation.
  LaurentPolynomial reduced_numerator() const {
    LaurentPolynomial p = numerator;
    for (int k = 0; k < denominator_exponent; ++k) {
      auto q = p.divided_by_one_minus_t();
      if (!q) break;
      p = *q;
    }
    return p;
  }

  /// Total dimension of a finite-length module; nullopt otherwise.
  std::optional<long long> length() const {
    if (dimension() > 0) return std::nullopt;
    return reduced_numerator().value_at_one();
  }

  /// Lowest degree with a nonzero graded piece.
  std::optional<int> initial_degree() const {
    if (is_zero()) return std::nullopt;
    return numerator.low();
  }

  /// Highest nonzero degree of a finite-length module.
  std::optional<int> top_degree() const {
    if (is_zero() || dimension() > 0) return std::nullopt;
    return reduced_numerator().high();
  }

  HilbertSeries shifted(int s) const { return {numerator.shifted(s), denominator_exponent}; }

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.numerator == b.numerator && a.denominator_exponent == b.denominator_exponent;
  }
};

namespace detail {

inline void minimalize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return degrevlex(a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

inline LaurentPolynomial numerator_rec(std::vector<Monomial> gens, std::size_t n) {
  minimalize_monomials(gens);
  if (gens.empty()) return LaurentPolynomial::one();
  if (gens.front().degree() == 0) return {};
  // pure powers of distinct variables: product of (1 - t^a)
  bool pure = std::all_of(gens.begin(), gens.end(),
                          [](const Monomial& m) { return std::popcount(m.support()) == 1; });
  if (pure) {
    LaurentPolynomial p = LaurentPolynomial::one();
    for (const auto& g : gens)
      p = p * (LaurentPolynomial::one() - LaurentPolynomial::monomial(1, static_cast<int>(g.degree())));
    return p;
  }
  // pivot on the variable occurring in most mixed generators, at the median exponent
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    if (std::popcount(g.support()) > 1)
      for (std::size_t v = 0; v < n; ++v)
        if (g[v]) ++count[v];
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<std::uint32_t> exps;
  for (const auto& g : gens)
    if (g[var]) exps.push_back(g[var]);
  std::sort(exps.begin(), exps.end());
  std::uint32_t e = exps[(exps.size() - 1) / 2];
  Monomial pivot = Monomial::variable(n, var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / gcd(g, pivot));
  return numerator_rec(std::move(plus), n) +
         numerator_rec(std::move(colon), n).shifted(static_cast<int>(e));
}

}  // namespace detail

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of S/J, J monomial.
inline LaurentPolynomial monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t n) {
  return detail::numerator_rec(std::move(gens), n);
}

}  // namespace gk
