#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr std::uint32_t kMaxExponent = 65535;

/// Exponent vector in at most kMaxVariables variables, with cached total
/// degree and a support bitmask used as a fast divisibility filter.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  Monomial(std::initializer_list<std::uint32_t> exps) : nvars_(check_nvars(exps.size())) {
    std::size_t i = 0;
    for (auto e : exps) set(i++, e);
  }

  static Monomial from_exponents(std::span<const std::uint32_t> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t num_vars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t support() const { return mask_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t e) {
    if (i >= nvars_) throw std::out_of_range("variable index out of range");
    if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 65535");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<std::uint16_t>(e);
    if (e) mask_ |= bit(i);
    else mask_ &= ~bit(i);
  }

  std::vector<std::uint32_t> exponents() const {
    return std::vector<std::uint32_t>(exps_.begin(), exps_.begin() + nvars_);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial m(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      std::uint32_t e = std::uint32_t{a.exps_[i]} + b.exps_[i];
      if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 65535");
      m.exps_[i] = static_cast<std::uint16_t>(e);
    }
    m.degree_ = a.degree_ + b.degree_;
    m.mask_ = a.mask_ | b.mask_;
    return m;
  }

  /// Exact quotient a / b; requires divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      if (a.exps_[i] < b.exps_[i]) throw std::domain_error("monomial division is not exact");
      m.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
      if (m.exps_[i]) m.mask_ |= bit(i);
    }
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  /// True iff a divides b.
  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree_ > b.degree_ || (a.mask_ & ~b.mask_)) return false;
    for (std::size_t i = 0; i < a.nvars_; ++i)
      if (a.exps_[i] > b.exps_[i]) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial m(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
    }
    m.mask_ = a.mask_ | b.mask_;
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial m(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
      if (m.exps_[i]) m.mask_ |= bit(i);
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.mask_ & b.mask_) == 0; }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exps_[i];
    return h;
  }

 private:
  static std::uint32_t bit(std::size_t i) { return std::uint32_t{1} << i; }
  static std::uint8_t check_nvars(std::size_t n) {
    if (n > kMaxVariables)
      throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
    return static_cast<std::uint8_t>(n);
  }
  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable-count mismatch");
  }

  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic comparison; variable 0 is the largest.
inline std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

/// Global monomial order on k[x_1..x_n]; only degrevlex is provided on
/// polynomials. Module orders are built on top of it (see groebner.hpp).
struct MonomialOrder {
  std::size_t nvars = 0;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.num_vars() != nvars || b.num_vars() != nvars)
      throw std::invalid_argument("variable-count mismatch in monomial comparison");
    return degrevlex(a, b);
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                             const MonomialOrder& order) {
  return order.compare(a, b);
}

/// All monomials of total degree d in n variables, in descending degrevlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(n, 0);
  // enumerate compositions of d into n parts, lex descending in e[0]
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) > 0; });
  return out;
}

}  // namespace gk
