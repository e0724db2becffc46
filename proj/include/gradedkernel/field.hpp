#pragma once

// Coefficient fields: the prime fields Z/p and the rationals.
//
// Elements are plain values; every arithmetic operation goes through the
// field object, which carries the modulus for Z/p.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gk {

struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::prime;
  std::uint32_t characteristic = 32003;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(std::uint32_t p) { return {Kind::prime, p}; }

  std::string name() const {
    return kind == Kind::rationals ? "QQ" : "ZZ/" + std::to_string(characteristic);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

template <class F>
concept Field = requires(const F& f, const typename F::Element& a, const typename F::Element& b) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Element>;
  { f.add(a, b) } -> std::same_as<typename F::Element>;
  { f.sub(a, b) } -> std::same_as<typename F::Element>;
  { f.mul(a, b) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, b) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.spec() } -> std::same_as<FieldSpec>;
};

/// Z/p with residues stored in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p > (1u << 31) || !is_prime(p))
      throw std::invalid_argument("characteristic must be a prime at most 2^31, got " +
                                  std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  // Decimal digit string, optionally with a leading '-', or a fraction "a/b".
  Element parse(std::string_view text) const {
    auto slash = text.find('/');
    if (slash != std::string_view::npos)
      return div(parse(text.substr(0, slash)), parse(text.substr(slash + 1)));
    bool negative = !text.empty() && text.front() == '-';
    if (negative) text.remove_prefix(1);
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::uint64_t acc = 0;
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal");
      acc = (acc * 10 + static_cast<unsigned>(c - '0')) % p_;
    }
    Element e = static_cast<Element>(acc);
    return negative ? neg(e) : e;
  }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }

  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero in " + spec().name());
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  // Symmetric representative, so -1 prints as -1 rather than p-1.
  std::int64_t lift(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(lift(a)); }
  bool is_negative(Element a) const { return lift(a) < 0; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// QQ, with elements as canonical GMP rationals.
class RationalField {
 public:
  using Element = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }

  Element parse(std::string_view text) const {
    Element e;
    if (e.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad rational literal");
    if (e.get_den() == 0) throw std::domain_error("zero denominator");
    e.canonicalize();
    return e;
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("division by zero in QQ");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

}  // namespace gk
