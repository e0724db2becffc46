#pragma once

// Small helpers shared by the unit tests.

#include "gradedkernel/groebner.hpp"
#include "gradedkernel/parse.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace gk::test {

template <Field F = PrimeField>
RingContext<F> ring(std::vector<std::string> names, F field = F{}) {
  return RingContext<F>(std::move(names), field);
}

template <Field F>
Polynomial<F> P(const RingContext<F>& ctx, const std::string& text) {
  return parse_polynomial(text, ctx);
}

template <Field F>
std::vector<Polynomial<F>> Ps(const RingContext<F>& ctx, std::initializer_list<const char*> texts) {
  std::vector<Polynomial<F>> out;
  for (auto t : texts) out.push_back(parse_polynomial(t, ctx));
  return out;
}

/// Ideal element of a rank-one module.
template <Field F>
FreeModuleElement<F> E(const RingContext<F>& ctx, const std::string& text) {
  return {{parse_polynomial(text, ctx)}, {0}};
}

/// Row matrix (f_1 .. f_r): F_r -> S with column degrees deg f_i.
template <Field F>
Matrix<F> row(const RingContext<F>& ctx, std::initializer_list<const char*> texts) {
  std::vector<std::vector<Polynomial<F>>> cols;
  for (auto t : texts) cols.push_back({parse_polynomial(t, ctx)});
  return matrix_from_columns<F>({0}, cols);
}

/// Random polynomial with up to `terms` terms of degree at most maxdeg.
template <Field F>
Polynomial<F> random_poly(std::mt19937_64& rng, const RingContext<F>& ctx, int terms, int maxdeg,
                          bool homogeneous = false) {
  std::vector<Term<F>> ts;
  int hdeg = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
  for (int k = 0; k < terms; ++k) {
    int d = homogeneous ? hdeg : static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    Monomial m(ctx.nvars());
    for (int s = 0; s < d; ++s) {
      auto v = rng() % ctx.nvars();
      m.set(v, m[v] + 1);
    }
    auto c = ctx.field().from_int(static_cast<std::int64_t>(rng() % 19) - 9);
    ts.push_back({c, m});
  }
  return ctx.canonicalize(std::move(ts));
}

}  // namespace gk::test

namespace gk {
template <Field F>
void PrintTo(const Polynomial<F>& f, std::ostream* os) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < (f.is_zero() ? 0 : f.lead().mono.num_vars()); ++i) names.push_back("x" + std::to_string(i + 1));
  if (f.is_zero()) *os << "0";
  else *os << RingContext<F>(names, F{}).format(f);
}
}  // namespace gk
