#pragma once

// Elements of graded free modules F = (+)_i S(-d_i) and homogeneous
// matrices between them. Generator degrees d_i are stored directly, so a
// free summand S(-2) has degree 2.

#include "gradedkernel/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

template <Field F>
struct FreeModuleElement {
  std::vector<Polynomial<F>> components;
  std::vector<int> degrees;  // generator degree of each basis vector

  FreeModuleElement() = default;
  FreeModuleElement(std::vector<Polynomial<F>> comps, std::vector<int> degs)
      : components(std::move(comps)), degrees(std::move(degs)) {
    if (components.size() != degrees.size())
      throw std::invalid_argument("component count must equal shift count");
  }

  std::size_t rank() const { return components.size(); }
  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Internal degree when homogeneous and nonzero.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& c = components[i];
      if (c.is_zero()) continue;
      if (!c.is_homogeneous()) return std::nullopt;
      int di = static_cast<int>(c.lead().mono.degree()) + degrees[i];
      if (d && *d != di) return std::nullopt;
      d = di;
    }
    return d;
  }

  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  friend bool operator==(const FreeModuleElement&, const FreeModuleElement&) = default;
};

/// Homogeneous map of free modules, stored by columns. Column c is the image
/// of the c-th source generator; entry (r, c) has degree
/// col_degrees[c] - row_degrees[r].
template <Field F>
struct Matrix {
  std::vector<int> row_degrees;
  std::vector<int> col_degrees;
  std::vector<std::vector<Polynomial<F>>> columns;

  Matrix() = default;
  Matrix(std::vector<int> rows, std::vector<int> cols)
      : row_degrees(std::move(rows)), col_degrees(std::move(cols)),
        columns(col_degrees.size(), std::vector<Polynomial<F>>(row_degrees.size())) {}

  std::size_t rows() const { return row_degrees.size(); }
  std::size_t cols() const { return col_degrees.size(); }
  const Polynomial<F>& at(std::size_t r, std::size_t c) const { return columns[c][r]; }
  Polynomial<F>& at(std::size_t r, std::size_t c) { return columns[c][r]; }

  FreeModuleElement<F> column(std::size_t c) const { return {columns[c], row_degrees}; }

  void append_column(const std::vector<Polynomial<F>>& col, int degree) {
    if (col.size() != rows()) throw std::invalid_argument("column length mismatch");
    columns.push_back(col);
    col_degrees.push_back(degree);
  }

  bool is_zero() const {
    for (const auto& col : columns)
      for (const auto& p : col)
        if (!p.is_zero()) return false;
    return true;
  }

  /// Every nonzero entry homogeneous of the degree its position demands.
  bool is_homogeneous() const {
    for (std::size_t c = 0; c < cols(); ++c)
      for (std::size_t r = 0; r < rows(); ++r) {
        const auto& p = columns[c][r];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return false;
        if (static_cast<int>(p.lead().mono.degree()) != col_degrees[c] - row_degrees[r]) return false;
      }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Columns' degrees inferred from their entries; zero columns get the
/// supplied fallback degree.
template <Field F>
Matrix<F> matrix_from_columns(std::vector<int> row_degrees, const std::vector<std::vector<Polynomial<F>>>& cols,
                              int zero_column_degree = 0) {
  Matrix<F> m(std::move(row_degrees), {});
  for (const auto& col : cols) {
    FreeModuleElement<F> e(col, m.row_degrees);
    auto d = e.degree();
    if (!e.is_zero() && !d) throw std::invalid_argument("inhomogeneous column");
    m.append_column(col, d.value_or(zero_column_degree));
  }
  return m;
}

template <Field F>
Matrix<F> multiply(const RingContext<F>& ring, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<F> out(a.row_degrees, b.col_degrees);
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& bkc = b.at(k, c);
      if (bkc.is_zero()) continue;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto& ark = a.at(r, k);
        if (ark.is_zero()) continue;
        out.at(r, c) = ring.add(out.at(r, c), ring.mul(ark, bkc));
      }
    }
  return out;
}

/// Transpose as a map of dual free modules: degrees are negated.
template <Field F>
Matrix<F> transpose(const Matrix<F>& m) {
  std::vector<int> rows, cols;
  for (int d : m.col_degrees) rows.push_back(-d);
  for (int d : m.row_degrees) cols.push_back(-d);
  Matrix<F> t(rows, cols);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) t.at(c, r) = m.at(r, c);
  return t;
}

template <Field F>
std::string format_matrix(const RingContext<F>& ring, const Matrix<F>& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += "| ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += ring.format(m.at(r, c));
    }
    s += " |\n";
  }
  return s;
}

}  // namespace gk
