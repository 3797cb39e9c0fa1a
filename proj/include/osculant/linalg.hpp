#pragma once

// Dense exact linear algebra over a GroundField: reduced row echelon form,
// rank, nullspace and determinant. Pivoting is deterministic: the first
// column holding a nonzero entry, and within it the smallest row index.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "osculant/field.hpp"

namespace osculant {

template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  template <class Row>
  static Matrix from_rows(const std::vector<Row>& rows, const E& zero) {
    Matrix m(rows.size(), rows.empty() ? 0 : std::size(rows.front()), zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t j = 0;
      for (const auto& x : rows[i]) m(i, j++) = x;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const E> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Pivot rows are normalised to a leading 1.
template <GroundField K>
std::vector<std::size_t> rref(const K& /*field*/, Matrix<Elem<K>>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    const Elem<K> scale = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Elem<K> factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <GroundField K>
std::size_t rank(const K& field, Matrix<Elem<K>> m) {
  return rref(field, m).size();
}

template <GroundField K, class Row>
std::size_t rank_of_rows(const K& field, const std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  return rank(field, Matrix<Elem<K>>::from_rows(rows, field.zero()));
}

/// Basis of { x : m x = 0 }, one vector per free column, with a 1 in that
/// free column.
template <GroundField K>
std::vector<std::vector<Elem<K>>> nullspace(const K& field, Matrix<Elem<K>> m) {
  const auto pivots = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem<K>>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem<K>> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <GroundField K>
Elem<K> determinant(const K& field, Matrix<Elem<K>> m) {
  Elem<K> det = field.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != c) {
      m.swap_rows(c, pivot);
      det = -det;
    }
    det = det * m(c, c);
    const Elem<K> inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Elem<K> factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - factor * m(c, j);
    }
  }
  return det;
}

/// True when `v` lies in the row span of `rows`.
template <GroundField K, class Row, class Vec>
bool in_span(const K& field, const std::vector<Row>& rows, const Vec& v) {
  std::vector<std::vector<Elem<K>>> ext;
  for (const auto& r : rows) ext.emplace_back(std::begin(r), std::end(r));
  const std::size_t before = rank_of_rows(field, ext);
  ext.emplace_back(std::begin(v), std::end(v));
  return rank_of_rows(field, ext) == before;
}

}  // namespace osculant
