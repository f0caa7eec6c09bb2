#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ckit {

// Dense matrix over an exact field element type F.
// F needs: F(long long), +, -, *, /, ==, is-zero via (x == F(0)).
template <class F>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}

  F &operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const F &operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  bool operator==(const Mat &o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Mat operator*(const Mat &o) const {
    if (cols != o.rows) throw std::runtime_error("Mat: shape mismatch");
    Mat r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const F &x = (*this)(i, k);
        if (x == F(0)) continue;
        for (std::size_t j = 0; j < o.cols; ++j) {
          if (o(k, j) == F(0)) continue;
          r(i, j) = r(i, j) + x * o(k, j);
        }
      }
    return r;
  }

  Mat operator+(const Mat &o) const {
    Mat r(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }

  Mat operator-(const Mat &o) const {
    Mat r(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
  }

  Mat scaled(const F &s) const {
    Mat r(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
    return r;
  }

  bool is_zero() const {
    for (const auto &x : a)
      if (!(x == F(0))) return false;
    return true;
  }
};

// In-place fraction-free-less row echelon; returns rank.
template <class F>
std::size_t row_echelon(Mat<F> &m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, col) == F(0)) ++piv;
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(rank, j), m(piv, j));
    F inv = F(1) / m(rank, col);
    for (std::size_t j = col; j < m.cols; ++j) m(rank, j) = m(rank, j) * inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m(i, col) == F(0)) continue;
      F f = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class F>
std::size_t mat_rank(Mat<F> m) {
  return row_echelon(m);
}

// Basis of the right null space (columns are null vectors).
template <class F>
std::vector<std::vector<F>> null_space(Mat<F> m) {
  std::size_t n = m.cols;
  row_echelon(m);
  std::vector<long long> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::size_t j = 0;
    while (j < n && m(i, j) == F(0)) ++j;
    if (j == n) break;
    pivot_of_col[j] = static_cast<long long>(i);
    ++r;
  }
  std::vector<std::vector<F>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    std::vector<F> v(n, F(0));
    v[j] = F(1);
    for (std::size_t k = 0; k < n; ++k)
      if (pivot_of_col[k] >= 0) v[k] = F(0) - m(static_cast<std::size_t>(pivot_of_col[k]), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Mat<F> mat_inverse(const Mat<F> &m) {
  if (m.rows != m.cols) throw std::runtime_error("mat_inverse: not square");
  std::size_t n = m.rows;
  Mat<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  if (row_echelon(aug) != n) throw std::runtime_error("mat_inverse: singular");
  Mat<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
std::vector<F> mat_apply(const Mat<F> &m, const std::vector<F> &v) {
  std::vector<F> r(m.rows, F(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!(m(i, j) == F(0))) r[i] = r[i] + m(i, j) * v[j];
  return r;
}

}  // namespace ckit
