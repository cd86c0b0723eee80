#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galg/arith.hpp"

namespace galg {

// Dense row-major matrix over an exact field (Rational or CycloNum).
template <class T>
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool is_zero() const {
    for (const auto& x : a)
      if (!galg::is_zero(x)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch");
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        const T& xik = x(i, k);
        if (galg::is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }

  friend Mat operator*(const T& s, const Mat& x) {
    Mat z = x;
    for (auto& v : z.a) v = s * v;
    return z;
  }
};

// Gaussian elimination to reduced row echelon form; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Mat<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && is_zero(m(p, col))) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
T det(Mat<T> m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows;
  T d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(m(p, col))) ++p;
    if (p == n) return T(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    T inv = T(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      T f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

template <class T>
std::size_t rank(Mat<T> m) {
  return rref(m).size();
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows;
  Mat<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Basis (as rows) of the left kernel {x : x * m = 0}.
template <class T>
Mat<T> left_kernel(const Mat<T>& m) {
  Mat<T> t = m.transpose();
  auto piv = rref(t);
  std::vector<bool> is_piv(t.cols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < t.cols; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  Mat<T> k(free_cols.size(), t.cols);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(f, free_cols[f]) = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) k(f, piv[r]) = -t(r, free_cols[f]);
  }
  return k;
}

// Solves x * m = b for a row vector x; nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve_left(const Mat<T>& m, const std::vector<T>& b) {
  if (b.size() != m.cols) throw std::invalid_argument("solve_left: length mismatch");
  Mat<T> aug(m.cols, m.rows + 1);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) aug(j, i) = m(i, j);
  for (std::size_t j = 0; j < m.cols; ++j) aug(j, m.rows) = b[j];
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.rows) return std::nullopt;
  std::vector<T> x(m.rows, T(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.rows);
  return x;
}

}  // namespace galg
