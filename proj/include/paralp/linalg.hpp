#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "paralp/scalar.hpp"

namespace paralp {

template <class T>
using Vec = std::vector<T>;

/// Dense row-major matrix. Sizes here are desk-scale (n <= ~60), so no
/// sparsity and no factorization caching in exact mode.
template <class T>
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    data.reserve(rows * cols);
    for (const auto& row : init) {
      if (row.size() != cols)
        throw Error(Error::Code::dimension_mismatch, "ragged matrix literal");
      data.insert(data.end(), row.begin(), row.end());
    }
  }

  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  Vec<T> row(std::size_t i) const {
    return Vec<T>(data.begin() + i * cols, data.begin() + (i + 1) * cols);
  }
  void append_row(const Vec<T>& r) {
    if (rows == 0 && cols == 0) cols = r.size();
    if (r.size() != cols)
      throw Error(Error::Code::dimension_mismatch, "append_row size mismatch");
    data.insert(data.end(), r.begin(), r.end());
    ++rows;
  }
  Vec<T> col(std::size_t j) const {
    Vec<T> c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }
  bool operator==(const Mat&) const = default;
};

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size())
    throw Error(Error::Code::dimension_mismatch, "dot size mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<T> matvec(const Mat<T>& A, const Vec<T>& x) {
  if (A.cols != x.size())
    throw Error(Error::Code::dimension_mismatch, "matvec size mismatch");
  Vec<T> y(A.rows, T(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
  return y;
}

/// y = A^T w.
template <class T>
Vec<T> tmatvec(const Mat<T>& A, const Vec<T>& w) {
  if (A.rows != w.size())
    throw Error(Error::Code::dimension_mismatch, "tmatvec size mismatch");
  Vec<T> y(A.cols, T(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) y[j] += A(i, j) * w[i];
  return y;
}

template <class T>
Vec<T> vec_sub(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size())
    throw Error(Error::Code::dimension_mismatch, "vec_sub size mismatch");
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T>
Vec<T> vec_add(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size())
    throw Error(Error::Code::dimension_mismatch, "vec_add size mismatch");
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
Vec<T> vec_scale(const T& s, const Vec<T>& a) {
  Vec<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

template <class T>
bool is_zero_vec(const Vec<T>& a) {
  for (const auto& x : a)
    if (!arith<T>::is_zero(x)) return false;
  return true;
}

namespace detail {
// Pivot threshold for float elimination; unrelated to the solver tolerances.
inline bool elim_nonzero(const Rational& x) { return x != 0; }
inline bool elim_nonzero(double x) { return std::fabs(x) > 1e-10; }
}  // namespace detail

/// Solves the square system Mx = rhs by Gaussian elimination with pivoting.
/// Returns nullopt when M is singular.
template <class T>
std::optional<Vec<T>> solve_square(Mat<T> M, Vec<T> rhs) {
  const std::size_t n = M.rows;
  if (M.cols != n || rhs.size() != n)
    throw Error(Error::Code::dimension_mismatch, "solve_square shape");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    if constexpr (arith<T>::exact) {
      for (std::size_t i = k; i < n; ++i)
        if (M(i, k) != 0) { piv = i; break; }
    } else {
      T best(0);
      for (std::size_t i = k; i < n; ++i)
        if (arith<T>::abs(M(i, k)) > best) { best = arith<T>::abs(M(i, k)); piv = i; }
      if (piv < n && !detail::elim_nonzero(M(piv, k))) piv = n;
    }
    if (piv == n) return std::nullopt;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(piv, j));
      std::swap(rhs[k], rhs[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M(i, k) == T(0)) continue;
      T f = M(i, k) / M(k, k);
      for (std::size_t j = k; j < n; ++j) M(i, j) -= f * M(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  Vec<T> x(n, T(0));
  for (std::size_t k = n; k-- > 0;) {
    T s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= M(k, j) * x[j];
    x[k] = s / M(k, k);
  }
  return x;
}

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving nonzero row (in order).
template <class T>
std::vector<std::size_t> rref(Mat<T>& M) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < M.cols && lead_row < M.rows; ++col) {
    std::size_t piv = M.rows;
    if constexpr (arith<T>::exact) {
      for (std::size_t i = lead_row; i < M.rows; ++i)
        if (M(i, col) != 0) { piv = i; break; }
    } else {
      double best = 0;
      for (std::size_t i = lead_row; i < M.rows; ++i)
        if (std::fabs(static_cast<double>(M(i, col))) > best) {
          best = std::fabs(static_cast<double>(M(i, col)));
          piv = i;
        }
      if (piv < M.rows && !detail::elim_nonzero(M(piv, col))) piv = M.rows;
    }
    if (piv == M.rows) continue;
    if (piv != lead_row)
      for (std::size_t j = 0; j < M.cols; ++j) std::swap(M(lead_row, j), M(piv, j));
    T inv = T(1) / M(lead_row, col);
    for (std::size_t j = 0; j < M.cols; ++j) M(lead_row, j) *= inv;
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == lead_row) continue;
      T f = M(i, col);
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < M.cols; ++j) M(i, j) -= f * M(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

template <class T>
std::size_t matrix_rank(Mat<T> M) {
  return rref(M).size();
}

/// Basis of the null space {x : Mx = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> null_space(Mat<T> M) {
  const std::size_t n = M.cols;
  std::vector<std::size_t> pivots = rref(M);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec<T> v(n, T(0));
    v[free_col] = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -M(k, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Gram-Schmidt without normalization; inputs must be independent.
template <class T>
std::vector<Vec<T>> orthogonalize(std::vector<Vec<T>> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      T coef = dot(rows[i], rows[k]) / dot(rows[k], rows[k]);
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= coef * rows[k][j];
    }
    if (is_zero_vec(rows[i]))
      throw Error(Error::Code::rank_deficient, "orthogonalize: dependent input row");
  }
  return rows;
}

/// Canonical scaling: exact mode clears denominators, divides by the integer
/// content and makes the leading nonzero positive; float mode normalizes to
/// unit length with positive leading entry.
inline Vec<Rational> canonicalize(Vec<Rational> v) {
  using boost::multiprecision::mpz_int;
  mpz_int scale = 1;
  for (const auto& x : v) scale = lcm(scale, denominator(x));
  mpz_int content = 0;
  for (auto& x : v) {
    x *= Rational(scale);
    content = gcd(content, numerator(x));
  }
  if (content == 0) return v;
  for (auto& x : v) x /= Rational(content);
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

inline Vec<double> canonicalize(Vec<double> v) {
  double norm = std::sqrt(dot(v, v));
  if (norm == 0) return v;
  for (auto& x : v) x /= norm;
  for (double x : v) {
    if (std::fabs(x) <= 1e-12) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace paralp
