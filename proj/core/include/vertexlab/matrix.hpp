#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vertexlab/rational.hpp"
#include "vertexlab/scalar.hpp"

namespace vertexlab::exact {

inline bool is_zero_value(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero_value(const Integer& v) { return sgn(v) == 0; }
inline bool is_zero_value(const ExactScalar& v) { return v.is_zero(); }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  explicit Matrix(std::size_t n) : Matrix(n, n) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const T& v : data_)
      if (!is_zero_value(v)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& v : data_)
      if (!is_zero_value(v)) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (T& v : a.data_) v = -v;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_value(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (is_zero_value(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& m = (*this)(i, j);
        if (is_zero_value(m) || is_zero_value(v[j])) continue;
        out[i] += m * v[j];
      }
    return out;
  }

  // Row vector times matrix.
  std::vector<T> apply_left(const std::vector<T>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
    std::vector<T> out(cols_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (is_zero_value(v[i])) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& m = (*this)(i, j);
        if (!is_zero_value(m)) out[j] += v[i] * m;
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero_value(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!is_zero_value(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// Gaussian elimination; T must be a field.
template <class T>
T det_field(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero_value(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero_value(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c + 1; j < n; ++j)
        if (!is_zero_value(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Fraction-free elimination over an integral domain. `exact_div(a, b)` must
// return a / b and throw if the division leaves a remainder.
template <class T, class Div>
T det_bareiss(Matrix<T> m, Div exact_div) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_value(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero_value(m(p, k))) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev);
      }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

inline Integer det_integer(const Matrix<Integer>& m) {
  return det_bareiss(m, [](const Integer& a, const Integer& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::logic_error("inexact division in elimination");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  });
}

template <class T>
void require_antisymmetric(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("pfaffian of a non-square matrix");
  if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian of an odd-dimensional matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!is_zero_value(m(i, j) + m(j, i))) throw std::invalid_argument("pfaffian of a non-antisymmetric matrix");
}

namespace detail {
template <class T>
T pfaffian_expand(const Matrix<T>& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1);
  const std::size_t first = idx.front();
  T total(0);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const T& a = m(first, idx[k]);
    if (is_zero_value(a)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t l = 1; l < idx.size(); ++l)
      if (l != k) rest.push_back(idx[l]);
    T sub = pfaffian_expand(m, rest);
    if (k % 2 == 1) total += a * sub;
    else total -= a * sub;
  }
  return total;
}
}  // namespace detail

// Expansion along the first row; works over any commutative ring.
template <class T>
T pfaffian_expansion(const Matrix<T>& m) {
  require_antisymmetric(m);
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  return detail::pfaffian_expand(m, idx);
}

// Skew elimination with pivoting; T must be a field.
template <class T>
T pfaffian_elimination(Matrix<T> a) {
  require_antisymmetric(a);
  const std::size_t n = a.rows();
  T pf(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && is_zero_value(a(k, p))) ++p;
    if (p == n) return T(0);
    if (p != k + 1) {
      // Swap index k+1 with p in rows and columns.
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(p, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, p));
      pf = -pf;
    }
    const T piv = a(k, k + 1);
    pf *= piv;
    const T inv = T(1) / piv;
    // Eliminate couplings of k and k+1 with the remaining indices.
    for (std::size_t i = k + 2; i < n; ++i) {
      const T ci = a(k, i) * inv;
      const T di = a(k + 1, i) * inv;
      if (is_zero_value(ci) && is_zero_value(di)) continue;
      for (std::size_t j = k + 2; j < n; ++j) {
        T delta = di * a(k, j) - ci * a(k + 1, j);
        if (!is_zero_value(delta)) a(i, j) += delta;
      }
    }
  }
  return pf;
}

template <class T>
T pfaffian(const Matrix<T>& m) {
  if (m.rows() <= 8) return pfaffian_expansion(m);
  return pfaffian_elimination(m);
}

// Reduced row echelon form in place over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero_value(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const T inv = T(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero_value(m(row, j))) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero_value(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero_value(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!is_zero_value(m(r, free))) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

using ScalarMatrix = Matrix<ExactScalar>;
using RationalMatrix = Matrix<Rational>;
using ScalarVector = std::vector<ExactScalar>;

// If every entry is a rational multiple of one unit in {1, i, r, i r}, writes
// the rational coefficients to `out`, the unit to `unit`, and returns true.
bool split_common_unit(const ScalarMatrix& m, RationalMatrix& out, ExactScalar& unit);

ExactScalar det(const ScalarMatrix& m);
Rational det(const RationalMatrix& m);
std::vector<ScalarVector> kernel_scalar(const ScalarMatrix& m);
ScalarMatrix inverse_scalar(const ScalarMatrix& m);

RationalMatrix to_rational(const ScalarMatrix& m);
ScalarMatrix to_scalar(const RationalMatrix& m);

bool vectors_equal(const ScalarVector& a, const ScalarVector& b);
bool is_zero_vector(const ScalarVector& v);
ScalarVector scale(const ScalarVector& v, const ExactScalar& s);
ScalarVector add(const ScalarVector& a, const ScalarVector& b);
ScalarVector sub(const ScalarVector& a, const ScalarVector& b);
ExactScalar dot(const ScalarVector& a, const ScalarVector& b);
// True if a = c b for some scalar c, with c written to `ratio`.
bool proportional(const ScalarVector& a, const ScalarVector& b, ExactScalar* ratio = nullptr);

}  // namespace vertexlab::exact
