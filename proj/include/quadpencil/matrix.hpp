#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadpencil/fields.hpp"

namespace qp {

/// Dense row-major matrix over a field element type E.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  E& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<E> row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
  std::vector<E> col(std::size_t j) const {
    std::vector<E> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<E> a_;
};

template <class Fld>
using MatrixOf = Matrix<typename Fld::Elem>;

template <class Fld>
MatrixOf<Fld> zeros(const Fld& k, std::size_t r, std::size_t c) {
  return MatrixOf<Fld>(r, c, k.zero());
}

template <class Fld>
MatrixOf<Fld> identity(const Fld& k, std::size_t n) {
  auto m = zeros(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

template <class E>
Matrix<E> transpose(const Matrix<E>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix<E>(a.cols(), a.rows(), E());
  Matrix<E> t(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class Fld>
MatrixOf<Fld> mul(const Fld& k, const MatrixOf<Fld>& a, const MatrixOf<Fld>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  auto m = zeros(k, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, l) * b(l, j);
    }
  return m;
}

template <class Fld>
MatrixOf<Fld> add(const Fld& k, const MatrixOf<Fld>& a, const MatrixOf<Fld>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
  auto m = zeros(k, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
  return m;
}

template <class Fld>
MatrixOf<Fld> scale(const Fld& k, const typename Fld::Elem& s, const MatrixOf<Fld>& a) {
  auto m = zeros(k, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = s * a(i, j);
  return m;
}

/// Mᵀ A M.
template <class Fld>
MatrixOf<Fld> congruence(const Fld& k, const MatrixOf<Fld>& a, const MatrixOf<Fld>& m) {
  return mul(k, transpose(m), mul(k, a, m));
}

template <class E>
bool is_symmetric(const Matrix<E>& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

template <class E>
bool is_zero_matrix(const Matrix<E>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

/// Reduced row echelon form with pivot columns.
template <class E>
struct Echelon {
  Matrix<E> R;
  std::vector<std::size_t> pivots;
};

template <class Fld>
Echelon<typename Fld::Elem> rref(const Fld& k, MatrixOf<Fld> a) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    typename Fld::Elem inv = k.one() / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      typename Fld::Elem f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(piv)};
}

template <class Fld>
std::size_t rank(const Fld& k, const MatrixOf<Fld>& a) {
  // row echelon without back substitution
  auto m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    typename Fld::Elem inv = k.one() / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      typename Fld::Elem f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Basis of the right null space, as columns of an n × k matrix; the basis
/// is the standard one attached to the free columns of the RREF.
template <class Fld>
MatrixOf<Fld> kernel(const Fld& k, const MatrixOf<Fld>& a) {
  auto e = rref(k, a);
  std::size_t n = a.cols();
  std::vector<bool> is_piv(n, false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  auto out = zeros(k, n, free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    out(free[t], t) = k.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out(e.pivots[i], t) = -e.R(i, free[t]);
  }
  return out;
}

template <class Fld>
typename Fld::Elem det(const Fld& k, MatrixOf<Fld> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  typename Fld::Elem d = k.one();
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return k.zero();
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m(c, c);
    typename Fld::Elem inv = k.one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      typename Fld::Elem f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class Fld>
MatrixOf<Fld> inverse(const Fld& k, const MatrixOf<Fld>& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto aug = zeros(k, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = k.one();
  }
  auto e = rref(k, aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  auto out = zeros(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.R(i, n + j);
  return out;
}

/// Matrix whose columns are the given vectors.
template <class Fld>
MatrixOf<Fld> from_columns(const Fld& k, std::size_t n, const std::vector<std::vector<typename Fld::Elem>>& cols) {
  auto m = zeros(k, n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

template <class Fld>
MatrixOf<Fld> diagonal_matrix(const Fld& k, const std::vector<typename Fld::Elem>& d) {
  auto m = zeros(k, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// Maps a rational matrix into another field.
template <class Fld>
MatrixOf<Fld> lift(const Fld& k, const Matrix<Rat>& a) {
  auto m = zeros(k, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = k.from_rat(a(i, j));
  return m;
}

using RatMatrix = Matrix<Rat>;

inline RatMatrix rat_matrix(const std::vector<std::vector<Rat>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  RatMatrix m(r, c, Rat(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline RatMatrix rat_diag(const std::vector<Rat>& d) { return diagonal_matrix(RationalField{}, d); }

}  // namespace qp
