#pragma once

#include <utility>
#include <vector>

#include "quadpencil/matrix.hpp"

namespace qp {

/// Linear subspace of k^n. The basis is kept as the rows of a matrix in
/// reduced row echelon form, so equal subspaces have equal bases.
template <class E>
struct Subspace {
  std::size_t ambient = 0;
  Matrix<E> basis;  // dim × ambient

  std::size_t dim() const { return basis.rows(); }
  int projective_dim() const { return static_cast<int>(dim()) - 1; }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient == b.ambient && a.basis == b.basis; }
};

/// Span of the given vectors (each of length n).
template <class Fld>
Subspace<typename Fld::Elem> span(const Fld& k, std::size_t n, const std::vector<std::vector<typename Fld::Elem>>& vecs) {
  auto m = zeros(k, vecs.size(), n);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].size() != n) throw std::invalid_argument("vector length mismatch");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vecs[i][j];
  }
  auto e = rref(k, m);
  auto b = zeros(k, e.pivots.size(), n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = e.R(i, j);
  return {n, std::move(b)};
}

/// Span of the columns of m.
template <class Fld>
Subspace<typename Fld::Elem> column_span(const Fld& k, const MatrixOf<Fld>& m) {
  std::vector<std::vector<typename Fld::Elem>> v;
  for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.col(j));
  return span(k, m.rows(), v);
}

/// Basis vectors as the columns of an n × d matrix.
template <class E>
Matrix<E> basis_columns(const Subspace<E>& s) {
  return transpose(s.basis);
}

template <class Fld>
bool contains(const Fld& k, const Subspace<typename Fld::Elem>& s, const std::vector<typename Fld::Elem>& v) {
  auto vs = std::vector<std::vector<typename Fld::Elem>>{};
  for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(s.basis.row(i));
  vs.push_back(v);
  return span(k, s.ambient, vs).dim() == s.dim();
}

/// Radical of a quadratic form given by its Gram matrix.
template <class Fld>
Subspace<typename Fld::Elem> form_kernel(const Fld& k, const MatrixOf<Fld>& gram) {
  return column_span(k, kernel(k, gram));
}

/// Gram matrix of the restriction to s, in the stored basis of s.
template <class Fld>
MatrixOf<Fld> restrict_form(const Fld& k, const MatrixOf<Fld>& gram, const Subspace<typename Fld::Elem>& s) {
  if (s.ambient != gram.rows()) throw std::invalid_argument("subspace dimension mismatch");
  if (s.dim() == 0) return zeros(k, 0, 0);
  return congruence(k, gram, basis_columns(s));
}

template <class E>
struct Diagonalization {
  std::vector<E> diagonal;
  Matrix<E> change;  // columns are the new basis; changeᵀ · gram · change = diag
};

/// Lagrange congruence diagonalization. Pivots in index order; a zero pivot
/// with a nonzero entry (k, j), j > k (smallest j) is repaired by
/// e_k <- e_k + e_j, or e_k <- e_k - e_j when the former is isotropic.
/// Diagonal input yields the identity change of basis.
template <class Fld>
Diagonalization<typename Fld::Elem> diagonalize(const Fld& k, const MatrixOf<Fld>& gram) {
  if (!is_symmetric(gram)) throw std::invalid_argument("gram matrix is not symmetric");
  std::size_t n = gram.rows();
  auto a = gram;
  auto p = identity(k, n);
  auto add_multiple = [&](std::size_t dst, std::size_t src, const typename Fld::Elem& c) {
    // e_dst <- e_dst + c e_src, applied as a congruence
    for (std::size_t i = 0; i < n; ++i) p(i, dst) += c * p(i, src);
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += c * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += c * a(i, src);
  };
  for (std::size_t r = 0; r < n; ++r) {
    if (is_zero(a(r, r))) {
      std::size_t j = r + 1;
      while (j < n && is_zero(a(r, j))) ++j;
      if (j == n) continue;
      add_multiple(r, j, k.one());
      if (is_zero(a(r, r))) add_multiple(r, j, k.zero() - k.one() - k.one());
    }
    typename Fld::Elem inv = k.one() / a(r, r);
    for (std::size_t j = r + 1; j < n; ++j) {
      if (is_zero(a(r, j))) continue;
      add_multiple(j, r, k.zero() - a(r, j) * inv);
    }
  }
  std::vector<typename Fld::Elem> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(a(i, i));
  return {std::move(d), std::move(p)};
}

template <class Fld>
bool verify_diagonalization(const Fld& k, const MatrixOf<Fld>& gram, const Diagonalization<typename Fld::Elem>& d) {
  return congruence(k, gram, d.change) == diagonal_matrix(k, d.diagonal) && !is_zero(det(k, d.change));
}

/// Orthogonal direct sum.
template <class Fld>
MatrixOf<Fld> direct_sum(const Fld& k, const MatrixOf<Fld>& a, const MatrixOf<Fld>& b) {
  auto m = zeros(k, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// ---- rational forms --------------------------------------------------------

/// (n+, n-) from the signs of an exact diagonalization.
std::pair<int, int> signature(const RatMatrix& gram);

std::size_t rank(const RatMatrix& gram);

Diagonalization<Rat> diagonalize(const RatMatrix& gram);

/// Nonzero diagonal entries of a diagonalization of the nondegenerate part.
std::vector<Rat> nonzero_diagonal(const RatMatrix& gram);

/// Validates a square symmetric matrix; throws std::invalid_argument.
void require_symmetric(const RatMatrix& gram, const char* what = "gram");

/// Hyperbolic form x0x1 + x2x3 + ... in 2m variables (Gram entries 1/2).
RatMatrix hyperbolic_form(std::size_t m);

}  // namespace qp
