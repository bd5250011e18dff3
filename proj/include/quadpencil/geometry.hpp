#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadpencil/fields.hpp"
#include "quadpencil/forms.hpp"
#include "quadpencil/pencil.hpp"

namespace qp {

// ---------------------------------------------------------------------------
// Points and quadrics over an arbitrary field

/// Scales v so that its first nonzero coordinate is 1. Throws on v = 0.
template <class Fld>
std::vector<typename Fld::Elem> canonical_point(const Fld& k, std::vector<typename Fld::Elem> v) {
  std::size_t i = 0;
  while (i < v.size() && is_zero(v[i])) ++i;
  if (i == v.size()) throw std::invalid_argument("zero vector is not a projective point");
  typename Fld::Elem inv = k.one() / v[i];
  for (auto& x : v) x = x * inv;
  return v;
}

template <class Fld>
std::vector<typename Fld::Elem> apply(const Fld& k, const MatrixOf<Fld>& a, const std::vector<typename Fld::Elem>& v) {
  std::vector<typename Fld::Elem> out(a.rows(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(v[j])) out[i] += a(i, j) * v[j];
  return out;
}

template <class Fld>
typename Fld::Elem bilinear(const Fld& k, const MatrixOf<Fld>& a, const std::vector<typename Fld::Elem>& x,
                            const std::vector<typename Fld::Elem>& y) {
  auto ay = apply(k, a, y);
  typename Fld::Elem s = k.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) s += x[i] * ay[i];
  return s;
}

template <class Fld>
typename Fld::Elem quad_value(const Fld& k, const MatrixOf<Fld>& a, const std::vector<typename Fld::Elem>& x) {
  return bilinear(k, a, x, x);
}

template <class Fld>
bool proportional(const Fld& k, const MatrixOf<Fld>& a, const MatrixOf<Fld>& b) {
  auto m = zeros(k, 2, a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(0, i * a.cols() + j) = a(i, j);
      m(1, i * a.cols() + j) = b(i, j);
    }
  return rank(k, m) < 2;
}

/// T_{X,P} = {x : P^T F x = 0 = P^T G x} for a smooth point P of X = {F = G = 0}.
/// Throws "point not on X" or "singular point" (Jacobian rank < 2).
template <class Fld>
Subspace<typename Fld::Elem> tangent_space(const Fld& k, const MatrixOf<Fld>& F, const MatrixOf<Fld>& G,
                                           const std::vector<typename Fld::Elem>& P) {
  if (!is_zero(quad_value(k, F, P)) || !is_zero(quad_value(k, G, P))) throw std::invalid_argument("point not on X");
  auto fp = apply(k, F, P), gp = apply(k, G, P);
  auto J = zeros(k, 2, P.size());
  for (std::size_t j = 0; j < P.size(); ++j) {
    J(0, j) = fp[j];
    J(1, j) = gp[j];
  }
  if (rank(k, J) < 2) throw std::invalid_argument("singular point");
  return column_span(k, kernel(k, J));
}

template <class Fld>
bool is_smooth_point(const Fld& k, const MatrixOf<Fld>& F, const MatrixOf<Fld>& G, const std::vector<typename Fld::Elem>& P) {
  auto fp = apply(k, F, P), gp = apply(k, G, P);
  auto J = zeros(k, 2, P.size());
  for (std::size_t j = 0; j < P.size(); ++j) {
    J(0, j) = fp[j];
    J(1, j) = gp[j];
  }
  return rank(k, J) == 2;
}

/// The quadric A B^{-1} A attached to two distinct quadrics, B nondegenerate.
template <class Fld>
MatrixOf<Fld> dual_quadric(const Fld& k, const MatrixOf<Fld>& A, const MatrixOf<Fld>& B) {
  if (A.rows() != B.rows() || A.rows() != A.cols() || B.rows() != B.cols()) throw std::invalid_argument("dimension mismatch");
  if (A.rows() < 2) throw std::invalid_argument("need at least 2 variables");
  if (!is_symmetric(A) || !is_symmetric(B)) throw std::invalid_argument("forms must be symmetric");
  if (rank(k, B) < B.rows()) throw std::invalid_argument("B is degenerate");
  if (proportional(k, A, B)) throw std::invalid_argument("A and B must be distinct quadrics");
  return mul(k, A, mul(k, inverse(k, B), A));
}

/// Rank of (λF + μG) restricted to T_{X,P}.
template <class Fld>
std::size_t tangent_restriction_rank(const Fld& k, const MatrixOf<Fld>& F, const MatrixOf<Fld>& G,
                                     const std::vector<typename Fld::Elem>& P, const typename Fld::Elem& lambda,
                                     const typename Fld::Elem& mu) {
  auto T = tangent_space(k, F, G, P);
  auto member = add(k, scale(k, lambda, F), scale(k, mu, G));
  return rank(k, restrict_form(k, member, T));
}

template <class E>
struct ConeSection {
  std::vector<E> vertex;
  Subspace<E> tangent;    // T_{X,P}
  Subspace<E> complement; // {x in T : x_c = 0}, c the pivot column of P
  Matrix<E> base_F, base_G;  // the forms of Y on the complement
  std::size_t rank_F = 0, rank_G = 0;
  std::size_t generic_rank = 0;  // max rank over the members of the base pencil
};

/// X ∩ T_{X,P} as a cone with vertex P over Y in P^{n-4}. Requires some
/// member of the base pencil to be nondegenerate; otherwise throws
/// "non-generic point".
template <class Fld>
ConeSection<typename Fld::Elem> cone_section(const Fld& k, const MatrixOf<Fld>& F, const MatrixOf<Fld>& G,
                                             const std::vector<typename Fld::Elem>& P0) {
  auto P = canonical_point(k, P0);
  ConeSection<typename Fld::Elem> c;
  c.vertex = P;
  c.tangent = tangent_space(k, F, G, P);
  std::size_t pivot = 0;
  while (is_zero(P[pivot])) ++pivot;
  // coordinates of T-vectors: the functional x -> x_pivot restricted to T
  auto phi = zeros(k, 1, c.tangent.dim());
  for (std::size_t r = 0; r < c.tangent.dim(); ++r) phi(0, r) = c.tangent.basis(r, pivot);
  auto K = kernel(k, phi);  // dim(T) x (dim(T) - 1)
  auto comp = mul(k, basis_columns(c.tangent), K);
  c.complement = column_span(k, comp);
  c.base_F = restrict_form(k, F, c.complement);
  c.base_G = restrict_form(k, G, c.complement);
  c.rank_F = rank(k, c.base_F);
  c.rank_G = rank(k, c.base_G);
  std::size_t m = c.base_F.rows();
  // det(F_Y + t G_Y) has degree <= m; m + 2 sample members detect a nonzero one
  c.generic_rank = std::max(c.rank_F, c.rank_G);
  for (long t = 1; t <= static_cast<long>(m) + 1 && c.generic_rank < m; ++t) {
    auto member = add(k, c.base_F, scale(k, k.from_rat(Rat(t)), c.base_G));
    c.generic_rank = std::max(c.generic_rank, rank(k, member));
  }
  if (c.generic_rank < m) throw std::invalid_argument("non-generic point");
  return c;
}

struct QuadrilateralVerdict {
  bool gauche = false;
  std::string reason;  // set when !gauche
};

/// X ∩ span(L1, L2) for disjoint projective lines L1, L2 (2-dimensional
/// subspaces). Gauche iff X meets each line in exactly two distinct points;
/// those four points are then not coplanar, since the 4x4 determinant of
/// their coordinates in the basis (L1, L2) of Π is the product of the two
/// root-difference determinants.
template <class Fld>
QuadrilateralVerdict quadrilateral_check(const Fld& k, const MatrixOf<Fld>& F, const MatrixOf<Fld>& G,
                                         const Subspace<typename Fld::Elem>& L1, const Subspace<typename Fld::Elem>& L2) {
  if (L1.dim() != 2 || L2.dim() != 2) throw std::invalid_argument("L1 and L2 must be projective lines");
  std::vector<std::vector<typename Fld::Elem>> all;
  for (auto* L : {&L1, &L2})
    for (std::size_t r = 0; r < 2; ++r) all.push_back(L->basis.row(r));
  if (span(k, L1.ambient, all).dim() != 4) throw std::invalid_argument("lines intersect");
  QuadrilateralVerdict v;
  for (auto* L : {&L1, &L2}) {
    auto f = restrict_form(k, F, *L), g = restrict_form(k, G, *L);
    bool fz = is_zero_matrix(f), gz = is_zero_matrix(g);
    if (fz && gz) {
      v.reason = "line contained in X";
      return v;
    }
    if (!fz && !gz && !proportional(k, f, g)) {
      v.reason = "fewer than two intersection points";
      return v;
    }
    auto b = fz ? g : f;
    // b(s, t) = b00 s^2 + 2 b01 s t + b11 t^2: distinct roots iff det(b) != 0
    typename Fld::Elem disc = b(0, 1) * b(0, 1) - b(0, 0) * b(1, 1);
    if (is_zero(disc)) {
      v.reason = "coincident points";
      return v;
    }
  }
  v.gauche = true;
  return v;
}

// ---------------------------------------------------------------------------
// Finite fields

using FqMatrix = MatrixOf<GaloisField>;
using FqPoint = std::vector<GFElem>;

/// Reduction of a rational Gram matrix into F_q (denominators prime to p).
FqMatrix reduce(const GaloisField& k, const RatMatrix& m);

/// Image of a matrix over a subfield F_p (codes < p) in F_q.
FqMatrix embed(const GaloisField& big, const FqMatrix& m);

/// All points of {forms = 0} in P^{n-1}(F_q), canonical and in code order.
/// Throws "enumeration too large" when q^n exceeds 10^9.
std::vector<FqPoint> enumerate_points_Fq(const GaloisField& k, const std::vector<FqMatrix>& forms);

/// Size of the Frobenius orbit of a point over F_{p^k}.
std::size_t frobenius_orbit_size(const GaloisField& k, const FqPoint& P);

/// Witt index over F_q of q modulo its radical, by the F_q classification:
/// r = rank, disc d; index = floor(r/2) unless r is even and (-1)^{r/2} d is
/// a non-square, in which case r/2 - 1.
std::size_t witt_index_Fq(const GaloisField& k, const FqMatrix& q);

/// A totally isotropic subspace of projective dimension m meeting the radical
/// only in 0, or none; exhaustive depth-first search over isotropic points.
std::optional<Subspace<GFElem>> isotropic_subspace_Fq(const GaloisField& k, const FqMatrix& q, std::size_t m);

// ---------------------------------------------------------------------------
// Rational convenience overloads

Subspace<Rat> tangent_space(const Pencil& X, const std::vector<Rat>& P);
RatMatrix dual_quadric(const RatMatrix& A, const RatMatrix& B);
std::size_t tangent_restriction_rank(const Pencil& X, const std::vector<Rat>& P, const Rat& lambda, const Rat& mu);
ConeSection<Rat> cone_section(const Pencil& X, const std::vector<Rat>& P);

}  // namespace qp
