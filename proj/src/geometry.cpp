#include "quadpencil/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace qp {

namespace {

RationalField Q;

}  // namespace

FqMatrix reduce(const GaloisField& k, const RatMatrix& m) {
  FqMatrix out(m.rows(), m.cols(), k.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = k.from_rat(m(i, j));
  return out;
}

FqMatrix embed(const GaloisField& big, const FqMatrix& m) {
  FqMatrix out(m.rows(), m.cols(), big.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).code() >= big.characteristic()) throw std::invalid_argument("entry is not in the prime field");
      out(i, j) = big.element(m(i, j).code());
    }
  return out;
}

std::vector<FqPoint> enumerate_points_Fq(const GaloisField& k, const std::vector<FqMatrix>& forms) {
  if (forms.empty()) throw std::invalid_argument("no forms");
  std::size_t n = forms.front().rows();
  for (auto& f : forms)
    if (f.rows() != n || f.cols() != n) throw std::invalid_argument("dimension mismatch");
  double cost = std::pow(static_cast<double>(k.size()), static_cast<double>(n));
  if (cost > 1e9) throw std::invalid_argument("enumeration too large");
  std::uint32_t q = k.size();
  std::vector<FqPoint> out;
  FqPoint x(n, k.zero());
  // canonical representatives: leading coordinate 1, earlier coordinates 0
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::uint32_t> code(n - lead - 1, 0);
    for (;;) {
      for (std::size_t i = 0; i < n; ++i)
        x[i] = i < lead ? k.zero() : i == lead ? k.one() : k.element(code[i - lead - 1]);
      bool on = true;
      for (auto& f : forms)
        if (!is_zero(quad_value(k, f, x))) {
          on = false;
          break;
        }
      if (on) out.push_back(x);
      std::size_t t = 0;
      while (t < code.size() && ++code[t] == q) code[t++] = 0;
      if (t == code.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t frobenius_orbit_size(const GaloisField& k, const FqPoint& P0) {
  auto P = canonical_point(k, P0);
  auto Q0 = P;
  for (std::size_t s = 1; s <= k.degree(); ++s) {
    for (auto& x : P) x = x.pow(k.characteristic());
    if (P == Q0) return s;
  }
  throw std::logic_error("Frobenius orbit longer than the field degree");
}

std::size_t witt_index_Fq(const GaloisField& k, const FqMatrix& q) {
  if (!is_symmetric(q)) throw std::invalid_argument("form must be symmetric");
  auto d = diagonalize(k, q);
  GFElem disc = k.one();
  std::size_t r = 0;
  for (auto& x : d.diagonal)
    if (!is_zero(x)) {
      disc *= x;
      ++r;
    }
  if (r % 2 == 1) return r / 2;
  if (r == 0) return 0;
  GFElem signed_disc = (r / 2) % 2 == 1 ? -disc : disc;
  return k.is_square(signed_disc) ? r / 2 : r / 2 - 1;
}

namespace {

// Depth-first search over isotropic points of a nondegenerate diagonal form,
// each level keeping only candidates orthogonal to everything chosen so far.
struct SubspaceSearch {
  const GaloisField& k;
  std::vector<GFElem> diag;
  std::size_t target;
  std::vector<FqPoint> chosen;

  GFElem dot(const FqPoint& x, const FqPoint& y) const {
    GFElem s = k.zero();
    for (std::size_t i = 0; i < diag.size(); ++i) s += diag[i] * x[i] * y[i];
    return s;
  }

  bool dfs(const std::vector<const FqPoint*>& cand) {
    if (chosen.size() == target) return true;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const FqPoint& v = *cand[i];
      std::vector<FqPoint> all = chosen;
      all.push_back(v);
      if (span(k, v.size(), all).dim() != all.size()) continue;
      std::vector<const FqPoint*> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (is_zero(dot(v, *cand[j]))) next.push_back(cand[j]);
      if (next.size() + chosen.size() + 1 < target) continue;
      chosen.push_back(v);
      if (dfs(next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Subspace<GFElem>> isotropic_subspace_Fq(const GaloisField& k, const FqMatrix& q, std::size_t m) {
  if (!is_symmetric(q)) throw std::invalid_argument("form must be symmetric");
  // V = U ⊕ rad with q|U diagonal and nondegenerate; a subspace avoiding the
  // radical projects injectively to U with the same values of q, so the
  // search runs in U.
  auto d = diagonalize(k, q);
  std::vector<std::size_t> keep;
  SubspaceSearch s{k, {}, m + 1, {}};
  for (std::size_t i = 0; i < d.diagonal.size(); ++i)
    if (!is_zero(d.diagonal[i])) {
      keep.push_back(i);
      s.diag.push_back(d.diagonal[i]);
    }
  if (s.target > keep.size()) return std::nullopt;
  FqMatrix D(keep.size(), keep.size(), k.zero());
  for (std::size_t i = 0; i < keep.size(); ++i) D(i, i) = s.diag[i];
  auto pts = enumerate_points_Fq(k, {D});
  std::vector<const FqPoint*> cand;
  for (auto& P : pts) cand.push_back(&P);
  if (!s.dfs(cand)) return std::nullopt;
  std::vector<FqPoint> lifted;
  for (auto& x : s.chosen) {
    FqPoint v(q.rows(), k.zero());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t r = 0; r < q.rows(); ++r) v[r] += d.change(r, keep[i]) * x[i];
    lifted.push_back(v);
  }
  return span(k, q.rows(), lifted);
}

Subspace<Rat> tangent_space(const Pencil& X, const std::vector<Rat>& P) { return tangent_space(Q, X.F(), X.G(), P); }

RatMatrix dual_quadric(const RatMatrix& A, const RatMatrix& B) { return dual_quadric(Q, A, B); }

std::size_t tangent_restriction_rank(const Pencil& X, const std::vector<Rat>& P, const Rat& lambda, const Rat& mu) {
  return tangent_restriction_rank(Q, X.F(), X.G(), P, lambda, mu);
}

ConeSection<Rat> cone_section(const Pencil& X, const std::vector<Rat>& P) { return cone_section(Q, X.F(), X.G(), P); }

}  // namespace qp
