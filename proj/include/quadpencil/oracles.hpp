#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadpencil/arith.hpp"
#include "quadpencil/geometry.hpp"

// Brute-force oracles used by the test harness and the verify suites. None of
// these share code with the closed-form decision path they check.
namespace qp::oracle {

/// A primitive vector x mod p^k with q(x) ≡ 0 mod p^k and a coordinate i
/// whose partial derivative has valuation e with k >= 2e + 1, so that x lifts
/// to a p-adic zero by Hensel's lemma.
struct LiftableZero {
  std::vector<std::int64_t> x;
  std::size_t coordinate = 0;
};

/// Search modulus exponent: 3 for odd p, 5 for p = 2.
int search_precision(long p);

/// Exhaustive digit-by-digit search for a liftable zero of the diagonal form
/// <d_1, ..., d_n>, each d_i a nonzero squarefree integer.
std::optional<LiftableZero> liftable_zero(const std::vector<Int>& d, long p);

/// Isotropy of <d_1, ..., d_n> over Q_p, d_i nonzero rationals.
bool isotropic_bruteforce(const std::vector<Rat>& d, long p);

/// Witt index over Q_p by repeatedly splitting off the hyperbolic plane
/// spanned by a liftable zero x and e_i and recursing on its orthogonal.
std::size_t witt_index_bruteforce(const std::vector<Rat>& d, long p);

/// (a, b)_p as isotropy of <1, -a, -b>.
int hilbert_bruteforce(const Rat& a, const Rat& b, long p);

/// Tangency of the hyperplane a^⊥ to the smooth quadric Q_B, decided by
/// looking for a point R of Q_B (given as QB) whose tangent hyperplane is a^⊥.
bool hyperplane_tangent(const GaloisField& k, const FqMatrix& B, const std::vector<FqPoint>& QB, const FqPoint& a);

}  // namespace qp::oracle
