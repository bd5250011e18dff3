#pragma once

#include <utility>
#include <vector>

#include "quadpencil/qpoly.hpp"

namespace qp {

/// f = constant * prod factor^multiplicity, factors monic and irreducible
/// over Q, ordered by degree then coefficients.
struct Factorization {
  Rat constant;
  std::vector<std::pair<QPoly, unsigned>> factors;

  QPoly expand() const;
};

/// Exact factorization over Q: squarefree decomposition, then Zassenhaus
/// (Cantor-Zassenhaus mod p, linear Hensel lifting, subset recombination).
/// Throws std::invalid_argument("zero polynomial has no factorization").
Factorization factor_over_Q(const QPoly& f);

bool is_irreducible_over_Q(const QPoly& f);

/// Total order used to sort factors: degree first, then coefficients from
/// the constant term upward.
bool poly_less(const QPoly& a, const QPoly& b);

}  // namespace qp
