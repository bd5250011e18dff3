#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadpencil/pencil.hpp"
#include "quadpencil/squareclass.hpp"

namespace qp {

/// A place of Q: the real place or a prime p.
struct Place {
  bool real = true;
  Int p = 0;

  static Place Real() { return {}; }
  static Place Prime(const Int& p);  // throws unless p is prime
  std::string to_string() const;     // "inf" or "p"
  friend bool operator==(const Place& a, const Place& b) { return a.real == b.real && a.p == b.p; }
};

/// Real first, then primes ascending.
bool place_less(const Place& a, const Place& b);

/// True iff x != 0 is a square in Q_v.
bool is_local_square(const Rat& x, const Place& v);

/// Smallest-magnitude integer representative of x in Q_v^* / Q_v^*2:
/// ±1 at the real place; {1, 3, -3, -1} times {1, 2} at 2; {1, u} times
/// {1, p} at odd p with u the least non-residue.
Int local_square_class(const Rat& x, const Place& v);

/// (a, b)_v by the closed-form rules; a, b nonzero.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// prod_{i<j} (d_i, d_j)_v.
int hasse_invariant(const std::vector<Rat>& d, const Place& v);

struct WittData {
  Place place;
  std::size_t dim = 0;          // dimension of the nondegenerate part
  std::size_t radical_dim = 0;  // dimension of the radical
  SquareClass disc;             // determinant of the nondegenerate part in Q_v^*/Q_v^*2
  int hasse = 1;
  std::optional<std::pair<int, int>> signature;  // real place only
  std::size_t witt_index = 0;
};

/// Witt index of a diagonal nondegenerate form from (dim, disc, hasse).
std::size_t witt_index_from_diagonal(const std::vector<Rat>& d, const Place& v);

/// Invariants and Witt index at v of q modulo its radical.
WittData witt_index_local(const RatMatrix& q, const Place& v);

/// {Real} ∪ {p | 2 * prod d_i}, in place order.
std::vector<Place> checking_places(const std::vector<Rat>& diagonal);

struct GlobalSplitting {
  bool splits = false;
  std::string reason;            // empty when splits
  std::vector<WittData> places;  // the checking set
};

/// Does q split m hyperbolic planes over Q? Decided place by place on the
/// checking set; outside it the form is unimodular and the remaining
/// condition is the global discriminant test when m = dim / 2.
/// Throws std::invalid_argument for degenerate q.
GlobalSplitting splits_m_hyperbolic_global(const RatMatrix& q, std::size_t m);

/// Hasse–Minkowski isotropy test; q must be nonzero.
bool isotropic_over_Q(const RatMatrix& q);

/// Integer polynomial model of a rational quadratic form: primitive
/// coefficients c[i][j] (i <= j) of sum c_ij x_i x_j up to a rational scalar.
struct IntQuadric {
  std::size_t n = 0;
  std::vector<std::vector<Int>> c;  // upper-triangular, c[i][j] for i <= j

  explicit IntQuadric(const RatMatrix& gram);
  Int eval(const std::vector<Int>& x) const;
  Int partial(const std::vector<Int>& x, std::size_t i) const;
};

struct LocalSearchResult {
  bool found = false;              // false = inconclusive up to precision
  Int p;
  int precision = 0;
  std::vector<Int> point;          // residues mod p^precision when found
};

/// Enumerates P^{n-1}(F_p) for a common zero with Jacobian rank 2 mod p and
/// Hensel-lifts it to p^precision. Throws "precision too large" when
/// p^precision exceeds 10^18 and "enumeration too large" beyond 10^7 points.
LocalSearchResult local_point_search_intersection(const Pencil& X, const Int& p, int precision);

/// Exhaustive search for a primitive integer point of F = G = 0 with
/// |x_i| <= height_bound, by increasing height. Real zeros of a semidefinite
/// member lie in its kernel, so the search space is first cut down to the
/// common kernel of such members. Throws "search too large" when the
/// remaining box exceeds 5 * 10^7 vectors.
std::optional<std::vector<Int>> rational_point_search(const Pencil& X, long height_bound);

}  // namespace qp
