#pragma once

#include <string>

#include "quadpencil/arith.hpp"
#include "quadpencil/fields.hpp"

namespace qp {

/// A class of K^* / K^*2 for K = Q or K = Q(sqrt d), d squarefree.
///
/// When the class contains a rational number it is stored as a squarefree
/// integer r; over Q(sqrt d) the pair {r, r*d} is one class and the
/// representative with smaller absolute value (then positive) is kept.
/// Otherwise the class is stored as u + v sqrt d with u, v coprime integers
/// whose common scaling carries no square factor; such representatives are
/// not canonical and should be compared with same_square_class().
struct SquareClass {
  Int d = 0;              // 0 for Q
  bool rational = true;
  Int r = 1;              // when rational
  Rat u = 0, v = 0;       // when !rational

  bool is_trivial() const { return rational && r == 1; }
  std::string to_string() const;
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.d == b.d && a.rational == b.rational && a.r == b.r && a.u == b.u && a.v == b.v;
  }
};

SquareClass square_class(const Rat& x);

/// x in Q(sqrt d) given as u + v sqrt d; d squarefree, not 0 or 1.
SquareClass square_class_quadratic(const Rat& u, const Rat& v, const Int& d);

/// Number-field element of degree 1 or 2. Throws
/// std::invalid_argument("unsupported residue field degree") above 2.
SquareClass square_class(const NFElem& x);

/// True iff u + v sqrt d is a square in Q(sqrt d); d is not a rational square.
bool is_square_in_quadratic_field(const Rat& u, const Rat& v, const Rat& d);

/// Square test in a number field of degree <= 2.
bool is_square(const NFElem& x);

/// Writes x in a quadratic field as u + v sqrt d with d squarefree.
struct QuadraticCoords {
  Rat u, v;
  Int d;
};
QuadraticCoords quadratic_coords(const NFElem& x);

bool same_square_class(const SquareClass& a, const SquareClass& b);

}  // namespace qp
