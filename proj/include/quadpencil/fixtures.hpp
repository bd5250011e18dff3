#pragma once

#include <string>
#include <vector>

#include "quadpencil/pencil.hpp"

namespace qp::fixtures {

/// Diagonal pencil F = diag(0, 0, a2..a7), G = diag(b0..b7): the member at
/// t = 0 has rank 6 and det(F + tG) = b0 b1 t^2 prod (a_i + b_i t).
Pencil diagonal_rank6(const std::vector<Rat>& a2_7, const std::vector<Rat>& b0_7);

/// The instance with a_i = 1 and b = (1, 1, 2, 3, 4, 5, 6, 7).
Pencil diagonal_rank6_standard();

/// F = x0x1 + x2x3 + x4x5 + x6x7, G = sum alpha_i x_{2i} x_{2i+1}.
Pencil four_rank6_normal_form(const std::vector<Rat>& alphas = {1, 2, 3, 4});

/// Two copies of [[1, t], [t, -1]] plus diag(1 + 2t, 1 + 3t, 1 + 5t, 1 + 7t):
/// rank-6 members at t = ±i, i.e. one conjugate pair over Q(i).
Pencil conjugate_rank6_pair();

/// Two copies of a 3x3 pencil whose determinant is an irreducible cubic,
/// plus diag(1 + 2t, 1 + 3t).
Pencil three_rank6_cubic();

/// F = I, G = diag(1, ..., 8).
Pencil regular_diagonal();

/// F = I, G = diag(1, 1, 1, 2, 3, 4, 5, 6): rank 5 at t = -1.
Pencil rank_at_most5();

/// F and G share a kernel vector.
Pencil degenerate();

struct Named {
  std::string name;
  Pencil pencil;
  PencilTag expected;
};

/// The taxonomy fixture set, one pencil per tag.
std::vector<Named> taxonomy();

}  // namespace qp::fixtures
