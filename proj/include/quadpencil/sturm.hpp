#pragma once

#include <vector>

#include "quadpencil/qpoly.hpp"

namespace qp {

/// Either the exact root [lo, lo] (exact == true) or an open interval
/// (lo, hi) containing exactly one root.
struct RootInterval {
  Rat lo, hi;
  bool exact = false;
};

std::vector<QPoly> sturm_sequence(const QPoly& f);

/// Number of real roots of squarefree f in (a, b].
std::size_t count_roots(const std::vector<QPoly>& sturm, const Rat& a, const Rat& b);

/// Isolating intervals of the real roots of a squarefree f, ascending.
/// Throws std::invalid_argument("take squarefree part first").
std::vector<RootInterval> isolate_real_roots(const QPoly& f);

/// Halves an open interval, keeping the half that contains the root.
RootInterval refine(const QPoly& f, const RootInterval& iv);

/// Separates every pair of neighbouring intervals by refinement so that
/// hi_i < lo_{i+1}; returns the refined list.
std::vector<RootInterval> separate(const QPoly& f, std::vector<RootInterval> ivs);

}  // namespace qp
