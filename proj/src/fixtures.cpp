#include "quadpencil/fixtures.hpp"

#include <stdexcept>

namespace qp::fixtures {

namespace {

const RationalField kQ;

RatMatrix blocks(const std::vector<RatMatrix>& bs) {
  RatMatrix m(0, 0, Rat(0));
  for (auto& b : bs) m = direct_sum(kQ, m, b);
  return m;
}

}  // namespace

Pencil diagonal_rank6(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != 6 || b.size() != 8) throw std::invalid_argument("need a2..a7 and b0..b7");
  std::vector<Rat> f{0, 0};
  f.insert(f.end(), a.begin(), a.end());
  return Pencil(rat_diag(f), rat_diag(b));
}

Pencil diagonal_rank6_standard() { return diagonal_rank6({1, 1, 1, 1, 1, 1}, {1, 1, 2, 3, 4, 5, 6, 7}); }

Pencil four_rank6_normal_form(const std::vector<Rat>& alphas) {
  if (alphas.size() != 4) throw std::invalid_argument("need four alphas");
  RatMatrix F = hyperbolic_form(4), G(8, 8, Rat(0));
  for (std::size_t i = 0; i < 4; ++i) G(2 * i, 2 * i + 1) = G(2 * i + 1, 2 * i) = alphas[i] / 2;
  return Pencil(F, G);
}

Pencil conjugate_rank6_pair() {
  RatMatrix f2 = rat_matrix({{1, 0}, {0, -1}}), g2 = rat_matrix({{0, 1}, {1, 0}});
  return Pencil(blocks({f2, f2, rat_diag({1, 1, 1, 1})}), blocks({g2, g2, rat_diag({2, 3, 5, 7})}));
}

Pencil three_rank6_cubic() {
  // det(F3 + t I) = -(t^3 + t^2 - 2t - 1) up to sign, irreducible over Q
  RatMatrix f3 = rat_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  RatMatrix i3 = rat_diag({1, 1, 1});
  return Pencil(blocks({f3, f3, rat_diag({1, 1})}), blocks({i3, i3, rat_diag({2, 3})}));
}

Pencil regular_diagonal() { return Pencil(rat_diag({1, 1, 1, 1, 1, 1, 1, 1}), rat_diag({1, 2, 3, 4, 5, 6, 7, 8})); }

Pencil rank_at_most5() { return Pencil(rat_diag({1, 1, 1, 1, 1, 1, 1, 1}), rat_diag({1, 1, 1, 2, 3, 4, 5, 6})); }

Pencil degenerate() { return Pencil(rat_diag({1, 1, 1, 1, 1, 1, 1, 0}), rat_diag({1, 2, 3, 4, 5, 6, 7, 0})); }

std::vector<Named> taxonomy() {
  return {
      {"degenerate", degenerate(), PencilTag::DegeneratePencil},
      {"rank-at-most-5", rank_at_most5(), PencilTag::RankAtMost5},
      {"rank6-over-base", diagonal_rank6_standard(), PencilTag::Rank6OverBase},
      {"conjugate-rank6-pair", conjugate_rank6_pair(), PencilTag::ConjugateRank6Pair},
      {"three-rank6-cubic", three_rank6_cubic(), PencilTag::ThreeRank6Cubic},
      {"four-rank6", four_rank6_normal_form(), PencilTag::FourRank6},
      {"regular", regular_diagonal(), PencilTag::Regular},
  };
}

}  // namespace qp::fixtures
