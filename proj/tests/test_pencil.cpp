#include <random>

#include "doctest.h"
#include "quadpencil/fixtures.hpp"
#include "quadpencil/pencil.hpp"

using namespace qp;

namespace {

RationalField Q;

RatMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  RatMatrix m(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    RatMatrix m(n, n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (!is_zero(det(Q, m))) return m;
  }
}

// Independent determinant: cofactor expansion over Q(t) on polynomial entries.
QPoly det_by_expansion(const std::vector<std::vector<QPoly>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  QPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<QPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<QPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    QPoly term = m[0][j] * det_by_expansion(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::size_t geometric_total(const std::vector<SingularMember>& ms) {
  std::size_t s = 0;
  for (auto& m : ms) s += m.multiplicity * m.degree;
  return s;
}

}  // namespace

TEST_CASE("pencil construction guards") {
  CHECK_THROWS_WITH(Pencil(identity(Q, 8), identity(Q, 8)), "F and G are proportional");
  CHECK_THROWS(Pencil(identity(Q, 3), identity(Q, 4)));
  CHECK_THROWS(Pencil(rat_matrix({{1, 2}, {0, 1}}), identity(Q, 2)));
}

TEST_CASE("char_poly examples") {
  auto p = fixtures::regular_diagonal();
  QPoly expect = QPoly::constant(1);
  for (long i = 1; i <= 8; ++i) expect *= QPoly{1, i};
  CHECK(char_poly(p).chi == expect);

  auto a6 = fixtures::diagonal_rank6_standard();
  QPoly e6 = QPoly{0, 0, 1};
  for (long b : {2, 3, 4, 5, 6, 7}) e6 *= QPoly{1, b};
  CHECK(char_poly(a6).chi == e6);
}

TEST_CASE("char_poly agrees with cofactor expansion") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 5;
    auto F = random_symmetric(rng, n, 6), G = random_symmetric(rng, n, 6);
    std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = QPoly(std::vector<Rat>{F(i, j), G(i, j)});
    CHECK(det_pencil_poly(F, G) == det_by_expansion(m));
  }
}

TEST_CASE("singular_members examples") {
  auto reg = singular_members(fixtures::regular_diagonal());
  CHECK(reg.size() == 8);
  for (auto& m : reg) {
    CHECK(m.multiplicity == 1);
    CHECK(m.rank == 7);
    CHECK(m.degree == 1);
  }

  auto a6 = singular_members(fixtures::diagonal_rank6_standard());
  bool seen = false;
  for (auto& m : a6)
    if (m.factor == QPoly({0, 1})) {
      seen = true;
      CHECK(m.multiplicity == 2);
      CHECK(m.rank == 6);
    }
  CHECK(seen);

  auto four = singular_members(fixtures::four_rank6_normal_form());
  REQUIRE(four.size() == 4);
  for (auto& m : four) {
    CHECK(m.multiplicity == 2);
    CHECK(m.rank == 6);
  }

  CHECK_THROWS_AS(singular_members(fixtures::degenerate()), DegeneratePencilError);
}

TEST_CASE("member at infinity") {
  // G singular: the member (0:1) has rank 7 and multiplicity 8 - deg chi
  Pencil p(identity(Q, 8), rat_diag({0, 1, 2, 3, 4, 5, 6, 7}));
  auto ms = singular_members(p);
  REQUIRE(ms.back().at_infinity);
  CHECK(ms.back().multiplicity == 1);
  CHECK(ms.back().rank == 7);
  CHECK(geometric_total(ms) == 8);
}

TEST_CASE("classify taxonomy fixtures") {
  for (auto& f : fixtures::taxonomy()) {
    INFO(f.name);
    CHECK(classify(f.pencil).tag == f.expected);
  }
  std::size_t rank6 = 0;
  for (auto& m : classify(fixtures::conjugate_rank6_pair()).evidence)
    if (m.rank == 6) {
      ++rank6;
      CHECK(m.factor == QPoly({1, 0, 1}));
    }
  CHECK(rank6 == 1);
}

TEST_CASE("classify outside eight variables") {
  Pencil p(identity(Q, 5), rat_diag({1, 2, 3, 4, 5}));
  auto c = classify(p);
  CHECK(c.out_of_taxonomy);
  CHECK(c.tag == PencilTag::Regular);
  Pencil q(identity(Q, 5), rat_diag({1, 1, 1, 4, 5}));
  CHECK(classify(q).tag == PencilTag::RankAtMost5);
}

TEST_CASE("rank-multiplicity inequality on random pencils") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 4 + trial % 5;
    auto F = random_symmetric(rng, n, 10), G = random_symmetric(rng, n, 10);
    // plant a low-rank member now and then
    if (trial % 4 == 0) {
      auto M = random_invertible(rng, n);
      std::vector<Rat> d(n, Rat(0));
      for (std::size_t i = 2; i < n; ++i) d[i] = (rng() % 7) + 1;
      F = congruence(Q, rat_diag(d), M);
    }
    Pencil p(F, G);
    auto cp = char_poly(p);
    if (cp.chi.is_zero()) continue;
    auto ms = singular_members(p, cp);
    for (auto& m : ms) CHECK(m.multiplicity + m.rank >= n);
    CHECK(geometric_total(ms) <= n);
  }
  for (auto& f : fixtures::taxonomy()) {
    if (f.expected == PencilTag::DegeneratePencil) continue;
    for (auto& m : singular_members(f.pencil)) CHECK(m.multiplicity + m.rank >= f.pencil.n());
  }
}

TEST_CASE("classify is invariant under swap and reparametrization") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> c(-3, 3);
  for (auto& f : fixtures::taxonomy()) {
    INFO(f.name);
    CHECK(classify(f.pencil.swapped()).tag == f.expected);
    int done = 0;
    while (done < 50) {
      int a = c(rng), b = c(rng), cc = c(rng), d = c(rng);
      if (a * d - b * cc != 1 && a * d - b * cc != -1) continue;
      Pencil q(f.pencil.member(a, b), f.pencil.member(cc, d));
      CHECK(classify(q).tag == f.expected);
      ++done;
    }
  }
}

TEST_CASE("mordell_sweep examples") {
  Pencil p(rat_diag({1, 1, 1, 1, -1, -1, -1, -1}), rat_diag({1, 2, 3, 4, 5, 6, 7, 8}));
  auto s = mordell_sweep(p);
  CHECK(s.lambda == 1);
  CHECK(s.mu == 0);
  CHECK(s.signature == std::pair<int, int>{4, 4});

  auto r = mordell_sweep(fixtures::regular_diagonal());
  CHECK(std::abs(r.signature.first - r.signature.second) <= 2);
  CHECK(r.signature.first + r.signature.second == 8);
  // the hit is strictly between consecutive roots -1/i
  CHECK(r.lambda == 1);
  CHECK(r.mu < 0);

  Pencil neg(scale(Q, Rat(-1), p.F()), scale(Q, Rat(-1), p.G()));
  auto rn = mordell_sweep(Pencil(scale(Q, Rat(-1), fixtures::regular_diagonal().F()),
                                 scale(Q, Rat(-1), fixtures::regular_diagonal().G())));
  CHECK(rn.signature.first == r.signature.second);
  CHECK(rn.signature.second == r.signature.first);

  CHECK_THROWS_WITH(mordell_sweep(fixtures::rank_at_most5()), "rank ≤ 5 member present");
}

TEST_CASE("mordell_sweep on random pencils") {
  std::mt19937_64 rng(12);
  int done = 0;
  while (done < 30) {
    auto F = random_symmetric(rng, 8, 5), G = random_symmetric(rng, 8, 5);
    Pencil p(F, G);
    auto cp = char_poly(p);
    if (cp.chi.is_zero()) continue;
    if (geometric_members_with_rank_at_most(singular_members(p, cp), 5) > 0) continue;
    auto s = mordell_sweep(p);
    CHECK(std::abs(s.signature.first - s.signature.second) <= 2);
    CHECK(s.signature.first + s.signature.second == 8);
    ++done;
  }
}

TEST_CASE("four_rank6_decompose normal form") {
  auto p = fixtures::four_rank6_normal_form();
  auto d = four_rank6_decompose(p);
  CHECK(d.field.degree() == 1);
  CHECK(verify_decomposition(p, d));
  // eigenspaces are the coordinate pairs
  for (std::size_t i = 0; i < 4; ++i) {
    auto V = d.eigenspaces[i];
    REQUIRE(V.dim() == 2);
    std::size_t block = 0;
    for (std::size_t c = 0; c < 8; ++c)
      if (!is_zero(V.basis(0, c))) block = c / 2;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 8; ++c)
        if (c / 2 != block) CHECK(is_zero(V.basis(r, c)));
    // φ_i hyperbolic: nondegenerate binary form with zero diagonal up to congruence
    auto& phi = d.induced_forms[i];
    CHECK(is_zero(phi(0, 0)));
    CHECK(is_zero(phi(1, 1)));
    CHECK(!is_zero(phi(0, 1)));
  }
  std::vector<Rat> alphas;
  for (auto& a : d.alphas) alphas.push_back(a.rational_value());
  std::sort(alphas.begin(), alphas.end());
  CHECK(alphas == std::vector<Rat>{1, 2, 3, 4});
}

TEST_CASE("four_rank6_decompose transports through a change of variables") {
  std::mt19937_64 rng(13);
  auto p0 = fixtures::four_rank6_normal_form();
  for (int trial = 0; trial < 3; ++trial) {
    auto M = random_invertible(rng, 8);
    Pencil p(congruence(Q, p0.F(), M), congruence(Q, p0.G(), M));
    auto d = four_rank6_decompose(p);
    CHECK(verify_decomposition(p, d));
    std::vector<Rat> alphas;
    for (auto& a : d.alphas) alphas.push_back(a.rational_value());
    std::sort(alphas.begin(), alphas.end());
    CHECK(alphas == std::vector<Rat>{1, 2, 3, 4});
    // V_i = M^{-1} (coordinate pair i)
    auto Minv = inverse(Q, M);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t b = 0; b < 4; ++b) {
        std::vector<std::vector<Rat>> img{Minv.col(2 * b), Minv.col(2 * b + 1)};
        auto W = span(Q, 8, img);
        auto Wk = lift(d.field, W.basis);
        if (Wk == d.eigenspaces[i].basis) alphas[i] = -1;  // mark matched
      }
    }
    for (auto& a : alphas) CHECK(a == -1);
  }
}

TEST_CASE("four_rank6_decompose over a quadratic field") {
  // α = 1, 2 and the conjugate pair 3 ± sqrt 2 realized by a rational 4x4 block
  // F-block hyperbolic ⊕ hyperbolic, G-block acting as multiplication by 3+sqrt2
  RatMatrix H = hyperbolic_form(2);  // x0x1 + x2x3
  // G on the second half: x0x1 * c0 + ... use the 2x2 companion of t^2 - 6t + 7
  // G = sum over blocks; realize with symmetric block structure via tensor:
  // H ⊗ C where C = [[3, 2], [1, 3]] is self-adjoint for the form diag(1, 2)
  // Build directly: variables (x0, x1, y0, y1), F = x0y0 + 2 x1y1,
  // G = (3 x0 + 2 x1) y0 ... symmetric version below.
  RatMatrix F2(4, 4, Rat(0)), G2(4, 4, Rat(0));
  // F: bilinear pairing between x and y with Gram diag(1, 2): F = x0 y0 + 2 x1 y1
  F2(0, 2) = F2(2, 0) = Rat(1, 2);
  F2(1, 3) = F2(3, 1) = 1;
  // G(x, y) = xᵀ D C y with D = diag(1, 2), C = [[3, 2], [1, 3]]: D C = [[3, 2], [2, 6]]
  G2(0, 2) = G2(2, 0) = Rat(3, 2);
  G2(0, 3) = G2(3, 0) = 1;
  G2(1, 2) = G2(2, 1) = 1;
  G2(1, 3) = G2(3, 1) = 3;
  auto p0 = fixtures::four_rank6_normal_form({1, 2, 5, 7});
  RatMatrix F = direct_sum(Q, hyperbolic_form(2), F2), G(8, 8, Rat(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) G(i, j) = p0.G()(i, j);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) G(4 + i, 4 + j) = G2(i, j);
  Pencil p(F, G);
  REQUIRE(classify(p).tag == PencilTag::FourRank6);
  auto d = four_rank6_decompose(p);
  CHECK(d.field.degree() == 2);
  CHECK(verify_decomposition(p, d));
  (void)H;
}

TEST_CASE("four_rank6_decompose rejects other classes") {
  CHECK_THROWS(four_rank6_decompose(fixtures::regular_diagonal()));
  CHECK_THROWS(four_rank6_decompose(fixtures::diagonal_rank6_standard()));
}
