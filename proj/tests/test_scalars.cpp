#include <random>

#include "doctest.h"
#include "quadpencil/factor.hpp"
#include "quadpencil/fields.hpp"
#include "quadpencil/squareclass.hpp"
#include "quadpencil/sturm.hpp"

using namespace qp;

namespace {

QPoly linear(long a, long b) { return QPoly{a, b}; }  // a + b t

// Rational-root oracle: a polynomial of degree <= 3 is irreducible over Q
// iff it has no rational root; candidate roots p/q with p | a0, q | an.
bool has_rational_root(const QPoly& f) {
  Int den = lcm_of_denominators(f.coeffs());
  std::vector<Int> c;
  for (auto& x : f.coeffs()) c.push_back(Int(x * Rat(den)));
  if (c[0] == 0) return true;
  auto divisors = [](Int n) {
    n = abs(n);
    std::vector<Int> d;
    for (Int i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        d.push_back(n / i);
      }
    return d;
  };
  for (auto& p : divisors(c[0]))
    for (auto& q : divisors(c.back()))
      for (int s : {1, -1})
        if (is_zero(f.eval(Rat(s * p, q)))) return true;
  return false;
}

}  // namespace

TEST_CASE("factor_over_Q examples") {
  auto f1 = factor_over_Q(QPoly{-1, 0, 1});
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0].first == QPoly({-1, 1}));
  CHECK(f1.factors[1].first == QPoly({1, 1}));
  CHECK(f1.factors[0].second == 1);

  auto f2 = factor_over_Q(QPoly{1, 0, 1});
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].first == QPoly({1, 0, 1}));

  // Diagonal determinant b0 t * b1 t * prod (1 + t) with all coefficients 1.
  QPoly chi = QPoly{0, 1} * QPoly{0, 1} * pow(linear(1, 1), 6);
  auto f3 = factor_over_Q(chi);
  bool found = false;
  for (auto& [g, m] : f3.factors)
    if (g == QPoly({0, 1})) {
      CHECK(m == 2);
      found = true;
    }
  CHECK(found);
  CHECK(f3.expand() == chi);

  CHECK_THROWS_WITH(factor_over_Q(QPoly{}), "zero polynomial has no factorization");
}

TEST_CASE("factor_over_Q hard irreducibles") {
  CHECK(is_irreducible_over_Q(QPoly{1, 0, 0, 0, 1}));        // x^4+1 splits mod every prime
  CHECK(is_irreducible_over_Q(QPoly{1, 0, -10, 0, 1}));      // Swinnerton-Dyer
  CHECK(!is_irreducible_over_Q(QPoly{4, 0, 0, 0, 1}));       // x^4+4 = (x^2+2x+2)(x^2-2x+2)
  auto f = factor_over_Q(QPoly{4, 0, 0, 0, 1});
  CHECK(f.factors.size() == 2);
}

TEST_CASE("factor_over_Q round trip on random polynomials") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> coef(-20, 20), deg(0, 16);
  for (int trial = 0; trial < 500; ++trial) {
    int d = deg(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = coef(rng);
    if (is_zero(c.back())) c.back() = 1;
    QPoly f(c);
    if (f.is_zero()) continue;
    auto fac = factor_over_Q(f);
    REQUIRE(fac.expand() == f);
    for (auto& [g, m] : fac.factors) {
      CHECK(g.lead() == 1);
      if (g.degree() <= 3 && g.degree() >= 2) CHECK(!has_rational_root(g));
    }
  }
}

TEST_CASE("factor_over_Q recovers planted factors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    // product of two irreducible quadratics and a linear factor squared
    std::vector<QPoly> parts;
    while (parts.size() < 2) {
      QPoly q{coef(rng), coef(rng), 1};
      if (!has_rational_root(q)) parts.push_back(q);
    }
    QPoly lin{coef(rng), 1};
    QPoly f = parts[0] * parts[1] * lin * lin;
    auto fac = factor_over_Q(f);
    CHECK(fac.expand() == f);
    std::size_t total = 0;
    for (auto& [g, m] : fac.factors) total += m;
    CHECK(total == 4u);
  }
}

TEST_CASE("square_class over Q") {
  CHECK(square_class(Rat(18)).r == 2);
  CHECK(square_class(Rat(-4)).r == -1);
  CHECK(square_class(Rat(9, 50)).r == 2);
  CHECK_THROWS(square_class(Rat(0)));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> v(-500, 500);
  for (int i = 0; i < 300; ++i) {
    Rat x(v(rng), std::abs(v(rng)) + 1), y(v(rng), std::abs(v(rng)) + 1);
    x.canonicalize();
    y.canonicalize();
    if (is_zero(x) || is_zero(y)) continue;
    CHECK(square_class(x * y * y) == square_class(x));
    auto c = square_class(x);
    CHECK(square_class(Rat(c.r)) == c);  // idempotent
  }
}

TEST_CASE("square classes in quadratic fields") {
  NumberField k(QPoly{-2, 0, 1});
  auto a = k.generator();
  NFElem c = k.from_rat(3) + k.from_rat(2) * a;
  CHECK(square_class(c).is_trivial());
  CHECK(is_square(c));
  // 2 is a square in Q(sqrt 2): witness a * a == 2
  CHECK(a * a == k.from_rat(2));
  CHECK(is_square(k.from_rat(2)));
  CHECK(is_square_in_quadratic_field(2, 0, 2));
  CHECK(is_square_in_quadratic_field(3, 2, 2));
  CHECK(is_square_in_quadratic_field(9, 0, 2));
  CHECK(!is_square_in_quadratic_field(3, 0, 2));
  CHECK(!is_square_in_quadratic_field(-1, 0, 2));
  CHECK(is_square_in_quadratic_field(-1, 0, -1));
  CHECK_THROWS_WITH(square_class(NumberField(QPoly{-2, 0, 0, 1}).generator()), "unsupported residue field degree");

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-30, 30);
  for (long d : {-1L, 2L, 5L, -7L}) {
    NumberField K(QPoly{-d, 0, 1});
    for (int i = 0; i < 200; ++i) {
      NFElem z = K.from_poly(QPoly(std::vector<Rat>{Rat(v(rng), 1 + std::abs(v(rng))), Rat(v(rng))}));
      if (is_zero(z)) continue;
      NFElem z2 = z * z;
      CHECK(is_square(z2));
      CHECK(square_class(z2).is_trivial());
      // class multiplicativity: c * z^2 has the class of c
      NFElem w = K.from_poly(QPoly(std::vector<Rat>{Rat(v(rng)), Rat(v(rng))}));
      if (is_zero(w)) continue;
      CHECK(same_square_class(square_class(w * z2), square_class(w)));
    }
  }
}

TEST_CASE("quadratic field with non-normalized minimal polynomial") {
  // a^2 + a + 1 = 0: a = (-1 + sqrt(-3))/2, so 2a + 1 = sqrt(-3).
  NumberField K(QPoly{1, 1, 1});
  NFElem s = K.from_rat(2) * K.generator() + K.one();
  CHECK(!is_square(s));
  CHECK(is_square(s * s));
  CHECK(is_square(K.from_rat(-3)));
  auto q = quadratic_coords(s);
  CHECK(q.d == -3);
  CHECK(q.u == 0);
  CHECK(q.v == 1);
}

TEST_CASE("number field arithmetic") {
  NumberField K(QPoly{-2, 0, 0, 1});  // cube root of 2
  auto a = K.generator();
  CHECK(a * a * a == K.from_rat(2));
  NFElem x = a + K.one();
  CHECK(x * x.inverse() == K.one());
  CHECK_THROWS(NumberField(QPoly{-1, 0, 1}));
}

TEST_CASE("finite fields") {
  GaloisField f3(3), f27(3, 3), f25(5, 2);
  CHECK(f27.size() == 27);
  for (std::uint32_t c = 1; c < 27; ++c) {
    auto x = f27.element(c);
    CHECK(x * x.inverse() == f27.one());
    CHECK(x.pow(26) == f27.one());
    CHECK(x + (-x) == f27.zero());
  }
  // distributivity spot check
  for (std::uint32_t a = 0; a < 25; a += 3)
    for (std::uint32_t b = 0; b < 25; b += 4)
      for (std::uint32_t c = 0; c < 25; c += 5) {
        auto A = f25.element(a), B = f25.element(b), C = f25.element(c);
        CHECK(A * (B + C) == A * B + A * C);
      }
  int squares = 0;
  for (std::uint32_t c = 1; c < 25; ++c) squares += f25.is_square(f25.element(c));
  CHECK(squares == 12);
  CHECK(f3.from_rat(Rat(1, 2)) == f3.from_int(2));
}

TEST_CASE("rational functions") {
  RatFunc a(QPoly{1, 1}, QPoly{-1, 1});
  RatFunc b(QPoly{-1, 1}, QPoly{1, 1});
  CHECK(a * b == RatFunc::constant(1));
  CHECK((a - a) == RatFunc());
  CHECK((a / a) == RatFunc::constant(1));
}

TEST_CASE("isolate_real_roots examples") {
  auto r = isolate_real_roots(QPoly{-2, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0].hi <= r[1].lo);
  // refinement lands inside the windows (-2,-1) and (1,2) within a few steps
  auto inside = [](const RootInterval& iv, Rat a, Rat b) { return iv.lo >= a && iv.hi <= b; };
  RootInterval lo = r[0], hi = r[1];
  for (int i = 0; i < 8 && !inside(lo, -2, -1); ++i) lo = refine(QPoly{-2, 0, 1}, lo);
  for (int i = 0; i < 8 && !inside(hi, 1, 2); ++i) hi = refine(QPoly{-2, 0, 1}, hi);
  CHECK(inside(lo, -2, -1));
  CHECK(inside(hi, 1, 2));
  CHECK(sgn(QPoly{-2, 0, 1}.eval(lo.lo)) != sgn(QPoly{-2, 0, 1}.eval(lo.hi)));

  CHECK(isolate_real_roots(QPoly{1, 0, 1}).empty());

  QPoly cubic = linear(-1, 1) * linear(-2, 1) * linear(-3, 1);
  auto c = separate(cubic, isolate_real_roots(cubic));
  REQUIRE(c.size() == 3);
  for (int i = 0; i < 3; ++i) {
    Rat root(i + 1);
    CHECK(c[i].lo <= root);
    CHECK(c[i].hi >= root);
    if (!c[i].exact) CHECK(c[i].lo < root);
  }
  CHECK(c[0].hi < c[1].lo);
  CHECK(c[1].hi < c[2].lo);

  CHECK_THROWS_WITH(isolate_real_roots(linear(1, 1) * linear(1, 1)), "take squarefree part first");
}

TEST_CASE("Sturm counts match grid sign changes") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> root(-40, 40), deg(3, 4), quad(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int d = deg(rng);
    // real roots at multiples of 1/4, optionally an irreducible quadratic
    std::vector<int> rs;
    while ((int)rs.size() < d) {
      int x = root(rng);
      if (std::find(rs.begin(), rs.end(), x) == rs.end()) rs.push_back(x);
    }
    bool complex_pair = trial % 3 == 0;
    QPoly f = QPoly::constant(1);
    std::size_t nreal = complex_pair ? rs.size() - 2 : rs.size();
    for (std::size_t i = 0; i < nreal; ++i) f *= QPoly(std::vector<Rat>{Rat(-rs[i], 4), Rat(1)});
    if (complex_pair) f *= QPoly{quad(rng), 0, 1};
    f = f.scaled(Rat(trial % 2 ? -3 : 2));
    // grid with step 1/8 offset by 1/16: never hits a root
    std::size_t changes = 0;
    int last = 0;
    for (int k = -200; k <= 200; ++k) {
      Rat x = Rat(2 * k + 1, 16);
      int s = sgn(f.eval(x));
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    CHECK(isolate_real_roots(f).size() == changes);
  }
}
