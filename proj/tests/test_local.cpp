#include <map>
#include <random>

#include "doctest.h"
#include "quadpencil/fixtures.hpp"
#include "quadpencil/local.hpp"
#include "quadpencil/oracles.hpp"

using namespace qp;

namespace {

RationalField Q;

const std::vector<long> kPrimes{2, 3, 5, 7};

std::vector<Place> test_places() {
  std::vector<Place> v{Place::Real()};
  for (long p : kPrimes) v.push_back(Place::Prime(p));
  return v;
}

Rat random_nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    long a = d(rng);
    if (a != 0) return a;
  }
}

std::vector<Place> support_places(const Rat& a, const Rat& b) {
  return checking_places({a, b});
}

// Totally isotropic subspace of dimension m built one hyperbolic plane at a
// time from small isotropic vectors; returns false when the bounded search
// runs dry. Independent of the invariant formulas.
std::optional<std::vector<Rat>> small_isotropic(const std::vector<Rat>& d) {
  std::size_t n = d.size();
  // pairs: d_i x^2 + d_j y^2 = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (is_rational_square(-d[i] / d[j])) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = 1;
        v[j] = rational_sqrt(-d[i] / d[j]);
        return v;
      }
  // triples and quadruples in a small box, on squarefree integer parts
  std::vector<long> sq(n);
  std::vector<Rat> scale_back(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int s = squarefree_part(d[i]);
    sq[i] = s.get_si();
    scale_back[i] = 1 / rational_sqrt(d[i] / Rat(s));
  }
  for (std::size_t size : {3u, 4u}) {
    if (n < size) break;
    long h = size == 3 ? 40 : 8;
    std::vector<std::size_t> idx(size);
    for (std::size_t s = 0; s < size; ++s) idx[s] = s;
    for (;;) {
      std::vector<long> x(size, -h);
      for (;;) {
        bool nonzero = false;
        long val = 0;
        for (std::size_t s = 0; s < size; ++s) {
          nonzero |= x[s] != 0;
          val += sq[idx[s]] * x[s] * x[s];
        }
        if (nonzero && val == 0) {
          std::vector<Rat> v(n, Rat(0));
          for (std::size_t s = 0; s < size; ++s) v[idx[s]] = x[s] * scale_back[idx[s]];
          return v;
        }
        std::size_t t = 0;
        while (t < size && ++x[t] > h) x[t++] = -h;
        if (t == size) break;
      }
      // next combination
      int s = static_cast<int>(size) - 1;
      while (s >= 0 && idx[s] == n - size + s) --s;
      if (s < 0) break;
      ++idx[s];
      for (std::size_t t = s + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return std::nullopt;
}

bool constructive_split(RatMatrix q, std::size_t m) {
  for (std::size_t step = 0; step < m; ++step) {
    auto dg = diagonalize(q);
    auto v = small_isotropic(dg.diagonal);
    if (!v) return false;
    std::size_t n = q.rows();
    std::vector<Rat> x(n, Rat(0));  // v in the original coordinates
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i] += dg.change(i, j) * (*v)[j];
    // partner w with b(x, w) != 0, then restrict to the orthogonal of span(x, w)
    std::vector<Rat> qx(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) qx[i] += q(i, j) * x[j];
    std::size_t w = 0;
    while (is_zero(qx[w])) ++w;
    RatMatrix cons(2, n, Rat(0));
    for (std::size_t c = 0; c < n; ++c) {
      cons(0, c) = qx[c];
      cons(1, c) = q(w, c);
    }
    auto K = kernel(Q, cons);
    if (K.cols() != n - 2) return false;
    q = congruence(Q, q, K);
  }
  return true;
}

}  // namespace

TEST_CASE("hilbert symbol examples") {
  for (auto& v : test_places()) CHECK(hilbert_symbol(1, 7, v) == 1);
  CHECK(hilbert_symbol(-1, -1, Place::Real()) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::Prime(2)) == -1);
  for (long p : {3, 5, 7, 11, 13}) CHECK(hilbert_symbol(-1, -1, Place::Prime(p)) == 1);
  CHECK(hilbert_symbol(2, 3, Place::Prime(3)) == -1);  // 2 is not a square mod 3
  CHECK(hilbert_symbol(Rat(1, 4), 5, Place::Prime(5)) == 1);
}

TEST_CASE("hilbert symbol examples agree with the brute-force oracle") {
  CHECK(oracle::hilbert_bruteforce(-1, -1, 2) == -1);
  for (long p : {3, 5, 7}) CHECK(oracle::hilbert_bruteforce(-1, -1, p) == 1);
}

TEST_CASE("hilbert symbol algebraic laws") {
  std::mt19937_64 rng(20);
  for (auto& v : test_places()) {
    for (int t = 0; t < 500; ++t) {
      Rat a = random_nonzero(rng, 1000), b = random_nonzero(rng, 1000), c = random_nonzero(rng, 1000);
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a * c, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v));
      CHECK(hilbert_symbol(a, -a, v) == 1);
      if (a != 1) CHECK(hilbert_symbol(a, Rat(1) - a, v) == 1);
    }
  }
}

TEST_CASE("hilbert reciprocity") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    Rat a = random_nonzero(rng, 10000), b = random_nonzero(rng, 10000);
    int prod = 1;
    for (auto& v : support_places(a, b)) prod *= hilbert_symbol(a, b, v);
    CHECK(prod == 1);
  }
}

TEST_CASE("hilbert symbol against the oracle on random pairs") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    Rat a = random_nonzero(rng, 60), b = random_nonzero(rng, 60);
    for (long p : kPrimes) {
      INFO(a.get_str(), " ", b.get_str(), " p=", p);
      CHECK(hilbert_symbol(a, b, Place::Prime(p)) == oracle::hilbert_bruteforce(a, b, p));
    }
  }
}

TEST_CASE("hasse invariant") {
  for (auto& v : test_places()) CHECK(hasse_invariant({1, 1, 1, 1, 1}, v) == 1);
  CHECK(hasse_invariant({-1, -1}, Place::Real()) == -1);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 6;
    std::vector<Rat> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(random_nonzero(rng, 200));
    int prod = 1;
    for (auto& v : checking_places(d)) prod *= hasse_invariant(d, v);
    CHECK(prod == 1);
  }
}

TEST_CASE("witt index examples") {
  for (auto& v : test_places()) CHECK(witt_index_local(rat_diag({1, -1}), v).witt_index == 1);
  for (long p : kPrimes) CHECK(witt_index_local(rat_diag({1, 1, 1, 1, 1}), Place::Prime(p)).witt_index >= 1);
  CHECK(witt_index_local(rat_diag({1, 1, 1, 1}), Place::Real()).witt_index == 0);
  auto w = witt_index_local(rat_diag({1, -1, 0}), Place::Prime(3));
  CHECK(w.radical_dim == 1);
  CHECK(w.dim == 2);
  CHECK(w.witt_index == 1);
  auto r = witt_index_local(rat_diag({1, 2, -3}), Place::Real());
  REQUIRE(r.signature.has_value());
  CHECK(*r.signature == std::pair<int, int>{2, 1});
  // <1, 1, 1, 1> is the norm form of the quaternions ramified at 2 and inf
  CHECK(witt_index_local(identity(Q, 4), Place::Prime(2)).witt_index == 0);
  CHECK(witt_index_local(identity(Q, 4), Place::Prime(3)).witt_index == 2);
}

TEST_CASE("witt index invariants") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + rng() % 8;
    std::vector<Rat> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(random_nonzero(rng, 30));
    for (auto& v : test_places()) {
      auto w = witt_index_local(rat_diag(d), v);
      CHECK(2 * w.witt_index <= w.dim);
      if (!v.real) CHECK(w.dim - 2 * w.witt_index <= 4);
      else CHECK(w.witt_index == std::min(w.signature->first, w.signature->second));
    }
  }
}

TEST_CASE("witt index agrees with the brute-force oracle (dim <= 4)") {
  std::vector<long> entries{1, -1, 2, -2, 3, -3, 5, -5};
  std::map<std::pair<std::vector<long>, long>, std::size_t> memo;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      std::vector<Rat> d;
      std::vector<long> key;
      for (auto i : idx) {
        d.push_back(entries[i]);
        key.push_back(entries[i]);
      }
      std::sort(key.begin(), key.end());
      for (long p : kPrimes) {
        auto [it, fresh] = memo.try_emplace({key, p}, 0);
        if (fresh) it->second = oracle::witt_index_bruteforce(d, p);
        INFO("p=", p);
        CHECK(witt_index_from_diagonal(d, Place::Prime(p)) == it->second);
        ++checked;
      }
      std::size_t t = 0;
      while (t < n && ++idx[t] == entries.size()) idx[t++] = 0;
      if (t == n) break;
    }
  }
  CHECK(checked == 4 * (8 + 64 + 512 + 4096));
}

TEST_CASE("splits_m_hyperbolic_global examples") {
  CHECK(splits_m_hyperbolic_global(hyperbolic_form(4), 4).splits);
  auto id = splits_m_hyperbolic_global(identity(Q, 8), 1);
  CHECK_FALSE(id.splits);
  CHECK(id.reason.find("inf") != std::string::npos);
  CHECK(splits_m_hyperbolic_global(rat_diag({1, 1, 1, -1, -1, -1, 2, -2}), 3).splits);
  auto big = splits_m_hyperbolic_global(identity(Q, 4), 3);
  CHECK_FALSE(big.splits);
  CHECK(big.reason == "m exceeds dim/2");
  // <1, 1> is hyperbolic at every p ≡ 1 mod 4 but not globally
  CHECK_FALSE(splits_m_hyperbolic_global(rat_diag({1, -2}), 1).splits);
  CHECK(splits_m_hyperbolic_global(rat_diag({3, -12}), 1).splits);
  CHECK_THROWS(splits_m_hyperbolic_global(rat_diag({1, 0}), 1));
}

TEST_CASE("global splitting against a constructive search") {
  std::vector<std::pair<RatMatrix, std::size_t>> fixtures{
      {hyperbolic_form(4), 4},
      {hyperbolic_form(4), 3},
      {rat_diag({1, 1, 1, -1, -1, -1, 2, -2}), 3},
      {rat_diag({1, 1, 1, -1, -1, -1, 2, -2}), 4},
      {rat_diag({1, 1, -3, 5, -7, 2, 1, -1}), 2},
      {rat_diag({1, 1, 1, 1, -1, -1, -1, -1}), 4},
      {rat_diag({1, 2, 3, 5, -1, -2, -3, -5}), 3},
      {rat_diag({1, 1, 1, 1, 1, 1, -1, -1}), 2},
      {rat_diag({1, 1, -3}), 1},
      {rat_diag({1, 1, -1}), 1},
      {identity(Q, 8), 1},
  };
  for (auto& [q, m] : fixtures) {
    bool built = constructive_split(q, m);
    bool predicate = splits_m_hyperbolic_global(q, m).splits;
    if (built) CHECK(predicate);
    if (predicate) CHECK(built);
  }
}

TEST_CASE("isotropic_over_Q") {
  CHECK(isotropic_over_Q(rat_diag({1, 1, -1})));
  CHECK_FALSE(isotropic_over_Q(rat_diag({1, 1, 1})));
  CHECK_FALSE(isotropic_over_Q(rat_diag({1, 1, -3})));
  CHECK(isotropic_over_Q(rat_diag({1, 0})));
  // exhaustive search for x^2 + y^2 = 3 z^2 finds nothing up to height 50
  bool found = false;
  for (long x = 0; x <= 50 && !found; ++x)
    for (long y = 0; y <= 50 && !found; ++y)
      for (long z = 1; z <= 50 && !found; ++z) found = x * x + y * y == 3 * z * z;
  CHECK_FALSE(found);
  CHECK(witt_index_local(rat_diag({1, 1, -3}), Place::Prime(3)).witt_index == 0);
}

TEST_CASE("witt index is stable under small p-adic perturbations") {
  std::mt19937_64 rng(25);
  std::vector<RatMatrix> forms{hyperbolic_form(4), rat_diag({1, 1, 1, -1, -1, -1, 2, -2}), rat_diag({1, 2, 3, 5, 7, 1, 1, 1}),
                               rat_diag({3, 6, 9, -1, 2, 5})};
  std::uniform_int_distribution<int> e(-5, 5);
  for (auto& q0 : forms) {
    // integral model
    std::vector<Rat> entries;
    for (std::size_t i = 0; i < q0.rows(); ++i)
      for (std::size_t j = 0; j < q0.cols(); ++j) entries.push_back(q0(i, j));
    RatMatrix q = scale(Q, Rat(lcm_of_denominators(entries)), q0);
    for (long p : kPrimes) {
      auto base = witt_index_local(q, Place::Prime(p)).witt_index;
      int N = 2 * valuation(Rat(2 * det(Q, q)), Int(p)) + 3;
      Int pN;
      mpz_ui_pow_ui(pN.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N));
      for (int t = 0; t < 10; ++t) {
        RatMatrix q2 = q;
        for (std::size_t i = 0; i < q.rows(); ++i)
          for (std::size_t j = i; j < q.cols(); ++j) {
            Rat delta = Rat(pN) * e(rng);
            q2(i, j) += delta;
            if (i != j) q2(j, i) += delta;
          }
        CHECK(witt_index_local(q2, Place::Prime(p)).witt_index == base);
      }
    }
  }
}

TEST_CASE("local point search") {
  RatMatrix F = hyperbolic_form(4);
  RatMatrix G(8, 8, Rat(0));
  std::vector<Rat> coef{1, -1, 2, 3};
  for (std::size_t i = 0; i < 4; ++i) G(2 * i, 2 * i + 1) = G(2 * i + 1, 2 * i) = coef[i] / 2;
  Pencil X(F, G);
  auto r = local_point_search_intersection(X, 5, 4);
  REQUIRE(r.found);
  Int p4 = 625;
  IntQuadric qf(F), qg(G);
  CHECK(qf.eval(r.point) % p4 == 0);
  CHECK(qg.eval(r.point) % p4 == 0);

  auto r2 = local_point_search_intersection(X, 2, 8);
  REQUIRE(r2.found);
  CHECK(qf.eval(r2.point) % 256 == 0);
  CHECK(qg.eval(r2.point) % 256 == 0);

  // every F_3-point has x0 = x1 = x2 = x3 = 0 and a vanishing Jacobian
  Pencil Y(rat_diag({1, 1, 3, 3, 3, 3, 3, 3}), rat_diag({3, 3, 1, 1, 3, 3, 3, 3}));
  CHECK_FALSE(local_point_search_intersection(Y, 3, 4).found);

  CHECK_THROWS_WITH(local_point_search_intersection(X, 5, 30), "precision too large");
  CHECK_THROWS(local_point_search_intersection(X, 4, 3));
}

TEST_CASE("rational point search") {
  auto nf = fixtures::four_rank6_normal_form();
  auto pt = rational_point_search(nf, 1);
  REQUIRE(pt.has_value());
  IntQuadric qf(nf.F()), qg(nf.G());
  CHECK(qf.eval(*pt) == 0);
  CHECK(qg.eval(*pt) == 0);

  CHECK_FALSE(rational_point_search(fixtures::diagonal_rank6_standard(), 10).has_value());

  Pencil conic(rat_diag({1, 1, -1}), rat_diag({1, -1, 0}));  // x = ±y, z^2 = 2x^2: none
  CHECK_FALSE(rational_point_search(conic, 20).has_value());
  Pencil conic2(rat_diag({1, 1, -2}), rat_diag({1, -1, 0}));  // (1:1:1)
  auto c2 = rational_point_search(conic2, 3);
  REQUIRE(c2.has_value());
  IntQuadric c2f(conic2.F()), c2g(conic2.G());
  CHECK(c2f.eval(*c2) == 0);
  CHECK(c2g.eval(*c2) == 0);
  CHECK(*c2 == std::vector<Int>{1, 1, 1});
}
