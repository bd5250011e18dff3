#include "quadpencil/oracles.hpp"

#include <stdexcept>

#include "quadpencil/forms.hpp"

namespace qp::oracle {

namespace {

RationalField Q;

struct Search {
  long p;
  int k;
  std::vector<std::int64_t> mod_pk;  // p^0 .. p^k
  std::vector<std::int64_t> coeff;   // d_i mod p^k
  std::vector<int> vd;               // v_p(d_i) in {0, 1}
  int v2;                            // v_p(2)
  std::size_t n;
  std::size_t lead;
  std::vector<std::int64_t> x;
  std::optional<LiftableZero> hit;

  std::int64_t q_mod(std::int64_t m) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s = (s + coeff[i] * ((x[i] * x[i]) % m)) % m;
    return ((s % m) + m) % m;
  }

  int val(std::int64_t a, int cap) const {
    int v = 0;
    while (v < cap && a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  }

  // Hensel criterion with x known mod p^j: v(2 d_i x_i) = e < j and j >= 2e + 1
  bool liftable(int j) {
    for (std::size_t i = 0; i < n; ++i) {
      int vx = val(x[i] % mod_pk[j], j);
      int e = v2 + vd[i] + vx;
      if (vx < j && e < j && j >= 2 * e + 1) {
        hit = LiftableZero{x, i};
        return true;
      }
    }
    return false;
  }

  // x is fixed mod p^j with q(x) ≡ 0 mod p^j; try all next digits
  bool extend(int j) {
    if (liftable(j)) return true;
    if (j == k) return false;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
      if (i != lead) free.push_back(i);
    std::vector<std::int64_t> base = x;
    std::vector<long> digit(free.size(), 0);
    for (;;) {
      for (std::size_t t = 0; t < free.size(); ++t) x[free[t]] = base[free[t]] + digit[t] * mod_pk[j];
      if (q_mod(mod_pk[j + 1]) == 0 && extend(j + 1)) return true;
      std::size_t t = 0;
      while (t < digit.size() && ++digit[t] == p) digit[t++] = 0;
      if (t == digit.size()) break;
    }
    x = base;
    return false;
  }
};

std::vector<Int> normalize(const std::vector<Rat>& d) {
  std::vector<Int> out;
  for (auto& x : d) {
    if (is_zero(x)) throw std::invalid_argument("oracle needs nonzero diagonal entries");
    out.push_back(squarefree_part(x));
  }
  return out;
}

}  // namespace

int search_precision(long p) { return p == 2 ? 5 : 3; }

std::optional<LiftableZero> liftable_zero(const std::vector<Int>& d, long p) {
  Search s;
  s.p = p;
  s.k = search_precision(p);
  s.n = d.size();
  s.mod_pk = {1};
  for (int i = 0; i < s.k; ++i) s.mod_pk.push_back(s.mod_pk.back() * p);
  std::int64_t pk = s.mod_pk.back();
  for (auto& di : d) {
    Int r = di % pk;
    if (r < 0) r += pk;
    s.coeff.push_back(r.get_si());
    s.vd.push_back(di % p == 0 ? 1 : 0);
  }
  s.v2 = p == 2 ? 1 : 0;
  // primitive vectors up to unit scaling: the first unit coordinate is 1
  for (s.lead = 0; s.lead < s.n; ++s.lead) {
    std::vector<std::size_t> free;
    for (std::size_t i = s.lead + 1; i < s.n; ++i) free.push_back(i);
    std::vector<long> digit(free.size(), 0);
    for (;;) {
      s.x.assign(s.n, 0);
      s.x[s.lead] = 1;
      for (std::size_t t = 0; t < free.size(); ++t) s.x[free[t]] = digit[t];
      if (s.q_mod(p) == 0 && s.extend(1)) return s.hit;
      std::size_t t = 0;
      while (t < digit.size() && ++digit[t] == p) digit[t++] = 0;
      if (t == digit.size()) break;
    }
  }
  return std::nullopt;
}

bool isotropic_bruteforce(const std::vector<Rat>& d, long p) { return liftable_zero(normalize(d), p).has_value(); }

std::size_t witt_index_bruteforce(const std::vector<Rat>& d0, long p) {
  auto d = normalize(d0);
  auto z = liftable_zero(d, p);
  if (!z) return 0;
  std::size_t n = d.size();
  // Gram of <d> and the plane span(x, e_i)
  RatMatrix D(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) D(i, i) = Rat(d[i]);
  RatMatrix constraints(2, n, Rat(0));
  for (std::size_t c = 0; c < n; ++c) {
    constraints(0, c) = Rat(d[c] * z->x[c]);
    constraints(1, c) = c == z->coordinate ? Rat(d[c]) : Rat(0);
  }
  auto W = kernel(Q, constraints);  // columns span the orthogonal of the plane
  if (W.cols() != n - 2) throw std::logic_error("oracle plane is degenerate");
  auto rest = congruence(Q, D, W);
  auto next = nonzero_diagonal(rest);
  if (next.size() != n - 2) throw std::logic_error("oracle complement is degenerate");
  return 1 + witt_index_bruteforce(next, p);
}

int hilbert_bruteforce(const Rat& a, const Rat& b, long p) { return isotropic_bruteforce({Rat(1), Rat(-a), Rat(-b)}, p) ? 1 : -1; }

bool hyperplane_tangent(const GaloisField& k, const FqMatrix& B, const std::vector<FqPoint>& QB, const FqPoint& a) {
  auto ca = canonical_point(k, a);
  for (auto& R : QB)
    if (canonical_point(k, apply(k, B, R)) == ca) return true;
  return false;
}

}  // namespace qp::oracle
