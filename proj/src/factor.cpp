#include "quadpencil/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace qp {

namespace {

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;  // lowest first, trimmed
using ZPoly = std::vector<Int>;   // lowest first, trimmed

// ---- arithmetic in F_p[x] ------------------------------------------------

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

void zp_divmod(const ZpPoly& a, const ZpPoly& b, u64 p, ZpPoly& q, ZpPoly& r) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  for (std::size_t i = r.size() - b.size() + 1; i-- > 0;) {
    u64 f = mulmod(r[i + b.size() - 1], inv, p);
    q[i] = f;
    if (!f) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + p - mulmod(f, b[j], p)) % p;
  }
  trim(q);
  trim(r);
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, u64 p) {
  ZpPoly q, r;
  zp_divmod(a, b, p, q, r);
  return r;
}

ZpPoly zp_div(const ZpPoly& a, const ZpPoly& b, u64 p) {
  ZpPoly q, r;
  zp_divmod(a, b, p, q, r);
  return q;
}

ZpPoly zp_monic(ZpPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void zp_xgcd(const ZpPoly& a, const ZpPoly& b, u64 p, ZpPoly& s, ZpPoly& t) {
  ZpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    ZpPoly q, r;
    zp_divmod(r0, r1, p, q, r);
    ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
    ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("zp_xgcd: inputs not coprime");
  u64 inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  s = s0;
  t = t0;
}

ZpPoly zp_powmod(ZpPoly base, const Int& e, const ZpPoly& m, u64 p) {
  ZpPoly r{1};
  base = zp_mod(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = zp_mod(zp_mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = zp_mod(zp_mul(r, base, p), m, p);
  }
  return r;
}

ZpPoly reduce(const ZPoly& g, u64 p) {
  ZpPoly r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Int m;
    mpz_fdiv_r_ui(m.get_mpz_t(), g[i].get_mpz_t(), p);
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

// Equal-degree splitting of a monic squarefree product of degree-d factors.
void edf(const ZpPoly& g, std::size_t d, u64 p, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    ZpPoly a(n);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() <= 1) continue;
    ZpPoly b = zp_powmod(a, e, g, p);
    b = zp_sub(b, ZpPoly{1}, p);
    ZpPoly u = zp_gcd(b, g, p);
    if (u.size() > 1 && u.size() < g.size()) {
      edf(u, d, p, rng, out);
      edf(zp_div(g, u, p), d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a monic squarefree polynomial over F_p (p odd).
std::vector<ZpPoly> factor_mod_p(ZpPoly f, u64 p) {
  std::mt19937_64 rng(0x5eed + p);
  std::vector<ZpPoly> out;
  ZpPoly x{0, 1};
  ZpPoly h = x;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = zp_powmod(h, Int(static_cast<unsigned long>(p)), f, p);
    ZpPoly g = zp_gcd(zp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      edf(g, d, p, rng, out);
      f = zp_div(f, g, p);
      h = zp_mod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// Number of irreducible factors mod p, via distinct-degree counts only.
std::size_t count_factors_mod_p(ZpPoly f, u64 p) {
  std::size_t count = 0;
  ZpPoly x{0, 1};
  ZpPoly h = x;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = zp_powmod(h, Int(static_cast<unsigned long>(p)), f, p);
    ZpPoly g = zp_gcd(zp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      count += (g.size() - 1) / d;
      f = zp_div(f, g, p);
      h = zp_mod(h, f, p);
    }
  }
  if (f.size() > 1) ++count;
  return count;
}

// ---- integer polynomials -------------------------------------------------

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly z_mod(ZPoly a, const Int& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

ZPoly z_symmod(ZPoly a, const Int& m) {
  Int half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly from_zp(const ZpPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

Int content(const ZPoly& a) {
  Int g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly a) {
  Int c = content(a);
  if (c == 0) return a;
  if (sgn(a.back()) < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

ZPoly to_primitive_integer(const QPoly& f) {
  Int l = lcm_of_denominators(f.coeffs());
  ZPoly z;
  for (auto& c : f.coeffs()) z.push_back(Int(c * l));
  return primitive_part(z);
}

QPoly to_qpoly(const ZPoly& a) {
  std::vector<Rat> v;
  for (auto& c : a) v.emplace_back(c);
  return QPoly(std::move(v));
}

// Lifts G = A*B from mod p to mod p^K, A monic.
void hensel_lift_pair(const ZPoly& G, const ZpPoly& a, const ZpPoly& b, u64 p, unsigned K, ZPoly& A, ZPoly& B) {
  ZpPoly s, t;
  zp_xgcd(a, b, p, s, t);
  A = from_zp(a);
  B = from_zp(b);
  Int pk = static_cast<unsigned long>(p);
  for (unsigned k = 1; k < K; ++k) {
    Int pk1 = pk * static_cast<unsigned long>(p);
    ZPoly diff = G;
    ZPoly ab = z_mul(A, B);
    if (ab.size() > diff.size()) diff.resize(ab.size(), Int(0));
    for (std::size_t i = 0; i < ab.size(); ++i) diff[i] -= ab[i];
    diff = z_mod(diff, pk1);
    ZPoly e_int;
    for (auto& c : diff) e_int.push_back(c / pk);
    ZpPoly e = reduce(e_int, p);
    ZpPoly te = zp_mul(t, e, p);
    ZpPoly q, da;
    zp_divmod(te, a, p, q, da);
    ZpPoly db = zp_mul(s, e, p);
    ZpPoly qb = zp_mul(q, b, p);
    if (qb.size() > db.size()) db.resize(qb.size(), 0);
    for (std::size_t i = 0; i < qb.size(); ++i) db[i] = (db[i] + qb[i]) % p;
    trim(db);
    if (da.size() > A.size()) A.resize(da.size(), Int(0));
    for (std::size_t i = 0; i < da.size(); ++i) A[i] += pk * static_cast<unsigned long>(da[i]);
    if (db.size() > B.size()) B.resize(db.size(), Int(0));
    for (std::size_t i = 0; i < db.size(); ++i) B[i] += pk * static_cast<unsigned long>(db[i]);
    A = z_mod(A, pk1);
    B = z_mod(B, pk1);
    pk = pk1;
  }
}

std::vector<ZPoly> hensel_lift_all(const ZPoly& g, const std::vector<ZpPoly>& facs, u64 p, unsigned K) {
  std::vector<ZPoly> lifted;
  ZPoly G = g;
  Int pK;
  mpz_ui_pow_ui(pK.get_mpz_t(), p, K);
  for (std::size_t i = 0; i + 1 < facs.size(); ++i) {
    ZpPoly rest = reduce(ZPoly{G.back()}, p);
    for (std::size_t j = i + 1; j < facs.size(); ++j) rest = zp_mul(rest, facs[j], p);
    ZPoly A, B;
    hensel_lift_pair(G, facs[i], rest, p, K, A, B);
    lifted.push_back(A);
    G = B;
  }
  // Last factor: make monic mod p^K.
  ZPoly last = z_mod(G, pK);
  Int lc = last.back(), inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pK.get_mpz_t());
  for (auto& c : last) c *= inv;
  lifted.push_back(z_mod(last, pK));
  return lifted;
}

bool divides_exactly(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  auto [q, r] = divmod(to_qpoly(g), to_qpoly(f));
  if (!r.is_zero()) return false;
  for (auto& c : q.coeffs())
    if (c.get_den() != 1) return false;
  quotient.clear();
  for (auto& c : q.coeffs()) quotient.push_back(c.get_num());
  return true;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors over Z of a primitive squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(const ZPoly& g) {
  std::size_t n = g.size() - 1;
  if (n <= 1) return {g};
  ZPoly dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * static_cast<unsigned long>(i));

  u64 best_p = 0;
  std::size_t best_count = 0;
  unsigned good = 0;
  for (u64 p = 3; good < 6 && p < 100000; p += 2) {
    if (!is_probable_prime(Int(static_cast<unsigned long>(p)))) continue;
    ZpPoly gp = reduce(g, p);
    if (gp.size() != g.size()) continue;
    ZpPoly gcdp = zp_gcd(gp, reduce(dg, p), p);
    if (gcdp.size() != 1) continue;
    ++good;
    std::size_t c = count_factors_mod_p(zp_monic(gp, p), p);
    if (best_p == 0 || c < best_count) {
      best_p = p;
      best_count = c;
    }
    if (c == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("factorization: no suitable prime found");
  if (best_count == 1) return {g};
  u64 p = best_p;

  std::vector<ZpPoly> facs = factor_mod_p(zp_monic(reduce(g, p), p), p);
  std::sort(facs.begin(), facs.end());

  Int maxc = 0;
  for (auto& c : g)
    if (abs(c) > maxc) maxc = abs(c);
  Int bound = maxc * abs(g.back());
  bound <<= static_cast<mp_bitcnt_t>(n + 1);
  Int root;
  mpz_sqrt(root.get_mpz_t(), Int(static_cast<unsigned long>(n + 1)).get_mpz_t());
  bound *= root + 1;
  unsigned K = 1;
  Int pK = static_cast<unsigned long>(p);
  while (pK <= 2 * bound) {
    pK *= static_cast<unsigned long>(p);
    ++K;
  }
  std::vector<ZPoly> lifted = hensel_lift_all(g, facs, p, K);

  std::vector<ZPoly> result;
  ZPoly G = g;
  std::vector<ZPoly> remaining = lifted;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly v{G.back()};
      for (std::size_t i : idx) v = z_mod(z_mul(v, remaining[i]), pK);
      v = primitive_part(z_symmod(v, pK));
      ZPoly quot;
      if (v.size() > 1 && divides_exactly(v, G, quot)) {
        result.push_back(v);
        G = primitive_part(quot);
        std::vector<ZPoly> rest;
        for (std::size_t i = 0, k = 0; i < remaining.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          rest.push_back(remaining[i]);
        }
        remaining = std::move(rest);
        found = true;
        break;
      }
      if (!next_combination(idx, remaining.size())) break;
    }
    if (!found) ++s;
  }
  if (G.size() > 1) result.push_back(G);
  return result;
}

}  // namespace

QPoly Factorization::expand() const {
  QPoly r = QPoly::constant(constant);
  for (auto& [f, e] : factors) r *= pow(f, e);
  return r;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    const Rat& x = a.coeffs()[i];
    const Rat& y = b.coeffs()[i];
    if (x != y) return x < y;
  }
  return false;
}

Factorization factor_over_Q(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no factorization");
  Factorization out;
  out.constant = f.lead();
  for (auto& [s, mult] : squarefree_decomposition(f)) {
    ZPoly g = to_primitive_integer(s);
    for (auto& h : zassenhaus(g)) out.factors.emplace_back(to_qpoly(h).monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

bool is_irreducible_over_Q(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_Q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace qp
