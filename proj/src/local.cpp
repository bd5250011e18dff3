#include "quadpencil/local.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "quadpencil/factor.hpp"
#include "quadpencil/sturm.hpp"

namespace qp {

namespace {

RationalField Q;

// x = p^v * u with u a p-adic unit; returns (v, u) with u an integer
// (numerator times denominator, which has the same class mod squares and the
// same residues up to squares of units).
std::pair<int, Int> split_unit(const Rat& x, const Int& p) {
  Int num = x.get_num(), den = x.get_den();
  int v = valuation(num, p) - valuation(den, p);
  Int pv;
  mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(valuation(num, p)));
  num /= pv;
  mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(valuation(den, p)));
  den /= pv;
  return {v, Int(num * den)};
}

int legendre(const Int& u, const Int& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

int mod8(const Int& u) {
  Int r = u % 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si());
}

Rat disc_of(const std::vector<Rat>& d) {
  Rat r = 1;
  for (auto& x : d) r *= x;
  return r;
}

bool isotropic_from_invariants(std::size_t n, const Rat& d, int eps, const Place& v) {
  switch (n) {
    case 0:
    case 1:
      return false;
    case 2:
      return is_local_square(-d, v);
    case 3:
      return eps == hilbert_symbol(-1, -d, v);
    case 4:
      return !is_local_square(d, v) || eps == hilbert_symbol(-1, -1, v);
    default:
      return true;
  }
}

}  // namespace

Place Place::Prime(const Int& p) {
  if (p < 2 || !is_probable_prime(p)) throw std::invalid_argument("place must be a prime: " + p.get_str());
  Place v;
  v.real = false;
  v.p = p;
  return v;
}

std::string Place::to_string() const { return real ? "inf" : p.get_str(); }

bool place_less(const Place& a, const Place& b) {
  if (a.real != b.real) return a.real;
  return a.p < b.p;
}

bool is_local_square(const Rat& x, const Place& v) {
  if (is_zero(x)) throw std::invalid_argument("zero has no square class");
  if (v.real) return sgn(x) > 0;
  auto [e, u] = split_unit(x, v.p);
  if (e % 2 != 0) return false;
  if (v.p == 2) return mod8(u) == 1;
  return legendre(u, v.p) == 1;
}

Int local_square_class(const Rat& x, const Place& v) {
  if (is_zero(x)) throw std::invalid_argument("zero has no square class");
  if (v.real) return sgn(x) > 0 ? 1 : -1;
  auto [e, u] = split_unit(x, v.p);
  Int rep;
  if (v.p == 2) {
    int r = mod8(u);
    rep = r > 4 ? r - 8 : r;  // 1, 3, -3, -1
  } else if (legendre(u, v.p) == 1) {
    rep = 1;
  } else {
    rep = 2;
    while (legendre(rep, v.p) != -1) ++rep;
  }
  return (e % 2 != 0) ? Int(rep * v.p) : rep;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (is_zero(a) || is_zero(b)) throw std::invalid_argument("hilbert symbol of zero");
  if (v.real) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  auto [alpha, u] = split_unit(a, v.p);
  auto [beta, w] = split_unit(b, v.p);
  int exponent = 0;
  int result = 1;
  if (v.p == 2) {
    int u8 = mod8(u), w8 = mod8(w);
    auto eps = [](int x) { return ((x - 1) / 2) & 1; };
    auto omega = [](int x) { return ((x * x - 1) / 8) & 1; };
    exponent = eps(u8) * eps(w8) + (alpha & 1) * omega(w8) + (beta & 1) * omega(u8);
  } else {
    Int half = (v.p - 1) / 2;
    int eps_p = static_cast<int>(Int(half % 2).get_si());
    exponent = (alpha & 1) * (beta & 1) * eps_p;
    if (beta & 1) result *= legendre(u, v.p);
    if (alpha & 1) result *= legendre(w, v.p);
  }
  return (exponent & 1) ? -result : result;
}

int hasse_invariant(const std::vector<Rat>& d, const Place& v) {
  int h = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) h *= hilbert_symbol(d[i], d[j], v);
  return h;
}

std::size_t witt_index_from_diagonal(const std::vector<Rat>& d, const Place& v) {
  if (v.real) {
    std::size_t pos = 0;
    for (auto& x : d) pos += sgn(x) > 0;
    return std::min(pos, d.size() - pos);
  }
  std::size_t n = d.size();
  Rat disc = disc_of(d);
  int eps = hasse_invariant(d, v);
  std::size_t index = 0;
  // q = H ⊥ q' gives disc(q') = -disc(q), hasse(q') = hasse(q) (-1, disc(q'))
  while (isotropic_from_invariants(n, disc, eps, v)) {
    ++index;
    n -= 2;
    disc = -disc;
    if (n > 0) eps *= hilbert_symbol(-1, disc, v);
    else eps = 1;
  }
  return index;
}

WittData witt_index_local(const RatMatrix& q, const Place& v) {
  require_symmetric(q, "form");
  auto d = nonzero_diagonal(q);
  WittData w;
  w.place = v;
  w.dim = d.size();
  w.radical_dim = q.rows() - d.size();
  w.disc.r = d.empty() ? Int(1) : local_square_class(disc_of(d), v);
  w.hasse = hasse_invariant(d, v);
  if (v.real) w.signature = signature(q);
  w.witt_index = witt_index_from_diagonal(d, v);
  return w;
}

std::vector<Place> checking_places(const std::vector<Rat>& diagonal) {
  std::vector<Int> primes{2};
  for (auto& x : diagonal)
    for (auto& p : prime_support(x)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{Place::Real()};
  for (auto& p : primes) out.push_back(Place::Prime(p));
  return out;
}

GlobalSplitting splits_m_hyperbolic_global(const RatMatrix& q, std::size_t m) {
  require_symmetric(q, "form");
  auto d = nonzero_diagonal(q);
  if (d.size() != q.rows()) throw std::invalid_argument("degenerate form");
  std::size_t n = d.size();
  GlobalSplitting g;
  auto places = checking_places(d);
  for (auto& v : places) g.places.push_back(witt_index_local(q, v));
  if (2 * m > n) {
    g.reason = "m exceeds dim/2";
    return g;
  }
  for (auto& w : g.places)
    if (w.witt_index < m) {
      g.reason = "Witt index " + std::to_string(w.witt_index) + " < " + std::to_string(m) + " at " + w.place.to_string();
      return g;
    }
  // Outside the checking set every d_i is a unit, so the form is unimodular
  // at an odd prime: its anisotropic part has dimension <= 2.
  for (auto& x : d)
    for (auto& p : prime_support(x))
      if (std::none_of(places.begin(), places.end(), [&](const Place& v) { return !v.real && v.p == p; }))
        throw std::logic_error("checking set misses a prime of the diagonal");
  std::size_t guaranteed = (n - 1) / 2;
  if (m > guaranteed) {
    // n even, m = n/2: hyperbolic at p iff (-1)^{n/2} disc is a square in
    // Q_p; holding at all but finitely many p forces a rational square.
    Rat signed_disc = disc_of(d);
    if ((n / 2) % 2 == 1) signed_disc = -signed_disc;
    if (!is_rational_square(signed_disc)) {
      g.reason = "discriminant is not hyperbolic at infinitely many primes";
      return g;
    }
  }
  g.splits = true;
  return g;
}

bool isotropic_over_Q(const RatMatrix& q) {
  require_symmetric(q, "form");
  auto d = nonzero_diagonal(q);
  if (d.empty()) throw std::invalid_argument("zero form");
  if (d.size() < q.rows()) return true;  // a radical vector is isotropic
  return splits_m_hyperbolic_global(q, 1).splits;
}

// ---------------------------------------------------------------------------

IntQuadric::IntQuadric(const RatMatrix& gram) : n(gram.rows()), c(n, std::vector<Int>(n, Int(0))) {
  require_symmetric(gram, "form");
  std::vector<Rat> coeffs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) coeffs.push_back(i == j ? gram(i, j) : Rat(2 * gram(i, j)));
  Int l = lcm_of_denominators(coeffs), content = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat s = coeffs[k++] * l;
      c[i][j] = s.get_num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c[i][j].get_mpz_t());
    }
  if (content != 0)
    for (auto& row : c)
      for (auto& x : row) x /= content;
}

Int IntQuadric::eval(const std::vector<Int>& x) const {
  Int s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = i; j < n; ++j) row += c[i][j] * x[j];
    s += x[i] * row;
  }
  return s;
}

Int IntQuadric::partial(const std::vector<Int>& x, std::size_t i) const {
  Int s = 2 * c[i][i] * x[i];
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    s += (j > i ? c[i][j] : c[j][i]) * x[j];
  }
  return s;
}

namespace {

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

LocalSearchResult local_point_search_intersection(const Pencil& X, const Int& p, int precision) {
  if (p < 2 || !is_probable_prime(p)) throw std::invalid_argument("p must be prime");
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(precision));
  if (pk > Int("1000000000000000000")) throw std::invalid_argument("precision too large");
  std::size_t n = X.n();
  Int count;
  mpz_pow_ui(count.get_mpz_t(), p.get_mpz_t(), n);
  if (count > 10000000) throw std::invalid_argument("enumeration too large");

  IntQuadric F(X.F()), G(X.G());
  LocalSearchResult res;
  res.p = p;
  res.precision = precision;
  long pl = p.get_si();

  std::vector<Int> x(n, Int(0));
  // canonical projective representatives: first nonzero coordinate is 1
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<long> digits(n - lead - 1, 0);
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) x[i] = i < lead ? 0 : i == lead ? 1 : digits[i - lead - 1];
      if (mod_pos(F.eval(x), p) == 0 && mod_pos(G.eval(x), p) == 0) {
        // Jacobian rank 2 mod p: find an invertible 2x2 minor
        std::vector<Int> df(n), dg(n);
        for (std::size_t i = 0; i < n; ++i) {
          df[i] = mod_pos(F.partial(x, i), p);
          dg[i] = mod_pos(G.partial(x, i), p);
        }
        for (std::size_t i = 0; i < n && !res.found; ++i)
          for (std::size_t j = i + 1; j < n && !res.found; ++j) {
            Int minor = mod_pos(df[i] * dg[j] - df[j] * dg[i], p);
            if (minor == 0) continue;
            Int inv;
            mpz_invert(inv.get_mpz_t(), minor.get_mpz_t(), p.get_mpz_t());
            // linear Hensel steps p^s -> p^{s+1}
            Int ps = p;
            for (int s = 1; s < precision; ++s) {
              Int rf = F.eval(x) / ps, rg = G.eval(x) / ps;
              // solve [df_i df_j; dg_i dg_j] (a, b) = -(rf, rg) mod p
              Int a = mod_pos(-(dg[j] * rf - df[j] * rg) * inv, p);
              Int b = mod_pos(-(df[i] * rg - dg[i] * rf) * inv, p);
              x[i] += ps * a;
              x[j] += ps * b;
              ps *= p;
            }
            for (auto& xi : x) xi = mod_pos(xi, pk);
            if (mod_pos(F.eval(x), pk) != 0 || mod_pos(G.eval(x), pk) != 0)
              throw std::logic_error("Hensel lift failed");
            res.found = true;
            res.point = x;
          }
        if (res.found) return res;
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == pl) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------

namespace {

// Rows of `basis` (RREF) span W; returns the RREF basis of {x in W : q|W x = 0}.
RatMatrix kernel_inside(const RatMatrix& basis, const RatMatrix& restricted) {
  auto k = form_kernel(Q, restricted);
  RatMatrix out(k.dim(), basis.cols(), Rat(0));
  for (std::size_t r = 0; r < k.dim(); ++r)
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (is_zero(k.basis(r, i))) continue;
      for (std::size_t c = 0; c < basis.cols(); ++c) out(r, c) += k.basis(r, i) * basis(i, c);
    }
  return rref(Q, out).R;
}

std::vector<std::pair<Rat, Rat>> probe_members(const RatMatrix& F, const RatMatrix& G) {
  std::vector<std::pair<Rat, Rat>> out{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  QPoly chi = det_pencil_poly(F, G);
  if (chi.degree() <= 0) return out;
  QPoly sf = squarefree_part(chi);
  for (auto& [f, e] : factor_over_Q(sf).factors)
    if (f.degree() == 1) out.emplace_back(1, -f.coeff(0) / f.coeff(1));
  auto roots = separate(sf, isolate_real_roots(sf));
  if (!roots.empty()) {
    out.emplace_back(1, simplest_between(roots.front().lo - 1, roots.front().lo));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) out.emplace_back(1, simplest_between(roots[i].hi, roots[i + 1].lo));
    out.emplace_back(1, simplest_between(roots.back().hi, roots.back().hi + 1));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Int>> rational_point_search(const Pencil& X, long height_bound) {
  if (height_bound < 1) throw std::invalid_argument("height bound must be >= 1");
  std::size_t n = X.n();
  RatMatrix W = identity(Q, n);
  // shrink W to the kernel of semidefinite members until none remains
  for (bool shrunk = true; shrunk && W.rows() > 0;) {
    shrunk = false;
    Subspace<Rat> sub{n, W};
    RatMatrix FW = restrict_form(Q, X.F(), sub), GW = restrict_form(Q, X.G(), sub);
    for (auto& [l, m] : probe_members(FW, GW)) {
      RatMatrix M = add(Q, scale(Q, l, FW), scale(Q, m, GW));
      auto s = signature(M);
      if (s.first + s.second == 0) continue;
      if (s.first != 0 && s.second != 0) continue;
      W = kernel_inside(W, M);
      shrunk = true;
      break;
    }
  }
  std::size_t d = W.rows();
  if (d == 0) return std::nullopt;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < d; ++r) {
    std::size_t c = 0;
    while (is_zero(W(r, c))) ++c;
    pivots.push_back(c);
  }
  IntQuadric F(X.F()), G(X.G());
  double total = 0;
  std::vector<Int> x(n);
  for (long h = 1; h <= height_bound; ++h) {
    total += std::pow(2.0 * h + 1, static_cast<double>(d));
    if (total > 5e7) throw std::invalid_argument("search too large");
    std::vector<long> y(d, -h);
    for (;;) {
      long top = 0;
      for (auto v : y) top = std::max(top, std::labs(v));
      if (top == h) {
        bool ok = true;
        for (std::size_t c = 0; c < n && ok; ++c) {
          Rat s = 0;
          for (std::size_t r = 0; r < d; ++r)
            if (y[r] != 0) s += y[r] * W(r, c);
          if (s.get_den() != 1 || abs(s) > height_bound) ok = false;
          else x[c] = s.get_num();
        }
        if (ok) {
          Int g = 0;
          for (auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
          if (g == 1 && F.eval(x) == 0 && G.eval(x) == 0) {
            auto first = std::find_if(x.begin(), x.end(), [](const Int& v) { return v != 0; });
            if (*first < 0)
              for (auto& v : x) v = -v;
            return x;
          }
        }
      }
      std::size_t k = 0;
      while (k < d && ++y[k] > h) y[k++] = -h;
      if (k == d) break;
    }
  }
  return std::nullopt;
}

}  // namespace qp
