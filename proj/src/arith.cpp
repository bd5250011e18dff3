#include "quadpencil/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace qp {

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Int rho(const Int& n, unsigned long c) {
  if (n % 2 == 0) return 2;
  Int y = 2, x, g = 1, q = 1, ys;
  auto f = [&](const Int& v) {
    Int r = v * v + c;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
  };
  unsigned long r = 1;
  const unsigned long m = 128;
  const unsigned long max_r = 1ul << 22;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        Int d = abs(x - y);
        q = (q * d) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    if (r > max_r) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Int d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

void split_composite(const Int& n, std::map<Int, unsigned>& acc) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    acc[n] += 1;
    return;
  }
  for (unsigned long c = 1; c < 64; ++c) {
    Int d = rho(n, c);
    if (d != 0 && d != 1 && d != n) {
      split_composite(d, acc);
      split_composite(n / d, acc);
      return;
    }
  }
  throw std::runtime_error("failed to factor integer " + n.get_str());
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  Int num, den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_int(text, num)
                : parse_int(text.substr(0, slash), num) && parse_int(text.substr(slash + 1), den);
  if (!ok) throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return make_rat(num, den);
}

std::string format_rat(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n_in) {
  if (n_in == 0) throw std::invalid_argument("cannot factor zero");
  Int n = abs(n_in);
  std::map<Int, unsigned> acc;
  for (unsigned long p = 2; p <= 1000000ul && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      acc[Int(p)] += 1;
      n /= p;
    }
  }
  if (n > 1) split_composite(n, acc);
  return {acc.begin(), acc.end()};
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw std::invalid_argument("square class of zero is undefined");
  Int s = sgn(n) < 0 ? -1 : 1;
  for (auto& [p, e] : factor_integer(n))
    if (e % 2 == 1) s *= p;
  return s;
}

Int squarefree_part(const Rat& x) {
  if (is_zero(x)) throw std::invalid_argument("square class of zero is undefined");
  return squarefree_part(Int(x.get_num() * x.get_den()));
}

bool is_rational_square(const Rat& x) {
  if (sgn(x) < 0) return false;
  if (sgn(x) == 0) return true;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) && mpz_perfect_square_p(x.get_den().get_mpz_t());
}

Rat rational_sqrt(const Rat& x) {
  if (!is_rational_square(x)) throw std::domain_error("not a rational square: " + format_rat(x));
  Int a, b;
  mpz_sqrt(a.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), x.get_den().get_mpz_t());
  return make_rat(a, b);
}

int valuation(const Int& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  Int t = x;
  int v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    t /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat& x, const Int& p) { return valuation(x.get_num(), p) - valuation(x.get_den(), p); }

std::vector<Int> prime_support(const Rat& x) {
  std::vector<Int> out;
  for (auto& [p, e] : factor_integer(x.get_num())) out.push_back(p);
  if (x.get_den() != 1)
    for (auto& [p, e] : factor_integer(x.get_den())) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int lcm_of_denominators(const std::vector<Rat>& xs) {
  Int l = 1;
  for (auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
  if (sgn(hi) <= 0) return -simplest_between(-hi, -lo);
  Int n = floor_rat(lo);
  if (Rat(n + 1) < hi) return Rat(n + 1);
  if (lo == Rat(n)) {
    Rat gap = hi - n;
    Int k = floor_rat(Rat(1) / gap) + 1;
    return Rat(n) + Rat(1) / Rat(k);
  }
  return Rat(n) + Rat(1) / simplest_between(Rat(1) / (hi - n), Rat(1) / (lo - n));
}

}  // namespace qp
