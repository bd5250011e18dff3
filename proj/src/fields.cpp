#include "quadpencil/fields.hpp"

#include <sstream>
#include <stdexcept>

#include "quadpencil/factor.hpp"

namespace qp {

// ---------------------------------------------------------------------------
// Number fields

NFElem::NFElem(std::shared_ptr<const QPoly> modulus, QPoly rep) : mod_(std::move(modulus)) {
  rep_ = rep.degree() >= mod_->degree() ? rep % *mod_ : std::move(rep);
}

Rat NFElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("number field element is not rational");
  return rep_.coeff(0);
}

NFElem NFElem::inverse() const {
  if (rep_.is_zero()) throw std::domain_error("inverse of zero in number field");
  XGcd g = xgcd(rep_, *mod_);
  if (g.g.degree() != 0) throw std::domain_error("element not invertible: modulus is reducible");
  return NFElem(mod_, g.s);
}

NFElem operator+(const NFElem& a, const NFElem& b) { return NFElem(a.mod_ ? a.mod_ : b.mod_, a.rep_ + b.rep_); }
NFElem operator-(const NFElem& a, const NFElem& b) { return NFElem(a.mod_ ? a.mod_ : b.mod_, a.rep_ - b.rep_); }
NFElem operator*(const NFElem& a, const NFElem& b) { return NFElem(a.mod_ ? a.mod_ : b.mod_, a.rep_ * b.rep_); }
NFElem operator-(const NFElem& a) { return NFElem(a.mod_, -a.rep_); }

NumberField::NumberField(const QPoly& minpoly) {
  if (minpoly.degree() < 1 || minpoly.lead() != 1) throw std::invalid_argument("minimal polynomial must be monic of degree >= 1");
  if (!is_irreducible_over_Q(minpoly)) throw std::invalid_argument("minimal polynomial is reducible over Q");
  mod_ = std::make_shared<const QPoly>(minpoly);
}

NumberField::NumberField() : mod_(std::make_shared<const QPoly>(QPoly::x())) {}

NumberField NumberField::trusted(const QPoly& minpoly) {
  NumberField k{Trusted{}};
  k.mod_ = std::make_shared<const QPoly>(minpoly.monic());
  return k;
}

NFElem NumberField::eval(const QPoly& p, const NFElem& at) const {
  NFElem acc = zero();
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * at + from_rat(*it);
  return acc;
}

// ---------------------------------------------------------------------------
// Finite fields

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  std::size_t k = m.size() - 1;  // m monic
  for (std::size_t i = r.size(); i-- > k;) {
    std::uint64_t f = r[i];
    if (!f) continue;
    for (std::size_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + (p - f) * m[j]) % p;
  }
  Poly out(r.begin(), r.begin() + std::min(r.size(), k));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  trim(out);
  return out;
}

bool divides(const Poly& d, Poly a, std::uint32_t p) {
  // d monic
  std::size_t k = d.size() - 1;
  trim(a);
  while (a.size() > k) {
    std::uint64_t f = a.back();
    std::size_t sh = a.size() - 1 - k;
    for (std::size_t j = 0; j <= k; ++j) a[sh + j] = static_cast<std::uint32_t>((a[sh + j] + (p - f) * d[j]) % p);
    trim(a);
  }
  return a.empty();
}

Poly decode(std::uint64_t code, std::uint32_t p, std::size_t len) {
  Poly v(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::uint32_t encode(const Poly& v, std::uint32_t p) {
  std::uint64_t c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = c * p + v[i];
  return static_cast<std::uint32_t>(c);
}

bool irreducible_mod_p(const Poly& f, std::uint32_t p) {
  std::size_t k = f.size() - 1;
  if (k <= 1) return k == 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = decode(c, p, d);
      g.push_back(1);
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GFElem operator+(GFElem a, GFElem b) {
  const GFTables* t = a.t_ ? a.t_ : b.t_;
  if (t->k == 1) return GFElem(t, (a.v_ + b.v_) % t->p);
  std::uint32_t code = 0, mul = 1;
  for (std::uint32_t i = 0; i < t->k; ++i) {
    std::uint32_t d = (t->digits[a.v_ * t->k + i] + t->digits[b.v_ * t->k + i]) % t->p;
    code += d * mul;
    mul *= t->p;
  }
  return GFElem(t, code);
}

GFElem operator-(GFElem a) {
  const GFTables* t = a.t_;
  if (t->k == 1) return GFElem(t, (t->p - a.v_) % t->p);
  std::uint32_t code = 0, mul = 1;
  for (std::uint32_t i = 0; i < t->k; ++i) {
    std::uint32_t d = (t->p - t->digits[a.v_ * t->k + i]) % t->p;
    code += d * mul;
    mul *= t->p;
  }
  return GFElem(t, code);
}

GFElem operator-(GFElem a, GFElem b) { return a + (-b); }

GFElem operator*(GFElem a, GFElem b) {
  const GFTables* t = a.t_ ? a.t_ : b.t_;
  if (a.v_ == 0 || b.v_ == 0) return GFElem(t, 0);
  std::uint32_t e = (t->log[a.v_] + t->log[b.v_]) % (t->q - 1);
  return GFElem(t, t->exp[e]);
}

GFElem GFElem::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in finite field");
  std::uint32_t e = (t_->q - 1 - t_->log[v_]) % (t_->q - 1);
  return GFElem(t_, t_->exp[e]);
}

GFElem GFElem::pow(std::uint64_t e) const {
  if (v_ == 0) return GFElem(t_, e == 0 ? 1 : 0);
  std::uint64_t l = (std::uint64_t(t_->log[v_]) * (e % (t_->q - 1))) % (t_->q - 1);
  return GFElem(t_, t_->exp[l]);
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) {
  if (!is_probable_prime(Int(p))) throw std::invalid_argument("finite field characteristic must be prime");
  if (k == 0) throw std::invalid_argument("finite field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 1000000) throw std::invalid_argument("finite field too large");
  }
  auto t = std::make_shared<GFTables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(q);
  // smallest monic irreducible of degree k
  std::uint64_t lowcount = q;  // codes for the k low coefficients
  for (std::uint64_t c = 0; c < lowcount; ++c) {
    Poly f = decode(c, p, k);
    f.push_back(1);
    if (f[0] == 0 && k > 1) continue;
    if (irreducible_mod_p(f, p)) {
      t->modulus = f;
      break;
    }
  }
  t->digits.resize(q * k);
  for (std::uint64_t c = 0; c < q; ++c) {
    Poly v = decode(c, p, k);
    for (std::uint32_t i = 0; i < k; ++i) t->digits[c * k + i] = v[i];
  }
  // primitive element: order q-1 via the prime divisors of q-1
  auto primes = prime_divisors(q - 1);
  auto pw = [&](const Poly& g, std::uint64_t e) {
    Poly r{1}, b = g;
    while (e) {
      if (e & 1) r = mulmod_poly(r, b, t->modulus, p);
      b = mulmod_poly(b, b, t->modulus, p);
      e >>= 1;
    }
    return r;
  };
  Poly gen;
  for (std::uint64_t c = 1; c < q; ++c) {
    Poly g = decode(c, p, k);
    trim(g);
    bool prim = true;
    for (auto r : primes) {
      Poly h = pw(g, (q - 1) / r);
      if (h.size() == 1 && h[0] == 1) {
        prim = false;
        break;
      }
    }
    if (q == 2 || prim) {
      gen = g;
      break;
    }
  }
  t->exp.assign(q, 0);
  t->log.assign(q, 0);
  Poly cur{1};
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    Poly padded = cur;
    padded.resize(k, 0);
    std::uint32_t code = encode(padded, p);
    t->exp[i] = code;
    t->log[code] = static_cast<std::uint32_t>(i);
    cur = mulmod_poly(cur, gen, t->modulus, p);
  }
  t->exp[q - 1] = t->exp[0];
  t_ = std::move(t);
}

GFElem GaloisField::from_int(long long v) const {
  long long p = t_->p;
  long long r = ((v % p) + p) % p;
  return GFElem(t_.get(), static_cast<std::uint32_t>(r));
}

GFElem GaloisField::from_rat(const Rat& x) const {
  Int p(t_->p);
  Int num = x.get_num(), den = x.get_den();
  Int nr = ((num % p) + p) % p, dr = den % p;
  if (dr == 0) throw std::domain_error("denominator divisible by the characteristic");
  return from_int(nr.get_si()) / from_int(dr.get_si());
}

bool GaloisField::is_square(GFElem x) const {
  if (x.code() == 0) return true;
  if (t_->p == 2) return true;
  return t_->log[x.code()] % 2 == 0;
}

std::string GaloisField::name() const {
  std::ostringstream os;
  os << "F_" << t_->q;
  return os.str();
}

// ---------------------------------------------------------------------------
// Rational functions

RatFunc::RatFunc(QPoly num) : num_(std::move(num)) {}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Rat l = den_.lead();
  if (l != 1) {
    num_ = num_.scaled(Rat(1) / l);
    den_ = den_.scaled(Rat(1) / l);
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace qp
