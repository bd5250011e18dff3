#include "quadpencil/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qp {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && qp::is_zero(c_.back())) c_.pop_back();
}

Rat QPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rat(1) / lead());
}

QPoly QPoly::scaled(const Rat& s) const {
  if (qp::is_zero(s)) return {};
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= s;
  return QPoly(std::move(v));
}

QPoly QPoly::reversed(std::size_t formal_degree) const {
  if (is_zero()) return {};
  if (static_cast<int>(formal_degree) < degree()) throw std::invalid_argument("reversed: formal degree too small");
  std::vector<Rat> v(formal_degree + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[formal_degree - i] = c_[i];
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (qp::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (qp::is_zero(c)) continue;
    Rat a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = a == 1;
    if (!unit || i == 0) {
      bool paren = a.get_den() != 1 && i > 0;
      if (paren) os << "(";
      os << format_rat(a);
      if (paren) os << ")";
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
  Rat inv_lead = Rat(1) / b.lead();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Rat f = r[i + b.degree()] * inv_lead;
    q[i] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= f * bc[j];
  }
  r.resize(b.degree() > 0 ? b.degree() : 0);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

QPoly pow(const QPoly& a, unsigned e) {
  QPoly r = QPoly::constant(1), base = a;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

XGcd xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly{}, QPoly{}, QPoly{}};
  Rat inv = Rat(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::vector<std::pair<QPoly, unsigned>> squarefree_decomposition(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
  std::vector<std::pair<QPoly, unsigned>> out;
  if (f.degree() == 0) return out;
  QPoly fm = f.monic();
  QPoly a = gcd(fm, fm.derivative());
  QPoly b = fm / a;
  QPoly c = fm.derivative() / a;
  QPoly dd = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    QPoly g = gcd(b, dd);
    if (g.degree() > 0) out.emplace_back(g, i);
    QPoly nb = b / g;
    c = dd / g;
    b = nb;
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

QPoly squarefree_part(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  if (f.degree() <= 0) return QPoly::constant(1);
  QPoly fm = f.monic();
  return fm / gcd(fm, fm.derivative());
}

int poly_valuation(const QPoly& f, const QPoly& pi) {
  if (f.is_zero()) throw std::invalid_argument("valuation of zero polynomial");
  if (pi.degree() < 1) throw std::invalid_argument("valuation needs a nonconstant uniformizer");
  int v = 0;
  QPoly g = f;
  for (;;) {
    auto [q, r] = divmod(g, pi);
    if (!r.is_zero()) return v;
    g = std::move(q);
    ++v;
  }
}

std::vector<std::string> to_strings(const QPoly& p) {
  std::vector<std::string> out;
  for (auto& c : p.coeffs()) out.push_back(format_rat(c));
  return out;
}

QPoly poly_from_strings(const std::vector<std::string>& xs) {
  std::vector<Rat> v;
  for (auto& s : xs) v.push_back(parse_rat(s));
  return QPoly(std::move(v));
}

}  // namespace qp
