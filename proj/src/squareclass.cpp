#include "quadpencil/squareclass.hpp"

#include <sstream>
#include <stdexcept>

namespace qp {

namespace {

Int pick_rational_rep(const Int& r, const Int& d) {
  Int a = squarefree_part(Rat(r));
  if (d == 0) return a;
  Int b = squarefree_part(Rat(a * d));
  Int aa = abs(a), bb = abs(b);
  if (aa < bb) return a;
  if (bb < aa) return b;
  return a > b ? a : b;
}

}  // namespace

std::string SquareClass::to_string() const {
  if (rational) return r.get_str();
  std::ostringstream os;
  os << format_rat(u) << (sgn(v) < 0 ? "-" : "+") << format_rat(abs(v)) << "*sqrt(" << d.get_str() << ")";
  return os.str();
}

SquareClass square_class(const Rat& x) {
  if (is_zero(x)) throw std::invalid_argument("square class of zero");
  SquareClass c;
  c.r = squarefree_part(x);
  return c;
}

bool is_square_in_quadratic_field(const Rat& u, const Rat& v, const Rat& d) {
  if (is_rational_square(d)) throw std::invalid_argument("d must not be a rational square");
  if (is_zero(u) && is_zero(v)) throw std::invalid_argument("square test of zero");
  if (is_zero(v)) return is_rational_square(u) || is_rational_square(u / d);
  Rat n = u * u - d * v * v;
  if (!is_rational_square(n)) return false;
  Rat w = rational_sqrt(n);
  for (const Rat& s : {Rat((u + w) / 2), Rat((u - w) / 2)}) {
    if (is_zero(s) || !is_rational_square(s)) continue;
    Rat x = rational_sqrt(s);
    Rat y = v / (2 * x);
    if (x * x + d * y * y == u && 2 * x * y == v) return true;
  }
  return false;
}

SquareClass square_class_quadratic(const Rat& u, const Rat& v, const Int& d) {
  if (is_zero(u) && is_zero(v)) throw std::invalid_argument("square class of zero");
  if (d == 0 || d == 1 || squarefree_part(d) != d) throw std::invalid_argument("d must be squarefree, not 0 or 1");
  SquareClass c;
  c.d = d;
  if (is_zero(v)) {
    c.r = pick_rational_rep(squarefree_part(u), d);
    return c;
  }
  Rat n = u * u - Rat(d) * v * v;
  if (is_rational_square(n)) {
    Rat w = rational_sqrt(n);
    Rat s = u + w;
    if (is_zero(s)) s = u - w;
    c.r = pick_rational_rep(squarefree_part(2 * s), d);
    return c;
  }
  // Scale by a rational square so that (u, v) become coprime integers with
  // squarefree common content.
  Int den = lcm_of_denominators({u, v});
  Rat uu = u * Rat(den) * Rat(den), vv = v * Rat(den) * Rat(den);
  Int g;
  mpz_gcd(g.get_mpz_t(), Int(uu.get_num()).get_mpz_t(), Int(vv.get_num()).get_mpz_t());
  Int sq = 1;
  for (auto& [p, e] : factor_integer(g))
    for (unsigned i = 0; i + 1 < e; i += 2) sq *= p;
  Rat s = Rat(sq) * Rat(sq);
  c.rational = false;
  c.r = 0;
  c.u = uu / s;
  c.v = vv / s;
  return c;
}

QuadraticCoords quadratic_coords(const NFElem& x) {
  const QPoly& m = x.modulus();
  if (m.degree() != 2) throw std::invalid_argument("not a quadratic field");
  // m = a^2 + b a + c; a = (-b + sqrt D)/2 with D = b^2 - 4c = s k^2.
  Rat b = m.coeff(1), c0 = m.coeff(0);
  Rat D = b * b - 4 * c0;
  Int s = squarefree_part(D);
  Rat k = rational_sqrt(D / Rat(s));
  Rat p0 = x.rep().coeff(0), p1 = x.rep().coeff(1);
  // p0 + p1 * a = (p0 - p1 b/2) + (p1 k / 2) sqrt s
  return {p0 - p1 * b / 2, p1 * k / 2, s};
}

SquareClass square_class(const NFElem& x) {
  if (is_zero(x)) throw std::invalid_argument("square class of zero");
  int deg = x.modulus().degree();
  if (deg == 1) return square_class(x.rational_value());
  if (deg != 2) throw std::invalid_argument("unsupported residue field degree");
  auto q = quadratic_coords(x);
  return square_class_quadratic(q.u, q.v, q.d);
}

bool is_square(const NFElem& x) {
  if (is_zero(x)) return true;
  int deg = x.modulus().degree();
  if (deg == 1) return is_rational_square(x.rational_value());
  if (deg != 2) throw std::invalid_argument("unsupported residue field degree");
  auto q = quadratic_coords(x);
  return is_square_in_quadratic_field(q.u, q.v, Rat(q.d));
}

bool same_square_class(const SquareClass& a, const SquareClass& b) {
  if (a.d != b.d) throw std::invalid_argument("square classes over different fields");
  if (a.rational && b.rational) return a.r == b.r;
  auto as = [](const SquareClass& c) { return c.rational ? std::pair<Rat, Rat>{Rat(c.r), 0} : std::pair<Rat, Rat>{c.u, c.v}; };
  auto [u1, v1] = as(a);
  auto [u2, v2] = as(b);
  Rat d(a.d);
  return is_square_in_quadratic_field(u1 * u2 + d * v1 * v2, u1 * v2 + u2 * v1, d);
}

}  // namespace qp
