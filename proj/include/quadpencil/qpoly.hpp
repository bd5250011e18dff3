#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadpencil/arith.hpp"

namespace qp {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Rat& c);
  static QPoly monomial(const Rat& c, std::size_t degree);
  static QPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& lead() const { return c_.back(); }

  Rat eval(const Rat& t) const;
  QPoly derivative() const;
  QPoly monic() const;
  QPoly scaled(const Rat& s) const;
  /// x^deg * p(1/x) for the given formal degree (deg >= degree()).
  QPoly reversed(std::size_t formal_degree) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator-(const QPoly& a) { return a.scaled(-1); }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);  // exact or truncating quotient

QPoly pow(const QPoly& a, unsigned e);

/// Monic gcd; gcd(0,0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Extended gcd: s*a + t*b = g with g monic.
struct XGcd {
  QPoly g, s, t;
};
XGcd xgcd(const QPoly& a, const QPoly& b);

/// Squarefree decomposition f = lc * prod_i s_i^i with s_i monic, squarefree,
/// pairwise coprime (Yun). Entries with s_i = 1 are omitted.
std::vector<std::pair<QPoly, unsigned>> squarefree_decomposition(const QPoly& f);

QPoly squarefree_part(const QPoly& f);

/// Number of times pi divides f (f != 0, deg pi >= 1).
int poly_valuation(const QPoly& f, const QPoly& pi);

/// Serialization: coefficient arrays, lowest degree first, rational strings.
std::vector<std::string> to_strings(const QPoly& p);
QPoly poly_from_strings(const std::vector<std::string>& xs);

}  // namespace qp
