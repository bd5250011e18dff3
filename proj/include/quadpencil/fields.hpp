#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "quadpencil/arith.hpp"
#include "quadpencil/qpoly.hpp"

namespace qp {

// Each field type F provides:
//   using Elem;  Elem zero() const;  Elem one() const;  Elem from_rat(const Rat&) const;
// and Elem supports + - * / unary-, ==, and is_zero(e).

struct RationalField {
  using Elem = Rat;
  Rat zero() const { return 0; }
  Rat one() const { return 1; }
  Rat from_rat(const Rat& x) const { return x; }
  std::string name() const { return "Q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// ---------------------------------------------------------------------------
// Number fields Q[x]/(m), m monic irreducible over Q.

class NumberField;

class NFElem {
 public:
  NFElem() = default;
  NFElem(std::shared_ptr<const QPoly> modulus, QPoly rep);

  const QPoly& rep() const { return rep_; }
  const QPoly& modulus() const { return *mod_; }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat rational_value() const;  // throws unless is_rational()

  NFElem inverse() const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }
  friend NFElem operator-(const NFElem& a);
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.rep_ == b.rep_; }
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }

  std::string to_string(const std::string& var = "a") const { return rep_.to_string(var); }

 private:
  std::shared_ptr<const QPoly> mod_;
  QPoly rep_;
};

inline bool is_zero(const NFElem& x) { return x.rep().is_zero(); }

class NumberField {
 public:
  using Elem = NFElem;

  /// Q itself, presented as Q[a]/(a).
  NumberField();
  /// minpoly must be monic and irreducible over Q (verified).
  explicit NumberField(const QPoly& minpoly);
  /// Skips the irreducibility check; caller guarantees it.
  static NumberField trusted(const QPoly& minpoly);

  std::size_t degree() const { return static_cast<std::size_t>(mod_->degree()); }
  const QPoly& minpoly() const { return *mod_; }

  NFElem zero() const { return NFElem(mod_, QPoly{}); }
  NFElem one() const { return NFElem(mod_, QPoly::constant(1)); }
  NFElem from_rat(const Rat& x) const { return NFElem(mod_, QPoly::constant(x)); }
  NFElem from_poly(const QPoly& p) const { return NFElem(mod_, p); }
  NFElem generator() const { return NFElem(mod_, QPoly::x()); }
  /// Evaluates a polynomial over Q at an element of this field.
  NFElem eval(const QPoly& p, const NFElem& at) const;

  std::string name() const { return "Q[a]/(" + mod_->to_string("a") + ")"; }
  friend bool operator==(const NumberField& a, const NumberField& b) { return a.minpoly() == b.minpoly(); }

 private:
  struct Trusted {};
  explicit NumberField(Trusted) {}
  std::shared_ptr<const QPoly> mod_;
};

// ---------------------------------------------------------------------------
// Finite fields F_q, q = p^k, p odd prime (p = 2 allowed for k = 1 only where
// an operation says so). Elements are encoded as integers in [0, q) whose
// base-p digits are the coefficients of the polynomial representative.

struct GFTables {
  std::uint32_t p = 0, k = 0, q = 0;
  std::vector<std::uint32_t> modulus;    // monic, degree k, over F_p (lowest first)
  std::vector<std::uint32_t> exp, log;   // w.r.t. a primitive element
  std::vector<std::uint32_t> digits;     // q*k digits
};

class GFElem {
 public:
  GFElem() = default;
  GFElem(const GFTables* t, std::uint32_t v) : t_(t), v_(v) {}
  std::uint32_t code() const { return v_; }
  const GFTables* tables() const { return t_; }

  GFElem inverse() const;
  GFElem pow(std::uint64_t e) const;

  friend GFElem operator+(GFElem a, GFElem b);
  friend GFElem operator-(GFElem a, GFElem b);
  friend GFElem operator*(GFElem a, GFElem b);
  friend GFElem operator/(GFElem a, GFElem b) { return a * b.inverse(); }
  friend GFElem operator-(GFElem a);
  friend bool operator==(GFElem a, GFElem b) { return a.v_ == b.v_; }
  friend bool operator<(GFElem a, GFElem b) { return a.v_ < b.v_; }
  GFElem& operator+=(GFElem o) { return *this = *this + o; }
  GFElem& operator-=(GFElem o) { return *this = *this - o; }
  GFElem& operator*=(GFElem o) { return *this = *this * o; }

 private:
  const GFTables* t_ = nullptr;
  std::uint32_t v_ = 0;
};

inline bool is_zero(GFElem x) { return x.code() == 0; }

/// Element handles point into the field's shared tables; a GaloisField (or a
/// copy of it) must outlive every element it produced.
class GaloisField {
 public:
  using Elem = GFElem;

  /// F_{p^k}; the defining polynomial is the smallest monic irreducible of
  /// degree k under the base-p code order. Requires q = p^k <= 10^6.
  GaloisField(std::uint32_t p, std::uint32_t k = 1);

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->k; }
  std::uint32_t size() const { return t_->q; }
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  GFElem zero() const { return GFElem(t_.get(), 0); }
  GFElem one() const { return GFElem(t_.get(), 1); }
  GFElem element(std::uint32_t code) const { return GFElem(t_.get(), code); }
  GFElem from_int(long long v) const;
  /// Reduction of a rational whose denominator is prime to p.
  GFElem from_rat(const Rat& x) const;
  bool is_square(GFElem x) const;

  std::string name() const;
  friend bool operator==(const GaloisField& a, const GaloisField& b) { return a.t_ == b.t_; }

 private:
  std::shared_ptr<const GFTables> t_;
};

// ---------------------------------------------------------------------------
// Rational functions Q(t), kept as num/den with den monic and gcd 1.

class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(QPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num, QPoly den);
  static RatFunc constant(const Rat& c) { return RatFunc(QPoly::constant(c)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_ = QPoly::constant(1);
};

inline bool is_zero(const RatFunc& x) { return x.num().is_zero(); }

struct FunctionField {
  using Elem = RatFunc;
  RatFunc zero() const { return RatFunc(); }
  RatFunc one() const { return RatFunc::constant(1); }
  RatFunc from_rat(const Rat& x) const { return RatFunc::constant(x); }
  std::string name() const { return "Q(t)"; }
  friend bool operator==(const FunctionField&, const FunctionField&) { return true; }
};

}  // namespace qp
