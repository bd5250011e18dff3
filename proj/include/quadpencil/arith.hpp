#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qp {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }

/// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, "p" when q = 1.
std::string format_rat(const Rat& x);

Rat make_rat(const Int& num, const Int& den);

bool is_probable_prime(const Int& n);

/// Prime factorization of |n| (n != 0). Trial division up to 10^6, then
/// Pollard rho with every prime factor verified. Throws std::runtime_error
/// if a composite cofactor resists rho.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

/// Squarefree integer s with n = s * k^2; the sign of n is kept.
Int squarefree_part(const Int& n);

/// Squarefree integer representing x modulo nonzero rational squares.
Int squarefree_part(const Rat& x);

bool is_rational_square(const Rat& x);

/// Exact square root of a rational square; throws otherwise.
Rat rational_sqrt(const Rat& x);

/// p-adic valuation; x != 0.
int valuation(const Int& x, const Int& p);
int valuation(const Rat& x, const Int& p);

/// Primes dividing the numerator or denominator of x, ascending.
std::vector<Int> prime_support(const Rat& x);

Int lcm_of_denominators(const std::vector<Rat>& xs);

/// Smallest-denominator rational strictly inside (lo, hi), lo < hi.
Rat simplest_between(const Rat& lo, const Rat& hi);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

}  // namespace qp
