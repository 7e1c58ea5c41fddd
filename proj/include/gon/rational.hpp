#ifndef GON_RATIONAL_HPP
#define GON_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gon {

// Exact scalars.  mpq_class results of arithmetic are always canonical
// (lowest terms, positive denominator), which is the invariant the whole
// library relies on; make_rational is the one safe way to build a rational
// from a numerator/denominator pair.
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/** Canonical rational from a numerator/denominator pair; den must be nonzero. */
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/** Floor toward minus infinity, exact. */
Integer floor_rational(const Rational& q);
/** Ceiling toward plus infinity, exact. */
Integer ceil_rational(const Rational& q);

/** base^exp for integer exp (negative exp requires base != 0). */
Rational pow_rational(const Rational& base, int exp);

/** Canonical text form: "p" or "p/q" with q > 1. */
std::string to_string(const Rational& q);

/** Accepts "p", "p/q" and "-p/q"; rejects q = 0 and malformed text. */
Rational parse_rational(const std::string& text);

/** Decimal rendering of an exact rational, for display only (tagged by callers). */
std::string approx_decimal(const Rational& q, int digits = 6);

Rational dot(const RationalVector& a, const RationalVector& b);

/** 10^-exponent as an exact rational. */
Rational inverse_power_of_ten(unsigned exponent);

}  // namespace gon

#endif
