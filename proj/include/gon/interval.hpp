#ifndef GON_INTERVAL_HPP
#define GON_INTERVAL_HPP

#include <optional>
#include <string>

#include "gon/rational.hpp"

namespace gon {

/**
 * Closed rational interval [lo, hi] used to pin irrational constants.  The
 * contract everywhere is containment: whatever real number an interval stands
 * for lies between lo and hi, so any comparison decided through an interval is
 * certified.
 */
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h);
    static Interval point(const Rational& v) { return Interval(v, v); }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& s);
/** a^exp for exp >= 0. */
Interval pow(const Interval& a, int exp);

/**
 * Three-way comparison of an interval against an exact rational:
 * -1 / +1 when certified, nothing while the rational lies inside.
 */
std::optional<int> compare(const Interval& a, const Rational& v);
/** Certified comparison of two intervals; nothing when they overlap. */
std::optional<int> compare(const Interval& a, const Interval& b);

enum class ConstantName { FourOverE, Sqrt3, Cbrt40Over9 };

/**
 * Certified enclosure of one of the irrational constants appearing in the
 * lattice-point bounds: 4/e, sqrt(3), or (40/9)^(1/3).  The result contains
 * the true value and has width at most `precision` (> 0).  Tighter precision
 * gives tighter-or-nested enclosures.
 */
Interval enclose_constant(ConstantName name, const Rational& precision);

/** Default precision for interval display and first comparison round (1e-12,
 *  overridable through the GON_INTERVAL_PRECISION environment variable). */
Rational default_interval_precision();

/** "[lo, hi] ≈ d.dddd" rendering: exact endpoints plus a tagged decimal. */
std::string to_string(const Interval& a);

}  // namespace gon

#endif
