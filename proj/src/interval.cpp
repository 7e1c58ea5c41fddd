#include "gon/interval.hpp"

#include <cstdlib>

#include "gon/errors.hpp"

namespace gon {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi)
        throw contract_error("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo * b.lo;
    const Rational p2 = a.lo * b.hi;
    const Rational p3 = a.hi * b.lo;
    const Rational p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < lo)
            lo = *p;
        if (*p > hi)
            hi = *p;
    }
    return Interval(lo, hi);
}

Interval operator*(const Interval& a, const Rational& s) {
    if (s >= 0)
        return Interval(a.lo * s, a.hi * s);
    return Interval(a.hi * s, a.lo * s);
}

Interval pow(const Interval& a, int exp) {
    if (exp < 0)
        throw contract_error("negative interval exponent");
    Interval out = Interval::point(1);
    for (int i = 0; i < exp; ++i)
        out = out * a;
    return out;
}

std::optional<int> compare(const Interval& a, const Rational& v) {
    if (a.hi < v)
        return -1;
    if (a.lo > v)
        return 1;
    return std::nullopt;
}

std::optional<int> compare(const Interval& a, const Interval& b) {
    if (a.hi < b.lo)
        return -1;
    if (a.lo > b.hi)
        return 1;
    return std::nullopt;
}

namespace {

// Dyadic bits m such that 1/2^m <= precision.
unsigned bits_for(const Rational& precision) {
    unsigned m = 1;
    Rational w = make_rational(1, 2);
    while (w > precision) {
        w /= 2;
        ++m;
        if (m > 100000)
            throw contract_error("interval precision too small");
    }
    return m;
}

// [n, n+1] / 2^m with n = floor(sqrt(3) * 2^m); 3 * 4^m is never a square,
// so both bounds are strict.
Interval enclose_sqrt3(const Rational& precision) {
    const unsigned m = bits_for(precision);
    Integer scaled = 3;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * m);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, m);
    return Interval(make_rational(root, den), make_rational(root + 1, den));
}

// [n, n+1] / 2^m with 9*n^3 <= 40*8^m < 9*(n+1)^3; 40/9 is not a rational cube.
Interval enclose_cbrt_40_over_9(const Rational& precision) {
    const unsigned m = bits_for(precision);
    Integer forty = 40;
    mpz_mul_2exp(forty.get_mpz_t(), forty.get_mpz_t(), 3 * m);
    Integer approx = forty / 9;
    Integer root;
    mpz_root(root.get_mpz_t(), approx.get_mpz_t(), 3);
    // mpz_root floors an already-floored quotient; settle the bracket exactly.
    while (9 * (root + 1) * (root + 1) * (root + 1) <= forty)
        ++root;
    while (9 * root * root * root > forty)
        --root;
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, m);
    return Interval(make_rational(root, den), make_rational(root + 1, den));
}

// 4 * sum (-1)^k / k!; consecutive partial sums of the alternating series
// bracket 1/e, and the bracket width is 4/(N+1)!.
Interval enclose_four_over_e(const Rational& precision) {
    Rational below = 0, above = 1;  // S_1 = 0 < 1/e < S_0 = 1
    Rational term = 1;              // (-1)^k/k! magnitude
    unsigned k = 1;
    while ((above - below) * 4 > precision) {
        ++k;
        term /= static_cast<unsigned long>(k);
        if (k % 2 == 0)
            above = below + term;
        else
            below = above - term;
        if (k > 100000)
            throw contract_error("series failed to converge");
    }
    return Interval(below * 4, above * 4);
}

}  // namespace

Interval enclose_constant(ConstantName name, const Rational& precision) {
    if (precision <= 0)
        throw contract_error("interval precision must be positive");
    switch (name) {
        case ConstantName::Sqrt3:
            return enclose_sqrt3(precision);
        case ConstantName::Cbrt40Over9:
            return enclose_cbrt_40_over_9(precision);
        case ConstantName::FourOverE:
            return enclose_four_over_e(precision);
    }
    throw contract_error("unknown constant");
}

Rational default_interval_precision() {
    if (const char* env = std::getenv("GON_INTERVAL_PRECISION")) {
        const Rational p = parse_rational(env);
        if (p <= 0)
            throw contract_error("GON_INTERVAL_PRECISION must be positive");
        return p;
    }
    return inverse_power_of_ten(12);
}

std::string to_string(const Interval& a) {
    return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "] ≈ " +
           approx_decimal((a.lo + a.hi) / 2, 9);
}

}  // namespace gon
