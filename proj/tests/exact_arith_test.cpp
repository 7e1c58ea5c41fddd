#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "gon/errors.hpp"
#include "gon/interval.hpp"
#include "gon/matrix.hpp"
#include "gon/rational.hpp"
#include "test_util.hpp"

using namespace gon;
using gon_test::SplitMix64;

namespace {

// Independent determinant oracle: Laplace expansion along the first row.
Rational laplace_det(const RationalMatrix& m) {
    int n = m.rows();
    if (n == 1) return m(0, 0);
    Rational det = 0;
    for (int j = 0; j < n; ++j) {
        RationalMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Rational term = m(0, j) * laplace_det(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

// Bisection oracle for x^3 = a/b on [lo0, hi0], to width <= eps.
Interval cbrt_bisect(const Rational& target, Rational lo, Rational hi, const Rational& eps) {
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid * mid <= target)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

Interval sqrt_bisect(const Rational& target, Rational lo, Rational hi, const Rational& eps) {
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= target)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi);
}

// Oracle enclosure of e by the everywhere-positive series sum 1/k!, with the
// standard remainder bound R_n <= 2/(n+1)!.
Interval e_series(int terms) {
    Rational sum = 0;
    Rational fact = 1;
    for (int k = 0; k <= terms; ++k) {
        if (k > 0) fact *= k;
        sum += Rational(1) / fact;
    }
    Rational rem = Rational(2) / (fact * (terms + 1));
    return Interval(sum, sum + rem);
}

}  // namespace

TEST_CASE("rational round trips") {
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = gon_test::random_rational(rng, 1000, 999);
        Rational b = gon_test::random_rational(rng, 1000, 999);
        CHECK((a + b) - b == a);
        if (b != 0) CHECK((a * b) / b == a);
        CHECK(a - a == 0);
    }
}

TEST_CASE("rational canonical form") {
    Rational q = make_rational(6, -4);
    CHECK(q == make_rational(-3, 2));
    CHECK(q.get_den() == 2);
    CHECK(q.get_num() == -3);
    CHECK_THROWS_AS(make_rational(1, 0), contract_error);
}

TEST_CASE("floor and ceiling toward the right infinities") {
    CHECK(floor_rational(make_rational(7, 2)) == 3);
    CHECK(floor_rational(make_rational(-7, 2)) == -4);
    CHECK(ceil_rational(make_rational(7, 2)) == 4);
    CHECK(ceil_rational(make_rational(-7, 2)) == -3);
    CHECK(floor_rational(Rational(5)) == 5);
    CHECK(ceil_rational(Rational(-5)) == -5);
    CHECK(floor_rational(Rational(0)) == 0);
}

TEST_CASE("integer powers") {
    CHECK(pow_rational(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pow_rational(make_rational(2, 3), 0) == 1);
    CHECK(pow_rational(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(pow_rational(Rational(0), 3) == 0);
}

TEST_CASE("rational parsing accepts p, p/q, -p/q and rejects the rest") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-3/4") == make_rational(-3, 4));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-12") == -12);
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("3/-4"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("a/b"), parse_error);
    CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), parse_error);
}

TEST_CASE("rational formatting round-trips through parse") {
    SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Rational q = gon_test::random_rational(rng, 5000, 4999);
        CHECK(parse_rational(to_string(q)) == q);
    }
    CHECK(to_string(make_rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-7)) == "-7");
}

TEST_CASE("matrix multiply and identity") {
    RationalMatrix a(2, 3, {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
    RationalMatrix i3 = RationalMatrix::identity(3);
    CHECK(a * i3 == a);
    RationalMatrix b(3, 1, {Rational(1), Rational(0), Rational(-1)});
    RationalMatrix ab = a * b;
    CHECK(ab(0, 0) == -2);
    CHECK(ab(1, 0) == -2);
}

TEST_CASE("determinant matches Laplace expansion oracle") {
    SplitMix64 rng(23);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            RationalMatrix m(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m(r, c) = gon_test::random_rational(rng, 6, 4);
            CHECK(m.determinant() == laplace_det(m));
        }
    }
}

TEST_CASE("inverse is exact where it exists") {
    SplitMix64 rng(29);
    int found = 0;
    while (found < 60) {
        int n = static_cast<int>(rng.range(1, 4));
        RationalMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = Rational(rng.range(-5, 5));
        auto inv = m.inverse();
        if (m.determinant() == 0) {
            CHECK(!inv.has_value());
            continue;
        }
        ++found;
        REQUIRE(inv.has_value());
        CHECK(m * *inv == RationalMatrix::identity(n));
        CHECK(*inv * m == RationalMatrix::identity(n));
    }
}

TEST_CASE("rank on constructed examples") {
    RationalMatrix m(3, 3,
                     {Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6),
                      Rational(0), Rational(1), Rational(1)});
    CHECK(m.rank() == 2);
    CHECK(RationalMatrix::identity(4).rank() == 4);
    RationalMatrix z(2, 5);
    CHECK(z.rank() == 0);
}

TEST_CASE("linear solve returns a verifying solution or rejects") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        int n = static_cast<int>(rng.range(1, 4));
        int m_rows = static_cast<int>(rng.range(1, 4));
        RationalMatrix a(m_rows, n);
        for (int r = 0; r < m_rows; ++r)
            for (int c = 0; c < n; ++c) a(r, c) = Rational(rng.range(-3, 3));
        RationalVector x(n);
        for (int c = 0; c < n; ++c) x[c] = Rational(rng.range(-4, 4));
        RationalVector b = a.apply(x);
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == b);
    }
    // x + y = 1 and x + y = 2 cannot both hold.
    RationalMatrix bad(2, 2, {Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(!solve_linear(bad, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("interval arithmetic basics") {
    Interval a(make_rational(1, 2), Rational(1));
    Interval b(Rational(-1), Rational(2));
    Interval s = a + b;
    CHECK(s.lo == make_rational(-1, 2));
    CHECK(s.hi == 3);
    Interval p = a * b;
    CHECK(p.lo == -1);
    CHECK(p.hi == 2);
    Interval sq = pow(b, 2);
    CHECK(sq.lo == -2);  // naive product bound, not the range of x^2; still an enclosure
    CHECK(sq.hi == 4);
    CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), contract_error);
}

TEST_CASE("interval-rational comparison decides or abstains") {
    Interval a(Rational(1), Rational(2));
    CHECK(compare(a, Rational(3)) == -1);
    CHECK(compare(a, Rational(0)) == 1);
    CHECK(!compare(a, make_rational(3, 2)).has_value());
    Interval b(Rational(4), Rational(5));
    CHECK(compare(a, b) == -1);
    CHECK(compare(b, a) == 1);
    CHECK(!compare(a, Interval(Rational(2), Rational(3))).has_value());
}

TEST_CASE("sqrt3 enclosure agrees with bisection oracle") {
    Rational eps = inverse_power_of_ten(12);
    Interval got = enclose_constant(ConstantName::Sqrt3, eps);
    CHECK(got.width() <= eps);
    Interval oracle = sqrt_bisect(Rational(3), Rational(1), Rational(2), eps / 4);
    CHECK(got.lo <= oracle.hi);
    CHECK(oracle.lo <= got.hi);
    // Pin known leading digits: sqrt(3) = 1.7320508075688772935...
    Interval pin = enclose_constant(ConstantName::Sqrt3, inverse_power_of_ten(15));
    CHECK(pin.lo > make_rational(17320508075688, 10000000000000));
    CHECK(pin.hi < make_rational(17320508075689, 10000000000000));
}

TEST_CASE("four-over-e enclosure agrees with an independent e series") {
    Rational eps = inverse_power_of_ten(12);
    Interval got = enclose_constant(ConstantName::FourOverE, eps);
    CHECK(got.width() <= eps);
    Interval e = e_series(25);
    // 4/e from the oracle's e interval, endpoints swapped by the reciprocal.
    Interval oracle(Rational(4) / e.hi, Rational(4) / e.lo);
    CHECK(got.lo <= oracle.hi);
    CHECK(oracle.lo <= got.hi);
    // 4/e = 1.4715177646857692863...
    Interval pin = enclose_constant(ConstantName::FourOverE, inverse_power_of_ten(15));
    CHECK(pin.lo > make_rational(14715177646857, 10000000000000));
    CHECK(pin.hi < make_rational(14715177646858, 10000000000000));
}

TEST_CASE("cbrt(40/9) enclosure agrees with bisection oracle") {
    Rational eps = inverse_power_of_ten(12);
    Interval got = enclose_constant(ConstantName::Cbrt40Over9, eps);
    CHECK(got.width() <= eps);
    Interval oracle = cbrt_bisect(make_rational(40, 9), Rational(1), Rational(2), eps / 4);
    CHECK(got.lo <= oracle.hi);
    CHECK(oracle.lo <= got.hi);
    // cbrt(40/9) = 1.6441413828869800677...
    Interval pin = enclose_constant(ConstantName::Cbrt40Over9, inverse_power_of_ten(15));
    CHECK(pin.lo > make_rational(16441413828869, 10000000000000));
    CHECK(pin.hi < make_rational(16441413828870, 10000000000000));
}

TEST_CASE("enclosures nest as precision tightens") {
    for (ConstantName name :
         {ConstantName::FourOverE, ConstantName::Sqrt3, ConstantName::Cbrt40Over9}) {
        Rational p = make_rational(1, 1000);
        Interval wide = enclose_constant(name, p);
        Interval tight = enclose_constant(name, p / 2);
        CHECK(tight.lo <= wide.hi);
        CHECK(wide.lo <= tight.hi);
        CHECK(tight.lo >= wide.lo - p);
        CHECK(tight.hi <= wide.hi + p);
        CHECK(tight.width() <= p / 2);
    }
    CHECK_THROWS_AS(enclose_constant(ConstantName::Sqrt3, Rational(0)), contract_error);
}

TEST_CASE("default interval precision honors the environment override") {
    // Default with no override is 10^-12 per the documented contract.
    unsetenv("GON_INTERVAL_PRECISION");
    CHECK(default_interval_precision() == inverse_power_of_ten(12));
    setenv("GON_INTERVAL_PRECISION", "1/1000", 1);
    CHECK(default_interval_precision() == make_rational(1, 1000));
    unsetenv("GON_INTERVAL_PRECISION");
}
