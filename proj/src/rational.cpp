#include "gon/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "gon/errors.hpp"

namespace gon {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw contract_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Integer floor_rational(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil_rational(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational pow_rational(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0)
            throw contract_error("zero base with negative exponent");
        return pow_rational(1 / base, -exp);
    }
    Rational out = 1;
    Rational b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e > 0) {
        if (e & 1u)
            out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw parse_error("malformed rational '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-')
        throw parse_error("malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0)
        throw parse_error("zero denominator in '" + text + "'");
    return make_rational(Integer(num), d);
}

std::string approx_decimal(const Rational& q, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, q.get_d());
    return buf;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw contract_error("dot product dimension mismatch");
    Rational out = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        out += a[i] * b[i];
    return out;
}

Rational inverse_power_of_ten(unsigned exponent) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, exponent);
    return make_rational(Integer(1), p);
}

}  // namespace gon
