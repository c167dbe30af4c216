#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asmkit {

// All arithmetic in this library is exact.  Rationals are GMP-backed and
// always kept canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_divisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw invalid_input("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_input("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer integer_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw pole_error("rational_pow: 0 to a negative power");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r(integer_pow(base.get_num(), a), integer_pow(base.get_den(), a));
    r.canonicalize();
    if (e < 0) r = Rational(1) / r;
    return r;
}

inline Rational pow2(long e) { return rational_pow(Rational(2), e); }
inline Rational pow3(long e) { return rational_pow(Rational(3), e); }

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// (2n-1)!! = 1*3*5*...*(2n-1), the number of perfect matchings of [2n]
inline Integer odd_double_factorial(unsigned long n) {
    Integer out = 1;
    for (unsigned long k = 1; k <= n; ++k) out *= 2 * k - 1;
    return out;
}

inline std::string to_string(const Rational& r) {
    if (is_integral(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw invalid_input("parse_rational: empty string");
    Rational r;
    if (r.set_str(s, 10) != 0) throw invalid_input("parse_rational: bad literal '" + s + "'");
    if (r.get_den() == 0) throw invalid_input("parse_rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace asmkit
