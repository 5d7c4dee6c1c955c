#pragma once

#include <gmpxx.h>

#include <sstream>
#include <string>

namespace dunkl {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational r(1);
    Rational b = base;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace dunkl
