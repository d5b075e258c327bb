#pragma once

// Exact scalar arithmetic. All coefficients in the library are either
// arbitrary-precision rationals or elements of a cyclotomic field built
// on top of them; nothing here is ever floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace blob {

using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize on construction, only under arithmetic.
// Every rational that enters the library through raw numerator/denominator
// pairs must pass through here.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace blob
