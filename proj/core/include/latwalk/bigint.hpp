#pragma once

#include <gmpxx.h>

#include <string>

namespace latwalk {

// Exact arithmetic everywhere: arbitrary-precision integers for weights and
// distribution numerators, canonical rationals for reported moments and
// probabilities. Backed by GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// num/den in lowest terms with positive denominator. den must be nonzero.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// floor(sqrt(z)) for z >= 0.
inline BigInt isqrt(const BigInt& z) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

} // namespace latwalk
