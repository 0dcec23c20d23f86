#pragma once

#include <gmpxx.h>

#include <string>

namespace dress {

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator (GMP keeps mpq_class canonical under arithmetic).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& r) { return sgn(r); }

/// 2^-k as an exact rational (k >= 0).
inline Rational pow2_inverse(int k) {
    return Rational(Integer(1), Integer(1) << k);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace dress
