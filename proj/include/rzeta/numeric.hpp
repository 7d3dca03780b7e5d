#ifndef RZETA_NUMERIC_HPP
#define RZETA_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace rzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt bigpow(const BigInt& base, unsigned long exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// q^e for possibly negative e, as an exact rational.
inline Rational qpow(const Rational& q, long e) {
    if (e >= 0) {
        Rational r = 1;
        for (long i = 0; i < e; ++i) r *= q;
        return r;
    }
    Rational r = 1;
    for (long i = 0; i < -e; ++i) r *= q;
    return Rational(1) / r;
}

inline uint64_t upow(uint64_t base, unsigned exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace rzeta

#endif
