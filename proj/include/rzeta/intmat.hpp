#ifndef RZETA_INTMAT_HPP
#define RZETA_INTMAT_HPP

#include <cstdint>
#include <vector>

#include "rzeta/numeric.hpp"

namespace rzeta {

/// Fraction-free (Bareiss) determinant over __int128.  Intermediates are
/// k x k minors of the input, bounded by Hadamard: for n <= 8 and |entries|
/// up to ~2 * 10^4 (commutator-matrix lifts included) everything stays well
/// below 2^126.
using int128 = __int128;

inline int128 det_bareiss_i128(std::vector<int128> a, int n) {
    if (n == 0) return 1;
    int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k * n + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i * n + k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

/// Bareiss determinant over BigInt (oracle cross-check path, no overflow caveats).
inline BigInt det_bareiss_big(std::vector<BigInt> a, int n) {
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k * n + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i * n + k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

/// Rank over Q of an r x c integer matrix, by fraction-free elimination.
inline int rank_over_q(std::vector<BigInt> a, int r, int c) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (a[i * c + col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c; ++j) std::swap(a[row * c + j], a[piv * c + j]);
        for (int i = row + 1; i < r; ++i) {
            BigInt f = a[i * c + col];
            if (f == 0) continue;
            BigInt g = a[row * c + col];
            for (int j = col; j < c; ++j)
                a[i * c + j] = a[i * c + j] * g - a[row * c + j] * f;
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace rzeta

#endif
