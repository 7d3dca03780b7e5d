#include "rzeta/eldiv.hpp"

#include <algorithm>
#include <stdexcept>

#include "rzeta/intmat.hpp"

namespace rzeta {

DivisorProfile antisym_profile(const uint64_t* M, int d, const ResidueRing& R,
                               ProfileWorkspace& ws) {
    const uint64_t mod = R.modulus();
    const uint32_t n = R.n();
    const uint32_t p = R.p();
    ws.m.assign(M, M + static_cast<size_t>(d) * d);
    uint64_t* a = ws.m.data();
    for (int i = 0; i < d; ++i) {
        if (a[i * d + i] != 0) throw std::invalid_argument("antisym_profile: nonzero diagonal");
        for (int j = i + 1; j < d; ++j)
            if (R.add(a[i * d + j], a[j * d + i]) != 0)
                throw std::invalid_argument("antisym_profile: not antisymmetric");
    }

    DivisorProfile prof;
    prof.level = static_cast<uint8_t>(n);
    prof.len = static_cast<uint8_t>(d / 2);
    int out = 0;
    int lo = 0;
    while (d - lo >= 2) {
        // lexicographically first entry of minimal valuation in the active block
        uint32_t best_v = n;
        int bi = -1, bj = -1;
        for (int i = lo; i < d && best_v > 0; ++i)
            for (int j = i + 1; j < d; ++j) {
                uint64_t x = a[i * d + j];
                if (x == 0) continue;
                uint32_t v = 0;
                while (x % p == 0) { x /= p; ++v; }
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (bi < 0) break; // active block is zero: remaining entries are n
        // move pivot to (lo, lo+1) by row+column swaps
        auto swap_rc = [&](int r, int s) {
            if (r == s) return;
            for (int k = 0; k < d; ++k) std::swap(a[r * d + k], a[s * d + k]);
            for (int k = 0; k < d; ++k) std::swap(a[k * d + r], a[k * d + s]);
        };
        swap_rc(bi, lo);
        if (bj == lo) bj = bi; // pivot column displaced by the first swap
        swap_rc(bj, lo + 1);
        const uint64_t pv = R.pow_p(best_v);
        // scale row/col lo so the pivot becomes exactly p^v
        uint64_t u = a[lo * d + lo + 1] / pv;
        uint64_t uinv = R.inv(u % mod);
        for (int k = 0; k < d; ++k) a[lo * d + k] = R.mul(a[lo * d + k], uinv);
        for (int k = 0; k < d; ++k) a[k * d + lo] = R.mul(a[k * d + lo], uinv);
        // clear the pivot pair's row and column in the complement
        for (int k = lo + 2; k < d; ++k) {
            uint64_t alpha = a[k * d + lo] / pv; // val >= best_v, division exact
            if (alpha) {
                uint64_t am = alpha % mod;
                for (int t = 0; t < d; ++t)
                    a[k * d + t] = R.add(a[k * d + t], R.mul(am, a[(lo + 1) * d + t]));
                for (int t = 0; t < d; ++t)
                    a[t * d + k] = R.add(a[t * d + k], R.mul(am, a[t * d + lo + 1]));
            }
            uint64_t beta = R.neg(a[k * d + lo + 1]) / pv;
            if (beta) {
                uint64_t bm = beta % mod;
                for (int t = 0; t < d; ++t)
                    a[k * d + t] = R.add(a[k * d + t], R.mul(bm, a[lo * d + t]));
                for (int t = 0; t < d; ++t)
                    a[t * d + k] = R.add(a[t * d + k], R.mul(bm, a[t * d + lo]));
            }
        }
        prof.a[out++] = static_cast<uint8_t>(best_v);
        lo += 2;
    }
    while (out < prof.len) prof.a[out++] = static_cast<uint8_t>(n);
    std::sort(prof.a.begin(), prof.a.begin() + prof.len);
    return prof;
}

std::vector<int64_t> principal_minor_valuations(const std::vector<int64_t>& M, int d,
                                                uint32_t p, bool use_bigint) {
    const int half = d / 2;
    std::vector<int64_t> vals(half, -1); // -1: every minor vanishes over Z
    std::vector<int> idx;
    std::vector<int128> sub;
    std::vector<BigInt> subb;
    for (int j = 1; j <= half; ++j) {
        const int k = 2 * j;
        int64_t best = -1;
        // iterate k-subsets of {0..d-1}
        idx.assign(k, 0);
        for (int t = 0; t < k; ++t) idx[t] = t;
        while (true) {
            int64_t v;
            if (use_bigint) {
                subb.assign(static_cast<size_t>(k) * k, 0);
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < k; ++c) subb[r * k + c] = M[idx[r] * d + idx[c]];
                BigInt det = det_bareiss_big(std::move(subb), k);
                if (det == 0) v = -1;
                else {
                    v = 0;
                    while (det % p == 0) { det /= p; ++v; }
                }
            } else {
                sub.assign(static_cast<size_t>(k) * k, 0);
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < k; ++c) sub[r * k + c] = M[idx[r] * d + idx[c]];
                int128 det = det_bareiss_i128(std::move(sub), k);
                if (det == 0) v = -1;
                else {
                    v = 0;
                    while (det % p == 0) { det /= p; ++v; }
                }
            }
            if (v >= 0 && (best < 0 || v < best)) best = v;
            if (best == 0) break;
            // next subset
            int t = k - 1;
            while (t >= 0 && idx[t] == d - k + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
        }
        vals[j - 1] = best;
    }
    return vals;
}

DivisorProfile profile_via_minors(const std::vector<int64_t>& M, int d,
                                  const ResidueRing& R, bool use_bigint) {
    const uint32_t n = R.n();
    std::vector<int64_t> sig = principal_minor_valuations(M, d, R.p(), use_bigint);
    // sig[j-1] = 2(a_1 + ... + a_j) of the lift, or -1 when the rank drops
    // below 2j over Z; differencing recovers a_j, truncation caps it at n.
    DivisorProfile prof;
    prof.level = static_cast<uint8_t>(n);
    prof.len = static_cast<uint8_t>(d / 2);
    int64_t prev = 0;
    for (int j = 1; j <= d / 2; ++j) {
        int64_t s = sig[j - 1];
        if (prev < 0 || s < 0) {
            prof.a[j - 1] = static_cast<uint8_t>(n);
            prev = s < 0 ? -1 : s;
            continue;
        }
        if (s % 2 != 0 || s < prev)
            throw std::logic_error("profile_via_minors: inconsistent minor valuations");
        int64_t aj = (s - prev) / 2;
        prof.a[j - 1] = static_cast<uint8_t>(std::min<int64_t>(aj, n));
        prev = s;
    }
    return prof;
}

BigInt kernel_size_mod_pn(const std::vector<uint64_t>& M, int d, const ResidueRing& R) {
    // unrestricted row/column reduction to diagonal form over Z/p^n
    const uint32_t n = R.n();
    const uint32_t p = R.p();
    std::vector<uint64_t> a = M;
    std::vector<uint32_t> divisors;
    int lo = 0;
    int dim = d;
    while (lo < dim) {
        uint32_t best_v = n;
        int bi = -1, bj = -1;
        for (int i = lo; i < dim && best_v > 0; ++i)
            for (int j = lo; j < dim; ++j) {
                uint64_t x = a[i * d + j];
                if (x == 0) continue;
                uint32_t v = 0;
                while (x % p == 0) { x /= p; ++v; }
                if (v < best_v) {
                    best_v = v; bi = i; bj = j;
                    if (v == 0) break;
                }
            }
        if (bi < 0) break;
        // swap pivot to (lo, lo)
        if (bi != lo)
            for (int k = 0; k < d; ++k) std::swap(a[bi * d + k], a[lo * d + k]);
        if (bj != lo)
            for (int k = 0; k < d; ++k) std::swap(a[k * d + bj], a[k * d + lo]);
        const uint64_t pv = R.pow_p(best_v);
        uint64_t u = a[lo * d + lo] / pv;
        uint64_t uinv = R.inv(u);
        for (int k = 0; k < d; ++k) a[lo * d + k] = R.mul(a[lo * d + k], uinv);
        for (int i = lo + 1; i < dim; ++i) {
            uint64_t f = a[i * d + lo] / pv;
            if (f == 0) continue;
            uint64_t fm = R.neg(f % R.modulus());
            for (int k = 0; k < d; ++k)
                a[i * d + k] = R.add(a[i * d + k], R.mul(fm, a[lo * d + k]));
        }
        for (int j = lo + 1; j < dim; ++j) {
            uint64_t f = a[lo * d + j] / pv;
            if (f == 0) continue;
            uint64_t fm = R.neg(f % R.modulus());
            for (int k = 0; k < d; ++k)
                a[k * d + j] = R.add(a[k * d + j], R.mul(fm, a[k * d + lo]));
        }
        divisors.push_back(best_v);
        ++lo;
    }
    // kernel of x -> x M: each divisor p^v contributes p^min(v,n); missing
    // divisors are 0-rows contributing p^n
    BigInt size = 1;
    for (uint32_t v : divisors) size *= bigpow(p, std::min(v, n));
    for (int i = static_cast<int>(divisors.size()); i < d; ++i) size *= bigpow(p, n);
    return size;
}

} // namespace rzeta
