#include "rzeta/padicint.hpp"

#include <algorithm>
#include <stdexcept>

#include "rzeta/intmat.hpp"

namespace rzeta {

namespace {

bool primitive_mod_p(const std::vector<int64_t>& y, uint32_t p) {
    for (int64_t c : y) {
        int64_t r = c % static_cast<int64_t>(p);
        if (r != 0) return true;
    }
    return false;
}

/// minimal p-valuation over the 2j x 2j minors of M (row set = column set
/// when principal_only); -1 when every minor vanishes over Z
int64_t minor_family_valuation(const std::vector<int64_t>& M, int d, int k, uint32_t p,
                               bool principal_only) {
    std::vector<int> rows(k), cols(k);
    std::vector<int128> sub(static_cast<size_t>(k) * k);
    int64_t best = -1;
    auto consider = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub[r * k + c] = M[rs[r] * d + cs[c]];
        int128 det = det_bareiss_i128(sub, k);
        if (det == 0) return;
        int64_t v = 0;
        while (det % p == 0) { det /= p; ++v; }
        if (best < 0 || v < best) best = v;
    };
    // iterate k-subsets of rows
    for (int t = 0; t < k; ++t) rows[t] = t;
    while (true) {
        if (principal_only) {
            consider(rows, rows);
        } else {
            for (int t = 0; t < k; ++t) cols[t] = t;
            while (true) {
                consider(rows, cols);
                if (best == 0) break;
                int t = k - 1;
                while (t >= 0 && cols[t] == d - k + t) --t;
                if (t < 0) break;
                ++cols[t];
                for (int s = t + 1; s < k; ++s) cols[s] = cols[s - 1] + 1;
            }
        }
        if (best == 0) break;
        int t = k - 1;
        while (t >= 0 && rows[t] == d - k + t) --t;
        if (t < 0) break;
        ++rows[t];
        for (int s = t + 1; s < k; ++s) rows[s] = rows[s - 1] + 1;
    }
    return best;
}

} // namespace

IntegrandExponent integrand_exponent(const LieLattice& L, uint32_t n,
                                     const std::vector<int64_t>& y, uint32_t p) {
    if (!primitive_mod_p(y, p)) throw std::invalid_argument("integrand_exponent: y not primitive");
    ResidueRing ring(p, n);
    CommutatorMatrix R(L);
    std::vector<uint64_t> ym(L.d);
    for (int h = 0; h < L.d; ++h) ym[h] = ring.reduce(y[h]);
    std::vector<uint64_t> M(static_cast<size_t>(L.d) * L.d);
    R.evaluate_mod(ym.data(), ring, M.data());
    DivisorProfile prof = antisym_profile(M, L.d, ring);
    IntegrandExponent e;
    e.n = n;
    e.c = 0;
    for (int i = 0; i < prof.len; ++i) e.c += 2 * std::min<int64_t>(prof.a[i], n);
    return e;
}

int64_t literal_minor_exponent(const LieLattice& L, uint32_t n,
                               const std::vector<int64_t>& y, uint32_t p,
                               bool principal_only) {
    if (!primitive_mod_p(y, p)) throw std::invalid_argument("literal_minor_exponent: y not primitive");
    ResidueRing ring(p, n);
    CommutatorMatrix R(L);
    std::vector<int64_t> lift(L.d);
    for (int h = 0; h < L.d; ++h) lift[h] = static_cast<int64_t>(ring.reduce(y[h]));
    std::vector<int64_t> M = R.evaluate_int(lift);
    const int half = L.d / 2;
    int64_t c = 0;
    int64_t v_prev = 0; // v_0 = 0 (empty minor is 1)
    for (int j = 1; j <= half; ++j) {
        int64_t v_j = minor_family_valuation(M, L.d, 2 * j, p, principal_only);
        int64_t term;
        if (v_prev < 0) {
            term = 2 * static_cast<int64_t>(n); // ||F_{j-1} x^2|| / ||F_{j-1}|| degenerates to |x|^2
        } else if (v_j < 0) {
            term = 2 * static_cast<int64_t>(n);
        } else {
            term = std::min(v_j, v_prev + 2 * static_cast<int64_t>(n)) - v_prev;
        }
        c += term;
        v_prev = v_j;
    }
    return c;
}

Rational Z_truncated(const ProfileCensus& census, const Rational& r, int64_t t,
                     uint32_t n_max, int rho) {
    if (!census.exact) throw std::invalid_argument("Z_truncated: census must be exact");
    if (census.n_max() < n_max) throw std::invalid_argument("Z_truncated: census insufficient");
    BigInt r_den = boost::multiprecision::denominator(r);
    if (r_den != 1 && r_den != 2)
        throw std::invalid_argument("Z_truncated: 2r must be integral");
    const Rational q(census.p);
    const int d = 8;
    Rational total = 0;
    Rational one_minus = 1 - Rational(1) / q;
    for (auto& [n, profs] : census.levels) {
        if (n > n_max) break;
        Rational level_sum = 0;
        for (auto& [prof, cnt] : profs) {
            int64_t c = 0;
            for (int i = 0; i < std::min<int>(prof.len, rho); ++i)
                c += 2 * std::min<uint32_t>(prof.a[i], n);
            // q^{-c r}: c r is integral because c is even and 2r is integral
            Rational cr = Rational(c) * r;
            if (boost::multiprecision::denominator(cr) != 1)
                throw std::logic_error("Z_truncated: non-integral exponent");
            long e = static_cast<long>(boost::multiprecision::numerator(cr).convert_to<int64_t>());
            level_sum += Rational(BigInt(cnt)) * qpow(q, -e);
        }
        long outer = -static_cast<long>(n) * (t + 1) - static_cast<long>(n) * d;
        total += one_minus * qpow(q, outer) * level_sum;
    }
    return total;
}

Rational poincare_truncated_minus_one(const ProfileCensus& census, int64_t s,
                                      uint32_t n_max) {
    if (!census.exact) throw std::invalid_argument("poincare_truncated: census must be exact");
    const Rational q(census.p);
    Rational total = 0;
    for (auto& [n, profs] : census.levels) {
        if (n > n_max) break;
        for (auto& [prof, cnt] : profs)
            total += Rational(BigInt(cnt)) * qpow(q, -static_cast<long>(prof.weight()) * s);
    }
    return total;
}

bool link_check(const ProfileCensus& census, int64_t s, uint32_t n_max) {
    if (census.n_max() < n_max) throw std::invalid_argument("link_check: census insufficient");
    // census integrity: level totals and the forced last entry a_{d/2} = n
    const uint32_t p = census.p;
    for (auto& [n, profs] : census.levels) {
        if (n > n_max) break;
        BigInt expect = bigpow(p, 8 * n) - bigpow(p, 8 * (n - 1));
        BigInt got = 0;
        for (auto& [prof, cnt] : profs) {
            got += cnt;
            if (prof.a[prof.len - 1] != n) return false;
        }
        if (got != expect) return false;
    }
    Rational lhs = poincare_truncated_minus_one(census, s, n_max);
    Rational q(p);
    Rational rhs = Z_truncated(census, Rational(-s, 2), 3 * s - 9, n_max, 3) /
                   (1 - Rational(1) / q);
    return lhs == rhs;
}

Rational closed_Z0(const Rational& q, const Rational& r, int64_t t) {
    (void)r;
    Rational den = 1 - qpow(q, -1 - t);
    if (den == 0) throw std::domain_error("closed_Z0: pole");
    return qpow(q, -9 - t) * (1 - qpow(q, -1)) / den;
}

Rational closed_Z1(const Rational& q, const Rational& r, int64_t t) {
    Rational r2 = r * 2;
    BigInt r2num = boost::multiprecision::numerator(r2);
    if (boost::multiprecision::denominator(r2) != 1)
        throw std::invalid_argument("closed_Z1: 2r must be integral");
    long tr = r2num.convert_to<long>(); // 2r
    Rational den1 = 1 - qpow(q, -4 - tr - t);
    Rational den2 = 1 - qpow(q, -1 - t);
    if (den1 == 0 || den2 == 0) throw std::domain_error("closed_Z1: pole");
    return qpow(q, -9 - tr - t) * (1 - qpow(q, -4 - t)) * (1 - qpow(q, -1)) / (den1 * den2);
}

BigInt irregular_residue_count(A2Variant v, uint32_t q) {
    BigInt Q(q);
    if (v == A2Variant::sl3) return (Q * Q + Q + 1) * (Q * Q + Q + 1) * (Q - 1);
    return (Q * Q * Q * Q + Q * Q + 1) * (Q - 1);
}

Rational closed_Z_truncated(A2Variant v, uint32_t q, const Rational& r, int64_t t,
                            uint32_t n_max) {
    Rational r2 = r * 2;
    BigInt r2num = boost::multiprecision::numerator(r2);
    if (boost::multiprecision::denominator(r2) != 1)
        throw std::invalid_argument("closed_Z_truncated: 2r must be integral");
    long tr = r2num.convert_to<long>(); // 2r
    const Rational Q(q);
    BigInt irr = irregular_residue_count(v, q);
    BigInt reg = bigpow(q, 8) - 1 - irr;
    Rational one_minus = 1 - qpow(Q, -1);
    Rational total = 0;
    for (uint32_t n = 1; n <= n_max; ++n) {
        // regular residue: integrand 1, cube measure q^{-8}
        Rational z0_level = one_minus * qpow(Q, -static_cast<long>(n) * (1 + t)) * qpow(Q, -8);
        // irregular residue: chart gives sum over l >= 1 of
        // (1-q^{-3}) q^{-3l-5} q^{-2 min(l,n) r}, split at l = n
        Rational inner = 0;
        for (uint32_t l = 1; l <= n; ++l)
            inner += (1 - qpow(Q, -3)) * qpow(Q, -3 * static_cast<long>(l) - 5) *
                     qpow(Q, -static_cast<long>(l) * tr);
        inner += qpow(Q, -5 - 3 * (static_cast<long>(n) + 1)) * qpow(Q, -static_cast<long>(n) * tr);
        Rational z1_level = one_minus * qpow(Q, -static_cast<long>(n) * (1 + t)) * inner;
        total += Rational(reg) * z0_level + Rational(irr) * z1_level;
    }
    return total;
}

Rational closed_Z_value(A2Variant v, uint32_t q, const Rational& r, int64_t t) {
    BigInt irr = irregular_residue_count(v, q);
    BigInt reg = bigpow(q, 8) - 1 - irr;
    Rational Q(q);
    return Rational(reg) * closed_Z0(Q, r, t) + Rational(irr) * closed_Z1(Q, r, t);
}

Rational closed_Z_tail_bound(uint32_t q, const Rational& r, int64_t t, uint32_t n_max) {
    // levels n > n_max contribute at most
    //   (q^8-1) (1-1/q) q^{-8} q^{-n(1+t)} max(1, q^{-2nr})
    // per level; for r <= 0 and 1 + t + 2r > 0 the ratio is geometric
    Rational r2 = r * 2;
    BigInt r2num = boost::multiprecision::numerator(r2);
    long tr = r2num.convert_to<long>();
    const Rational Q(q);
    long decay = 1 + t + (tr < 0 ? tr : 0);
    if (decay <= 0) throw std::domain_error("closed_Z_tail_bound: divergent parameters");
    Rational g = qpow(Q, -decay);
    Rational first = qpow(Q, -decay * static_cast<long>(n_max + 1));
    return Rational(bigpow(q, 8)) * first / (1 - g);
}

namespace {

RatFunQT xm(const XiMonomial& m, int power = 1) {
    int qe = m.qe * power, te = m.te * power;
    if (te >= 0) return RatFunQT::monomial(1, qe, te);
    PolyT den(static_cast<size_t>(-te) + 1, LaurentQ(0));
    den[-te] = LaurentQ(1);
    return RatFunQT(PolyT{LaurentQ::monomial(1, qe)}, std::move(den));
}

/// sum_{m >= a} Y^m = Y^a / (1 - Y) for a monomial Y
RatFunQT geom_from(const XiMonomial& y, int a) {
    RatFunQT one = RatFunQT::from_poly({LaurentQ(1)});
    return xm(y, a) / (one - xm(y));
}

/// sum_{m = a}^{b-1} Y^m (empty when b <= a)
RatFunQT geom_range(const XiMonomial& y, int a, int b) {
    RatFunQT one = RatFunQT::from_poly({LaurentQ(1)});
    if (b <= a) return RatFunQT();
    return (xm(y, a) - xm(y, b)) / (one - xm(y));
}

XiMonomial operator+(XiMonomial a, XiMonomial b) { return {a.qe + b.qe, a.te + b.te}; }
XiMonomial mul_coeff(XiMonomial a, int c) { return {a.qe * c, a.te * c}; }

} // namespace

RatFunQT xi_cone_single(const std::vector<XiMonomial>& x, const std::vector<int>& coeffs,
                        int delta, XiMonomial z) {
    if (x.size() > 2 || x.empty()) throw std::invalid_argument("xi_cone_single: k must be 1 or 2");
    if (coeffs.size() != x.size()) throw std::invalid_argument("xi_cone_single: coeffs size");
    RatFunQT out = xm(z, -delta);
    for (size_t i = 0; i < x.size(); ++i) {
        XiMonomial yi = x[i] + mul_coeff(z, coeffs[i]);
        out = out * geom_from(yi, 1);
    }
    return out;
}

RatFunQT xi_cone_min2(XiMonomial x1, XiMonomial x2, XiMonomial z, int delta1, int delta2) {
    const int e = delta2 - delta1;
    // region m2 - d2 >= m1 - d1 (min attained by m1 - d1)
    RatFunQT one = RatFunQT::from_poly({LaurentQ(1)});
    XiMonomial x1z = x1 + z;
    XiMonomial x2z = x2 + z;
    XiMonomial x12z = x1 + x2 + z;
    int m0 = std::max(1, 1 - e);
    RatFunQT sA = xm(z, -delta1) *
                  (geom_range(x1z, 1, m0) * geom_from(x2, 1) +
                   xm(x2, e) * geom_from(x12z, m0) / (one - xm(x2)));
    // region m2 - d2 < m1 - d1, i.e. m1 >= m2 - e + 1 (min attained by m2 - d2)
    int m1 = std::max(1, e);
    RatFunQT sB = xm(z, -delta2) *
                  (geom_range(x2z, 1, m1) * geom_from(x1, 1) +
                   xm(x1, 1 - e) * geom_from(x12z, m1) / (one - xm(x1)));
    return sA + sB;
}

} // namespace rzeta
