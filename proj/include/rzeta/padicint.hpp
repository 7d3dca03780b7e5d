#ifndef RZETA_PADICINT_HPP
#define RZETA_PADICINT_HPP

#include <cstdint>
#include <vector>

#include "rzeta/poincare.hpp"
#include "rzeta/ratfun.hpp"

namespace rzeta {

/// Exponent data of the integrand at |x| = q^{-n}: the value is q^{-(n t + c r)}.
struct IntegrandExponent {
    uint32_t n = 0;
    int64_t c = 0;
};

/// c = 2 sum_j min(a_j, n) over all floor(d/2) profile entries of R(y) mod p^n.
IntegrandExponent integrand_exponent(const LieLattice& L, uint32_t n,
                                     const std::vector<int64_t>& y, uint32_t p);

/// The same exponent from the literal minor norms of the integer lift:
/// sum_j [ min(v_j, v_{j-1} + 2n) - v_{j-1} ] with v_j the minimal valuation
/// over the 2j x 2j minor family (principal by default, all minors behind the
/// slow flag).
int64_t literal_minor_exponent(const LieLattice& L, uint32_t n,
                               const std::vector<int64_t>& y, uint32_t p,
                               bool principal_only = true);

/// Truncated integral sum_{n<=n_max} (1-1/q) q^{-n(t+1)} q^{-nd} sum_a N q^{-c r}
/// with c = 2 sum_{i<=rho} min(a_i, n).  Requires 2r integral.
Rational Z_truncated(const ProfileCensus& census, const Rational& r, int64_t t,
                     uint32_t n_max, int rho = 3);

/// P_truncated(s) - 1 from the census (weights over all floor(d/2) entries).
Rational poincare_truncated_minus_one(const ProfileCensus& census, int64_t s,
                                      uint32_t n_max);

/// Exact equality P_trunc(s) - 1 == (1-1/q)^{-1} Z_trunc(-s/2, 3s-9) for the
/// A2 instances (rho = 3, d = 8).  Also validates the census: level totals
/// must equal q^{dn} - q^{d(n-1)} and every profile must end in n, so a
/// tampered census fails.
bool link_check(const ProfileCensus& census, int64_t s, uint32_t n_max);

/// closed forms of the two per-residue integrals (t integral, 2r integral):
///   Z0 = q^{-9-t} (1-q^{-1}) / (1-q^{-1-t})
///   Z1 = q^{-9-2r-t} (1-q^{-4-t})(1-q^{-1}) / ((1-q^{-4-2r-t})(1-q^{-1-t}))
Rational closed_Z0(const Rational& q, const Rational& r, int64_t t);
Rational closed_Z1(const Rational& q, const Rational& r, int64_t t);

/// number of irregular primitive residues of the variant's level-1 cone:
/// (q^2+q+1)^2 (q-1) for sl3, (q^4+q^2+1)(q-1) for su3
BigInt irregular_residue_count(A2Variant v, uint32_t q);

/// (#regular) Z0 + (#irregular) Z1, each truncated to levels <= n_max (the
/// level decomposition of the closed forms); converges to (#reg)Z0+(#irr)Z1.
Rational closed_Z_truncated(A2Variant v, uint32_t q, const Rational& r, int64_t t,
                            uint32_t n_max);
Rational closed_Z_value(A2Variant v, uint32_t q, const Rational& r, int64_t t);
/// geometric tail bound for |closed_Z_value - closed_Z_truncated|
Rational closed_Z_tail_bound(uint32_t q, const Rational& r, int64_t t, uint32_t n_max);

/// monomial q^qe t^te with t = q^{-s}
struct XiMonomial {
    int qe = 0;
    int te = 0;
};

/// sum over m in N_{>=1}^k of prod X_i^{m_i} * z^{(sum c_i m_i) - delta},
/// k = |x| <= 2
RatFunQT xi_cone_single(const std::vector<XiMonomial>& x, const std::vector<int>& coeffs,
                        int delta, XiMonomial z);

/// sum over (m1,m2) in N_{>=1}^2 of X1^{m1} X2^{m2} z^{min(m1-d1, m2-d2)}
RatFunQT xi_cone_min2(XiMonomial x1, XiMonomial x2, XiMonomial z, int delta1, int delta2);

} // namespace rzeta

#endif
