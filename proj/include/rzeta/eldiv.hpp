#ifndef RZETA_ELDIV_HPP
#define RZETA_ELDIV_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "rzeta/modring.hpp"

namespace rzeta {

/// Truncated elementary-divisor profile of an antisymmetric matrix over
/// Z/p^n: non-decreasing entries a_1 <= ... <= a_{floor(d/2)}, each in
/// {0,...,n}, the value n standing for "truncated, possibly infinite".
struct DivisorProfile {
    std::array<uint8_t, 4> a{};
    uint8_t len = 0;
    uint8_t level = 0;

    auto operator<=>(const DivisorProfile&) const = default;

    uint32_t weight() const { // sum of (n - a_i), the t-degree of the class
        uint32_t w = 0;
        for (int i = 0; i < len; ++i) w += level - a[i];
        return w;
    }
    uint32_t entry_sum_capped() const {
        uint32_t s = 0;
        for (int i = 0; i < len; ++i) s += a[i];
        return s;
    }
};

/// Scratch space for the congruence reduction; reusable across calls.
struct ProfileWorkspace {
    std::vector<uint64_t> m;
};

/// Profile of an antisymmetric d x d matrix over Z/p^n by congruence
/// reduction M -> S M S^t (pivot on the lexicographically first entry of
/// minimal valuation, clear its row/column pair, recurse).  Throws if M is
/// not antisymmetric.
DivisorProfile antisym_profile(const uint64_t* M, int d, const ResidueRing& R,
                               ProfileWorkspace& ws);

inline DivisorProfile antisym_profile(const std::vector<uint64_t>& M, int d,
                                      const ResidueRing& R) {
    ProfileWorkspace ws;
    return antisym_profile(M.data(), d, R, ws);
}

/// Independent oracle: recovers the profile from the valuations of principal
/// 2j x 2j minors of the canonical integer lift.  For |entries| < 49 and
/// d <= 8 the int64 path is exact; `use_bigint` switches to BigInt minors.
DivisorProfile profile_via_minors(const std::vector<int64_t>& M_lift, int d,
                                  const ResidueRing& R, bool use_bigint = false);

/// min valuation over principal 2j x 2j minors of the integer lift, for
/// j = 1..floor(d/2); -1 encodes "all minors vanish over Z".
std::vector<int64_t> principal_minor_valuations(const std::vector<int64_t>& M_lift, int d,
                                                uint32_t p, bool use_bigint = false);

/// Kernel size of x -> x M over Z/p^n, computed by unrestricted row/column
/// reduction to diagonal form (independent of the congruence algorithm).
BigInt kernel_size_mod_pn(const std::vector<uint64_t>& M, int d, const ResidueRing& R);

} // namespace rzeta

#endif
