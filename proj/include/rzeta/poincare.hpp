#ifndef RZETA_POINCARE_HPP
#define RZETA_POINCARE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rzeta/eldiv.hpp"
#include "rzeta/lattice.hpp"

namespace rzeta {

struct BudgetExceeded : std::runtime_error {
    uint64_t required;
    explicit BudgetExceeded(uint64_t req)
        : std::runtime_error("enumeration budget exceeded; required profile computations: " +
                             std::to_string(req)),
          required(req) {}
};

/// Counts of elementary-divisor profiles of R(y) over primitive vectors
/// y in ((Z/p^n)^d)^*, per level n.
struct ProfileCensus {
    std::string lattice_name;
    uint32_t p = 0;
    bool exact = true;
    std::map<uint32_t, std::map<DivisorProfile, uint64_t>> levels;
    // meta
    uint64_t samples = 0;
    uint64_t seed = 0;
    double wall_time_s = 0.0;

    uint64_t total_at(uint32_t n) const {
        auto it = levels.find(n);
        if (it == levels.end()) return 0;
        uint64_t t = 0;
        for (auto& [prof, c] : it->second) t += c;
        return t;
    }
    uint32_t n_max() const { return levels.empty() ? 0 : levels.rbegin()->first; }
};

/// Exhaustive censuses for levels 1..n_max.  Deterministic; lexicographic
/// scan with a parallel partition on the first two coordinates.
ProfileCensus enumerate_counts(const LieLattice& L, uint32_t p, uint32_t n_max,
                               unsigned workers = 0, uint64_t budget = (1ull << 32));

/// r_k = q^{dm} * sum_{weight(n,a)=k} N_{n,a} q^{-2k}: the number of
/// irreducible characters of degree q^k of the level-m group.  Requires an
/// exact census with 2*n_max + 1 >= k_max and verifies the level-1 support
/// condition that makes the truncation complete.
std::vector<BigInt> zeta_coeffs(const ProfileCensus& census, uint32_t m, uint32_t k_max);

/// |g^m : Rad(omega)| for the functional represented by primitive w at level
/// n, by directly solving z R(w) = 0 over Z/p^n.
BigInt radical_index(const LieLattice& L, const std::vector<int64_t>& w, uint32_t p,
                     uint32_t n);

/// The profile-formula value q^{2 sum(n - min(a_i,n))} the direct index must equal.
BigInt radical_index_from_profile(const DivisorProfile& prof, uint32_t p);

/// i.i.d. uniform primitive vectors mod p^n, reproducible given the seed.
ProfileCensus montecarlo_profiles(const LieLattice& L, uint32_t p, uint32_t n,
                                  uint64_t num_samples, uint64_t seed,
                                  unsigned workers = 0);

/// Project an exact census level (entrywise truncation of profiles at n_to,
/// counts divided by q^{d*(n_from-n_to)}) -- the fibration compatibility.
std::map<DivisorProfile, uint64_t> project_level(const ProfileCensus& census,
                                                 uint32_t n_from, uint32_t n_to, int d);

std::string census_to_json(const ProfileCensus& census, bool include_wall_time = true);
ProfileCensus census_from_json(const std::string& text);

} // namespace rzeta

#endif
