#ifndef RZETA_FINITEZETA_HPP
#define RZETA_FINITEZETA_HPP

#include <map>
#include <string>
#include <vector>

#include "rzeta/numeric.hpp"

namespace rzeta {

/// Character degrees with multiplicities; terms with equal degree merged,
/// zero multiplicities dropped.
struct DegreeMultiset {
    std::map<BigInt, BigInt> entries; // degree -> multiplicity

    BigInt num_characters() const {
        BigInt s = 0;
        for (auto& [d, m] : entries) s += m;
        return s;
    }
    BigInt sum_m_d2() const {
        BigInt s = 0;
        for (auto& [d, m] : entries) s += m * d * d;
        return s;
    }
};

/// polynomial in q with rational coefficients (ascending degree)
using QPoly = std::vector<Rational>;

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
bool qp_is_zero(const QPoly& a);
Rational qp_eval(const QPoly& a, const Rational& q);

/// one printed term: multiplicity(q) * degree(q)^{-s}
struct ZetaTerm {
    QPoly multiplicity;
    QPoly degree;
};

enum class FiniteGroupFamily { SL3, SU3, GL2, GU2, Heisenberg };

/// the printed term list; branch is q mod 3 for SL3/SU3 (1 or 2) and ignored
/// for the other families
std::vector<ZetaTerm> zeta_terms(FiniteGroupFamily fam, int branch);

BigInt group_order(FiniteGroupFamily fam, uint32_t q);
QPoly group_order_poly(FiniteGroupFamily fam);

/// sum m(q) d(q)^2 == |G|(q) as an exact polynomial identity
bool md2_polynomial_identity(FiniteGroupFamily fam, int branch);

DegreeMultiset zeta_sl3_fq(uint32_t q);
DegreeMultiset zeta_su3_fq(uint32_t q);
DegreeMultiset zeta_gl2_fq(uint32_t q);
DegreeMultiset zeta_gu2_fq(uint32_t q);
DegreeMultiset zeta_heisenberg_fq(uint32_t q);
DegreeMultiset zeta_finite_group(FiniteGroupFamily fam, uint32_t q);

/// number of conjugacy classes by exhaustive construction of the group
uint64_t class_number_bruteforce(FiniteGroupFamily fam, uint32_t q);

std::string finite_zeta_json(FiniteGroupFamily fam, uint32_t q, bool with_bruteforce);

FiniteGroupFamily family_from_name(const std::string& name);
std::string family_name(FiniteGroupFamily fam);

} // namespace rzeta

#endif
