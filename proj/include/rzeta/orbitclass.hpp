#ifndef RZETA_ORBITCLASS_HPP
#define RZETA_ORBITCLASS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rzeta/fqmat.hpp"
#include "rzeta/numeric.hpp"

namespace rzeta {

/// The eight adjoint-orbit types of traceless 3x3 matrices.
enum class OrbitType : uint8_t { T0 = 0, T1, T2, T3, T4a, T4b, T4c, T5 };

enum class Regularity : uint8_t { zero, regular, irregular };

constexpr const char* orbit_type_name(OrbitType t) {
    switch (t) {
        case OrbitType::T0: return "0";
        case OrbitType::T1: return "1";
        case OrbitType::T2: return "2";
        case OrbitType::T3: return "3";
        case OrbitType::T4a: return "4a";
        case OrbitType::T4b: return "4b";
        case OrbitType::T4c: return "4c";
        case OrbitType::T5: return "5";
    }
    return "?";
}

constexpr Regularity regularity(OrbitType t) {
    switch (t) {
        case OrbitType::T0: return Regularity::zero;
        case OrbitType::T2:
        case OrbitType::T3: return Regularity::irregular;
        default: return Regularity::regular;
    }
}

constexpr std::array<OrbitType, 8> all_orbit_types() {
    return {OrbitType::T0, OrbitType::T1, OrbitType::T2, OrbitType::T3,
            OrbitType::T4a, OrbitType::T4b, OrbitType::T4c, OrbitType::T5};
}

/// classify a traceless x in sl3(F_q); q not divisible by 3
OrbitType classify_sl3(const FqField& F, const FqMat3& x);

/// classify an antihermitian traceless x in su3(F_{q^2}, F_q); char >= 5.
/// F2 is the F_{q^2} field (f = 2).
OrbitType classify_su3(const FqField& F2, const FqMat3& x);

struct TypeCensus {
    std::array<uint64_t, 8> total{}; // indexed by OrbitType
    uint64_t sum() const {
        uint64_t s = 0;
        for (auto v : total) s += v;
        return s;
    }
};

/// exhaustive classification of all q^8 elements; refuses when q^8 exceeds
/// the budget (default admits q <= 7)
TypeCensus census_sl3(uint32_t q, unsigned workers = 0, uint64_t budget = 6000000);
TypeCensus census_su3(uint32_t p, unsigned workers = 0, uint64_t budget = 6000000);

/// Table rows: number of orbits, size of each orbit, and total, as closed
/// formulas in q (GL3-orbits on sl3, GU3-orbits on su3).
struct TableRow {
    BigInt num_orbits;
    BigInt orbit_size;
    BigInt total() const { return num_orbits * orbit_size; }
};
TableRow adjoint_table_row_sl3(OrbitType t, uint32_t q);
TableRow adjoint_table_row_su3(OrbitType t, uint32_t q);

/// centraliser orders in SL3(F_q) resp. SU3(F_{q^2},F_q) as printed
BigInt centralizer_table_sl3(OrbitType t, uint32_t q);
BigInt centralizer_table_su3(OrbitType t, uint32_t q);

BigInt sl3_group_order(uint32_t q);
BigInt su3_group_order(uint32_t q);
BigInt gl3_group_order(uint32_t q);
BigInt gu3_group_order(uint32_t q); // the Ennola u(q)

/// representative of the type; throws when no such element exists at this q
FqMat3 sl3_representative(const FqField& F, OrbitType t);
FqMat3 su3_representative(const FqField& F2, OrbitType t);

/// centraliser orders by exhaustive enumeration over the commuting subspace
BigInt centralizer_order_sl3(const FqField& F, const FqMat3& x, unsigned workers = 0);
BigInt centralizer_order_su3(const FqField& F2, const FqMat3& x, unsigned workers = 0);
BigInt centralizer_order_gu3(const FqField& F2, const FqMat3& x, unsigned workers = 0);
BigInt centralizer_order_gl3(const FqField& F2, const FqMat3& x, unsigned workers = 0);

/// group orders by direct enumeration
BigInt sl3_order_by_enumeration(const FqField& F, unsigned workers = 0);
BigInt su3_order_by_enumeration(const FqField& F2, unsigned workers = 0);
BigInt gu3_order_by_enumeration(const FqField& F2, unsigned workers = 0);

/// y -> (1-y)(1+y)^{-1}; a self-inverse bijection between antihermitian
/// elements and unitary group elements avoiding eigenvalue -1
FqMat3 cayley(const FqField& F, const FqMat3& y);

/// number of nonsingular Hermitian forms compatible with x
BigInt ennola_gamma(const FqField& F2, const FqMat3& x);
/// gamma(x) |GU3| / |Cen_{GL3(F_{q^2})}(x)|
BigInt ennola_orbit_size(const FqField& F2, const FqMat3& x);
/// |GU3| / |Cen_{GU3}(x)| computed by enumeration
BigInt gu3_orbit_size_direct(const FqField& F2, const FqMat3& x);

/// CSV matching the tables' layout: type,class,num_orbits,orbit_size,total,centralizer
std::string tables_csv(const std::string& algebra, uint32_t q);

} // namespace rzeta

#endif
