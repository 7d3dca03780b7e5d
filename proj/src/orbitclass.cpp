#include "rzeta/orbitclass.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rzeta/lattice.hpp"

namespace rzeta {

namespace {

unsigned resolve_workers(unsigned workers) {
    if (workers) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

struct CharPoly {
    // X^3 + c2 X + c0  (trace 0 removes the X^2 term)
    FqElem c2, c0;
};

CharPoly charpoly_traceless(const FqField& F, const FqMat3& x) {
    auto m = [&](int i, int j) { return x[i * 3 + j]; };
    FqElem c2 = F.zero();
    // sum of principal 2x2 minors
    c2 = F.add(c2, F.sub(F.mul(m(0, 0), m(1, 1)), F.mul(m(0, 1), m(1, 0))));
    c2 = F.add(c2, F.sub(F.mul(m(0, 0), m(2, 2)), F.mul(m(0, 2), m(2, 0))));
    c2 = F.add(c2, F.sub(F.mul(m(1, 1), m(2, 2)), F.mul(m(1, 2), m(2, 1))));
    return {c2, F.neg(fqm_det(F, x))};
}

FqElem charpoly_eval(const FqField& F, const CharPoly& cp, const FqElem& lam) {
    FqElem l2 = F.mul(lam, lam);
    return F.add(F.add(F.mul(l2, lam), F.mul(cp.c2, lam)), cp.c0);
}

/// roots of X^3 + c2 X + c0 in F, with multiplicities
std::vector<std::pair<FqElem, int>> charpoly_roots(const FqField& F, const CharPoly& cp) {
    std::vector<std::pair<FqElem, int>> roots;
    for (uint32_t i = 0; i < F.q(); ++i) {
        FqElem lam = F.from_index(i);
        if (!F.is_zero(charpoly_eval(F, cp, lam))) continue;
        // multiplicity by synthetic division of X^3 + 0 X^2 + c2 X + c0
        FqElem b2 = F.one();
        FqElem b1 = F.mul(lam, b2);
        FqElem b0 = F.add(cp.c2, F.mul(lam, b1));
        // quotient X^2 + b1 X + b0; lam is a double root iff it kills the quotient
        FqElem qv = F.add(F.add(F.mul(lam, lam), F.mul(b1, lam)), b0);
        int mult = 1;
        if (F.is_zero(qv)) {
            // triple iff lam also kills the second quotient X + (b1 + lam)
            mult = F.is_zero(F.add(lam, F.add(b1, lam))) ? 3 : 2;
        }
        roots.emplace_back(lam, mult);
    }
    return roots;
}

bool minpoly_is_deg2(const FqField& F, const FqMat3& x, const FqElem& lam, const FqElem& mu) {
    // (x - lam)(x - mu) == 0
    FqMat3 a = x, b = x;
    for (int k = 0; k < 3; ++k) {
        a[k * 3 + k] = F.sub(a[k * 3 + k], lam);
        b[k * 3 + k] = F.sub(b[k * 3 + k], mu);
    }
    FqMat3 prod = fqm_mul(F, a, b);
    return prod == fqm_zero(F);
}

OrbitType classify_common(const FqField& F, const FqMat3& x, bool unitary_flavor) {
    if (F.is_zero(fqm_trace(F, x)) == false)
        throw std::invalid_argument("classify: trace must vanish");
    bool zero = true;
    for (auto& e : x)
        if (!F.is_zero(e)) { zero = false; break; }
    if (zero) return OrbitType::T0;

    CharPoly cp = charpoly_traceless(F, x);
    auto roots = charpoly_roots(F, cp);
    int total = 0;
    for (auto& [lam, m] : roots) total += m;
    switch (total) {
        case 0: return OrbitType::T4c;
        case 1: return OrbitType::T4b;
        case 3: {
            if (roots.size() == 3) {
                if (!unitary_flavor) return OrbitType::T4a;
                int antisym = 0;
                for (auto& [lam, m] : roots)
                    if (F.frobenius(lam) == F.neg(lam)) ++antisym;
                if (antisym == 3) return OrbitType::T4a;
                if (antisym == 1) return OrbitType::T4b;
                throw std::logic_error("classify: eigenvalue set incompatible with the involution");
            }
            if (roots.size() == 2) {
                FqElem lam = roots[0].second == 2 ? roots[0].first : roots[1].first;
                FqElem mu = roots[0].second == 2 ? roots[1].first : roots[0].first;
                return minpoly_is_deg2(F, x, lam, mu) ? OrbitType::T3 : OrbitType::T5;
            }
            // triple root; trace 0 and p != 3 force it to be 0 (nilpotent)
            if (!F.is_zero(roots[0].first)) throw std::logic_error("classify: nonzero triple root");
            if (fqm_mul(F, x, x) == fqm_zero(F)) return OrbitType::T2;
            return OrbitType::T1;
        }
        default:
            throw std::logic_error("classify: impossible root multiplicity pattern");
    }
}

} // namespace

OrbitType classify_sl3(const FqField& F, const FqMat3& x) {
    if (F.p() == 3) throw std::invalid_argument("classify_sl3: characteristic 3 unsupported");
    return classify_common(F, x, false);
}

OrbitType classify_su3(const FqField& F2, const FqMat3& x) {
    if (F2.f() != 2) throw std::invalid_argument("classify_su3: field must be F_{q^2}");
    if (F2.p() < 5) throw std::invalid_argument("classify_su3: characteristic must be >= 5");
    if (fqm_conj_transpose(F2, x) != fqm_neg(F2, x))
        throw std::invalid_argument("classify_su3: not antihermitian");
    return classify_common(F2, x, true);
}

namespace {

/// exhaustive scan over all F_p-coordinate vectors of an 8-element basis
TypeCensus census_over_basis(const FqField& F, const std::vector<FqMat3>& basis, uint32_t q,
                             bool unitary_flavor, unsigned workers) {
    const uint64_t blocks = static_cast<uint64_t>(q) * q;
    unsigned w = resolve_workers(workers);
    std::vector<TypeCensus> parts(w);
    auto work = [&](unsigned wi) {
        auto& census = parts[wi];
        std::array<uint32_t, 8> digits{};
        for (uint64_t blk = wi; blk < blocks; blk += w) {
            digits[0] = static_cast<uint32_t>(blk / q);
            digits[1] = static_cast<uint32_t>(blk % q);
            for (int h = 2; h < 8; ++h) digits[h] = 0;
            while (true) {
                FqMat3 x = fqm_zero(F);
                for (int h = 0; h < 8; ++h) {
                    if (digits[h] == 0) continue;
                    x = fqm_add(F, x, fqm_scale(F, F.from_index(digits[h]), basis[h]));
                }
                OrbitType t = unitary_flavor ? classify_su3(F, x) : classify_sl3(F, x);
                ++census.total[static_cast<int>(t)];
                int h = 7;
                while (h >= 2 && digits[h] == q - 1) digits[h--] = 0;
                if (h < 2) break;
                ++digits[h];
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < w; ++wi) threads.emplace_back(work, wi);
    for (auto& t : threads) t.join();
    TypeCensus out;
    for (auto& part : parts)
        for (int k = 0; k < 8; ++k) out.total[k] += part.total[k];
    return out;
}

std::pair<uint32_t, uint32_t> q_to_pf(uint32_t q) {
    for (uint32_t p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            if (q == p * p) return {p, 2};
            throw std::invalid_argument("unsupported prime power");
        }
    return {q, 1};
}

} // namespace

TypeCensus census_sl3(uint32_t q, unsigned workers, uint64_t budget) {
    if (upow(q, 8) > budget)
        throw std::invalid_argument("census_sl3: q^8 exceeds the classification budget");
    auto [p, f] = q_to_pf(q);
    FqField F(p, f);
    std::vector<FqMat3> basis(8, fqm_zero(F));
    // h12, h23, e12, e23, e13, f21, f23, f13
    basis[0][0] = F.one();
    basis[0][4] = F.neg(F.one());
    basis[1][4] = F.one();
    basis[1][8] = F.neg(F.one());
    basis[2][1] = F.one();
    basis[3][5] = F.one();
    basis[4][2] = F.one();
    basis[5][3] = F.one();
    basis[6][7] = F.one();
    basis[7][6] = F.one();
    return census_over_basis(F, basis, q, false, workers);
}

TypeCensus census_su3(uint32_t p, unsigned workers, uint64_t budget) {
    if (p < 5) throw std::invalid_argument("census_su3: characteristic must be >= 5");
    if (upow(p, 8) > budget)
        throw std::invalid_argument("census_su3: q^8 exceeds the classification budget");
    FqField F2(p, 2);
    LieLattice L = make_su3(p);
    std::vector<FqMat3> basis;
    for (auto& B : L.basis) {
        FqMat3 M;
        for (int k = 0; k < 9; ++k)
            M[k] = F2.add(F2.from_int(B[k].a), F2.mul(F2.make(0, 1), F2.from_int(B[k].b)));
        basis.push_back(M);
    }
    return census_over_basis(F2, basis, p, true, workers);
}

namespace {

BigInt exact_div(BigInt num, const BigInt& den) {
    if (num % den != 0) throw std::logic_error("table formula not integral");
    return num / den;
}

} // namespace

TableRow adjoint_table_row_sl3(OrbitType t, uint32_t q) {
    BigInt Q(q);
    switch (t) {
        case OrbitType::T0: return {1, 1};
        case OrbitType::T1: return {1, (Q * Q * Q - 1) * (Q * Q - 1) * Q};
        case OrbitType::T2: return {1, (Q * Q * Q - 1) * (Q + 1)};
        case OrbitType::T3: return {Q - 1, (Q * Q + Q + 1) * Q * Q};
        case OrbitType::T4a:
            return {exact_div((Q - 1) * (Q - 2), 6), (Q * Q + Q + 1) * (Q + 1) * Q * Q * Q};
        case OrbitType::T4b:
            return {exact_div((Q - 1) * Q, 2), (Q * Q * Q - 1) * Q * Q * Q};
        case OrbitType::T4c:
            return {exact_div(Q * Q - 1, 3), (Q + 1) * (Q - 1) * (Q - 1) * Q * Q * Q};
        case OrbitType::T5: return {Q - 1, (Q * Q * Q - 1) * (Q + 1) * Q * Q};
    }
    throw std::logic_error("unreachable");
}

TableRow adjoint_table_row_su3(OrbitType t, uint32_t q) {
    BigInt Q(q);
    switch (t) {
        case OrbitType::T0: return {1, 1};
        case OrbitType::T1: return {1, (Q * Q * Q + 1) * (Q * Q - 1) * Q};
        case OrbitType::T2: return {1, (Q * Q * Q + 1) * (Q - 1)};
        case OrbitType::T3: return {Q - 1, (Q * Q - Q + 1) * Q * Q};
        case OrbitType::T4a:
            return {exact_div((Q - 1) * (Q - 2), 6), (Q * Q - Q + 1) * (Q - 1) * Q * Q * Q};
        case OrbitType::T4b:
            return {exact_div((Q - 1) * Q, 2), (Q * Q * Q + 1) * Q * Q * Q};
        case OrbitType::T4c:
            return {exact_div(Q * Q - 1, 3), (Q * Q - 1) * (Q + 1) * Q * Q * Q};
        case OrbitType::T5: return {Q - 1, (Q * Q * Q + 1) * (Q - 1) * Q * Q};
    }
    throw std::logic_error("unreachable");
}

BigInt sl3_group_order(uint32_t q) {
    BigInt Q(q);
    return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q - 1);
}

BigInt su3_group_order(uint32_t q) {
    BigInt Q(q);
    return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1);
}

BigInt gl3_group_order(uint32_t q) {
    BigInt Q(q);
    BigInt q3 = Q * Q * Q;
    return (q3 - 1) * (q3 - Q) * (q3 - Q * Q);
}

BigInt gu3_group_order(uint32_t q) {
    BigInt Q(q);
    return Q * Q * Q * (Q + 1) * (Q * Q - 1) * (Q * Q * Q + 1);
}

BigInt centralizer_table_sl3(OrbitType t, uint32_t q) {
    BigInt Q(q);
    switch (t) {
        case OrbitType::T0: return sl3_group_order(q);
        case OrbitType::T1: return BigInt(std::gcd(q - 1, 3u)) * Q * Q;
        case OrbitType::T2: return (Q - 1) * Q * Q * Q;
        case OrbitType::T3: return (Q * Q - 1) * (Q * Q - Q); // |GL2(F_q)|
        case OrbitType::T4a: return (Q - 1) * (Q - 1);
        case OrbitType::T4b: return Q * Q - 1;
        case OrbitType::T4c: return Q * Q + Q + 1;
        case OrbitType::T5: return (Q - 1) * Q;
    }
    throw std::logic_error("unreachable");
}

BigInt centralizer_table_su3(OrbitType t, uint32_t q) {
    BigInt Q(q);
    switch (t) {
        case OrbitType::T0: return su3_group_order(q);
        case OrbitType::T1: return BigInt(std::gcd(q + 1, 3u)) * Q * Q;
        case OrbitType::T2: return (Q + 1) * Q * Q * Q;
        case OrbitType::T3: return Q * (Q + 1) * (Q * Q - 1); // |GU2(F_q)|
        case OrbitType::T4a: return (Q + 1) * (Q + 1);
        case OrbitType::T4b: return Q * Q - 1;
        case OrbitType::T4c: return Q * Q - Q + 1;
        case OrbitType::T5: return (Q + 1) * Q;
    }
    throw std::logic_error("unreachable");
}

FqMat3 sl3_representative(const FqField& F, OrbitType t) {
    const uint32_t q = F.q();
    FqMat3 x = fqm_zero(F);
    auto set = [&](int i, int j, FqElem v) { x[i * 3 + j] = v; };
    switch (t) {
        case OrbitType::T0: return x;
        case OrbitType::T1:
            set(0, 1, F.one());
            set(1, 2, F.one());
            return x;
        case OrbitType::T2:
            set(0, 1, F.one());
            return x;
        case OrbitType::T3:
            set(0, 0, F.one());
            set(1, 1, F.one());
            set(2, 2, F.from_int(-2));
            return x;
        case OrbitType::T5:
            set(0, 0, F.one());
            set(0, 1, F.one());
            set(1, 1, F.one());
            set(2, 2, F.from_int(-2));
            return x;
        case OrbitType::T4a: {
            // distinct a, b, -a-b in F_q
            for (uint32_t ia = 0; ia < q; ++ia)
                for (uint32_t ib = 0; ib < q; ++ib) {
                    FqElem a = F.from_index(ia), b = F.from_index(ib);
                    FqElem c = F.neg(F.add(a, b));
                    if (a == b || a == c || b == c) continue;
                    set(0, 0, a);
                    set(1, 1, b);
                    set(2, 2, c);
                    return x;
                }
            throw std::domain_error("sl3_representative: no type 4a element at this q");
        }
        case OrbitType::T4b: {
            // companion of an irreducible X^2 + aX + b, third eigenvalue a
            for (uint32_t ia = 0; ia < q; ++ia)
                for (uint32_t ib = 0; ib < q; ++ib) {
                    FqElem a = F.from_index(ia), b = F.from_index(ib);
                    bool irred = true;
                    for (uint32_t il = 0; il < q && irred; ++il) {
                        FqElem lam = F.from_index(il);
                        FqElem v = F.add(F.add(F.mul(lam, lam), F.mul(a, lam)), b);
                        if (F.is_zero(v)) irred = false;
                    }
                    if (!irred) continue;
                    set(0, 1, F.neg(b));
                    set(1, 0, F.one());
                    set(1, 1, F.neg(a));
                    set(2, 2, a);
                    return x;
                }
            throw std::domain_error("sl3_representative: no type 4b element");
        }
        case OrbitType::T4c: {
            // companion of an irreducible X^3 + aX + b (trace 0)
            for (uint32_t ia = 0; ia < q; ++ia)
                for (uint32_t ib = 0; ib < q; ++ib) {
                    FqElem a = F.from_index(ia), b = F.from_index(ib);
                    bool has_root = false;
                    for (uint32_t il = 0; il < q && !has_root; ++il) {
                        FqElem lam = F.from_index(il);
                        FqElem l2 = F.mul(lam, lam);
                        FqElem v = F.add(F.add(F.mul(l2, lam), F.mul(a, lam)), b);
                        if (F.is_zero(v)) has_root = true;
                    }
                    if (has_root) continue;
                    set(0, 2, F.neg(b));
                    set(1, 0, F.one());
                    set(1, 2, F.neg(a));
                    set(2, 1, F.one());
                    return x;
                }
            throw std::domain_error("sl3_representative: no type 4c element");
        }
    }
    throw std::logic_error("unreachable");
}

FqMat3 su3_representative(const FqField& F2, OrbitType t) {
    if (t == OrbitType::T0) return fqm_zero(F2);
    LieLattice L = make_su3(F2.p());
    std::vector<FqMat3> basis;
    for (auto& B : L.basis) {
        FqMat3 M;
        for (int k = 0; k < 9; ++k)
            M[k] = F2.add(F2.from_int(B[k].a), F2.mul(F2.make(0, 1), F2.from_int(B[k].b)));
        basis.push_back(M);
    }
    const uint32_t p = F2.p();
    std::mt19937_64 gen(0xA2A2);
    for (int tries = 0; tries < 2000000; ++tries) {
        FqMat3 x = fqm_zero(F2);
        for (int h = 0; h < 8; ++h) {
            uint32_t c = static_cast<uint32_t>(gen() % p);
            if (c) x = fqm_add(F2, x, fqm_scale(F2, F2.from_int(c), basis[h]));
        }
        if (classify_su3(F2, x) == t) return x;
    }
    throw std::domain_error("su3_representative: type not found");
}

namespace {

/// basis of { g in Mat3 : g x = x g } over F
std::vector<FqMat3> commuting_space(const FqField& F, const FqMat3& x) {
    // rows: the 9 equations of gx - xg = 0; columns: entries of g
    std::vector<FqElem> a(81, F.zero());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int row = i * 3 + j;
            // (g x)_{ij} = sum_k g_{ik} x_{kj}; (x g)_{ij} = sum_k x_{ik} g_{kj}
            for (int k = 0; k < 3; ++k) {
                a[row * 9 + (i * 3 + k)] = F.add(a[row * 9 + (i * 3 + k)], x[k * 3 + j]);
                a[row * 9 + (k * 3 + j)] = F.sub(a[row * 9 + (k * 3 + j)], x[i * 3 + k]);
            }
        }
    // row reduce, track pivot columns
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < 9 && rank < 9; ++col) {
        int piv = -1;
        for (int r = rank; r < 9; ++r)
            if (!F.is_zero(a[r * 9 + col])) { piv = r; break; }
        if (piv < 0) continue;
        for (int c = 0; c < 9; ++c) std::swap(a[rank * 9 + c], a[piv * 9 + c]);
        FqElem inv = F.inv(a[rank * 9 + col]);
        for (int c = 0; c < 9; ++c) a[rank * 9 + c] = F.mul(inv, a[rank * 9 + c]);
        for (int r = 0; r < 9; ++r) {
            if (r == rank || F.is_zero(a[r * 9 + col])) continue;
            FqElem f = a[r * 9 + col];
            for (int c = 0; c < 9; ++c)
                a[r * 9 + c] = F.sub(a[r * 9 + c], F.mul(f, a[rank * 9 + c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(9, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<FqMat3> basis;
    for (int freec = 0; freec < 9; ++freec) {
        if (is_pivot[freec]) continue;
        FqMat3 g = fqm_zero(F);
        g[freec] = F.one();
        for (int r = 0; r < rank; ++r) g[pivot_col[r]] = F.neg(a[r * 9 + freec]);
        basis.push_back(g);
    }
    return basis;
}

bool is_unitary(const FqField& F, const FqMat3& g) {
    // g^circ g == 1, column by column with early exit
    for (int j = 0; j < 3; ++j)
        for (int i = j; i < 3; ++i) {
            FqElem s = F.zero();
            for (int k = 0; k < 3; ++k)
                s = F.add(s, F.mul(F.frobenius(g[k * 3 + i]), g[k * 3 + j]));
            if (i == j) {
                if (!(s == F.one())) return false;
            } else if (!F.is_zero(s)) {
                return false;
            }
        }
    return true;
}

/// count elements g = sum c_i B_i (over all |F|^k coefficient vectors)
/// satisfying pred
template <typename Pred>
BigInt count_in_span(const FqField& F, const std::vector<FqMat3>& basis, Pred pred,
                     unsigned workers) {
    const int k = static_cast<int>(basis.size());
    const uint32_t q = F.q();
    if (k == 0) return pred(fqm_zero(F)) ? 1 : 0;
    unsigned w = resolve_workers(workers);
    // split on the first coefficient
    std::vector<BigInt> parts(w, 0);
    auto work = [&](unsigned wi) {
        std::vector<uint32_t> digits(k, 0);
        for (uint32_t c0 = wi; c0 < q; c0 += w) {
            digits[0] = c0;
            for (int h = 1; h < k; ++h) digits[h] = 0;
            FqMat3 x = fqm_scale(F, F.from_index(c0), basis[0]);
            // odometer with incremental updates over digits 1..k-1
            while (true) {
                if (pred(x)) ++parts[wi];
                int h = k - 1;
                while (h >= 1 && digits[h] == q - 1) --h;
                if (h < 1) break;
                // digits[h] += 1; all below reset to 0
                FqElem delta = F.sub(F.from_index(digits[h] + 1), F.from_index(digits[h]));
                x = fqm_add(F, x, fqm_scale(F, delta, basis[h]));
                ++digits[h];
                for (int s = h + 1; s < k; ++s) {
                    if (digits[s] == 0) continue;
                    x = fqm_sub(F, x, fqm_scale(F, F.from_index(digits[s]), basis[s]));
                    digits[s] = 0;
                }
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < w; ++wi) threads.emplace_back(work, wi);
    for (auto& t : threads) t.join();
    BigInt total = 0;
    for (auto& part : parts) total += part;
    return total;
}

} // namespace

BigInt centralizer_order_sl3(const FqField& F, const FqMat3& x, unsigned workers) {
    auto basis = commuting_space(F, x);
    return count_in_span(F, basis,
                         [&](const FqMat3& g) { return fqm_det(F, g) == F.one(); }, workers);
}

BigInt centralizer_order_su3(const FqField& F2, const FqMat3& x, unsigned workers) {
    auto basis = commuting_space(F2, x);
    return count_in_span(F2, basis,
                         [&](const FqMat3& g) {
                             return is_unitary(F2, g) && fqm_det(F2, g) == F2.one();
                         },
                         workers);
}

BigInt centralizer_order_gu3(const FqField& F2, const FqMat3& x, unsigned workers) {
    auto basis = commuting_space(F2, x);
    return count_in_span(F2, basis, [&](const FqMat3& g) { return is_unitary(F2, g); },
                         workers);
}

BigInt centralizer_order_gl3(const FqField& F2, const FqMat3& x, unsigned workers) {
    auto basis = commuting_space(F2, x);
    return count_in_span(F2, basis,
                         [&](const FqMat3& g) { return !F2.is_zero(fqm_det(F2, g)); }, workers);
}

BigInt sl3_order_by_enumeration(const FqField& F, unsigned workers) {
    const uint32_t q = F.q();
    unsigned w = resolve_workers(workers);
    std::vector<BigInt> parts(w, 0);
    auto work = [&](unsigned wi) {
        const uint64_t total = upow(q, 9);
        for (uint64_t idx = wi; idx < total; idx += w) {
            FqMat3 g;
            uint64_t t = idx;
            for (int k = 0; k < 9; ++k) {
                g[k] = F.from_index(static_cast<uint32_t>(t % q));
                t /= q;
            }
            if (fqm_det(F, g) == F.one()) ++parts[wi];
        }
    };
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < w; ++wi) threads.emplace_back(work, wi);
    for (auto& t : threads) t.join();
    BigInt total = 0;
    for (auto& p : parts) total += p;
    return total;
}

namespace {

FqElem herm_norm3(const FqField& F, const FqElem* v) {
    FqElem s = F.zero();
    for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(F.frobenius(v[i]), v[i]));
    return s;
}

/// number of (col1, col2) pairs of orthonormal columns; each such pair
/// extends to exactly one SU3 element and to q+1 GU3 elements
BigInt su3_orthonormal_pairs(const FqField& F2, unsigned workers) {
    const uint32_t q2 = F2.q();
    unsigned w = resolve_workers(workers);
    std::vector<BigInt> parts(w, 0);
    auto work = [&](unsigned wi) {
        const uint64_t total = static_cast<uint64_t>(q2) * q2 * q2;
        for (uint64_t idx = wi; idx < total; idx += w) {
            FqElem v[3];
            uint64_t t = idx;
            for (int i = 0; i < 3; ++i) {
                v[i] = F2.from_index(static_cast<uint32_t>(t % q2));
                t /= q2;
            }
            if (!(herm_norm3(F2, v) == F2.one())) continue;
            // parameterize the perp of v and count norm-1 vectors in it
            int piv = -1;
            for (int i = 0; i < 3; ++i)
                if (!F2.is_zero(v[i])) { piv = i; break; }
            FqElem vb[3];
            for (int i = 0; i < 3; ++i) vb[i] = F2.frobenius(v[i]);
            FqElem pinv = F2.inv(vb[piv]);
            // u_piv = -pinv * sum_{i != piv} vb_i u_i
            int o1 = (piv + 1) % 3, o2 = (piv + 2) % 3;
            for (uint32_t c1 = 0; c1 < q2; ++c1)
                for (uint32_t c2 = 0; c2 < q2; ++c2) {
                    FqElem u[3];
                    u[o1] = F2.from_index(c1);
                    u[o2] = F2.from_index(c2);
                    u[piv] = F2.neg(F2.mul(pinv, F2.add(F2.mul(vb[o1], u[o1]),
                                                        F2.mul(vb[o2], u[o2]))));
                    if (herm_norm3(F2, u) == F2.one()) ++parts[wi];
                }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < w; ++wi) threads.emplace_back(work, wi);
    for (auto& t : threads) t.join();
    BigInt total = 0;
    for (auto& p : parts) total += p;
    return total;
}

} // namespace

BigInt su3_order_by_enumeration(const FqField& F2, unsigned workers) {
    return su3_orthonormal_pairs(F2, workers);
}

BigInt gu3_order_by_enumeration(const FqField& F2, unsigned workers) {
    return su3_orthonormal_pairs(F2, workers) * (F2.p() + 1);
}

FqMat3 cayley(const FqField& F, const FqMat3& y) {
    FqMat3 iplus = y, iminus = fqm_neg(F, y);
    for (int k = 0; k < 3; ++k) {
        iplus[k * 3 + k] = F.add(iplus[k * 3 + k], F.one());
        iminus[k * 3 + k] = F.add(iminus[k * 3 + k], F.one());
    }
    return fqm_mul(F, iminus, fqm_inv(F, iplus));
}

BigInt ennola_gamma(const FqField& F2, const FqMat3& x) {
    const uint32_t p = F2.p();
    const uint32_t q2 = F2.q();
    FqMat3 xc = fqm_conj_transpose(F2, x); // x^circ
    BigInt count = 0;
    // Hermitian Gamma: diagonal in F_q, upper triangle free, lower conjugate
    for (uint32_t d0 = 0; d0 < p; ++d0)
        for (uint32_t d1 = 0; d1 < p; ++d1)
            for (uint32_t d2 = 0; d2 < p; ++d2)
                for (uint32_t u01 = 0; u01 < q2; ++u01)
                    for (uint32_t u02 = 0; u02 < q2; ++u02)
                        for (uint32_t u12 = 0; u12 < q2; ++u12) {
                            FqMat3 G = fqm_zero(F2);
                            G[0] = F2.from_int(d0);
                            G[4] = F2.from_int(d1);
                            G[8] = F2.from_int(d2);
                            G[1] = F2.from_index(u01);
                            G[2] = F2.from_index(u02);
                            G[5] = F2.from_index(u12);
                            G[3] = F2.frobenius(G[1]);
                            G[6] = F2.frobenius(G[2]);
                            G[7] = F2.frobenius(G[5]);
                            // x^circ Gamma + Gamma x = 0, entrywise with early exit
                            bool ok = true;
                            for (int i = 0; i < 3 && ok; ++i)
                                for (int j = 0; j < 3 && ok; ++j) {
                                    FqElem s = F2.zero();
                                    for (int k = 0; k < 3; ++k) {
                                        s = F2.add(s, F2.mul(xc[i * 3 + k], G[k * 3 + j]));
                                        s = F2.add(s, F2.mul(G[i * 3 + k], x[k * 3 + j]));
                                    }
                                    if (!F2.is_zero(s)) ok = false;
                                }
                            if (!ok) continue;
                            if (F2.is_zero(fqm_det(F2, G))) continue;
                            ++count;
                        }
    return count;
}

BigInt ennola_orbit_size(const FqField& F2, const FqMat3& x) {
    BigInt gamma = ennola_gamma(F2, x);
    BigInt c = centralizer_order_gl3(F2, x);
    BigInt u = gu3_group_order(F2.p());
    BigInt num = gamma * u;
    if (num % c != 0) throw std::logic_error("ennola_orbit_size: not integral");
    return num / c;
}

BigInt gu3_orbit_size_direct(const FqField& F2, const FqMat3& x) {
    BigInt cen = centralizer_order_gu3(F2, x);
    BigInt u = gu3_group_order(F2.p());
    if (u % cen != 0) throw std::logic_error("gu3_orbit_size_direct: not integral");
    return u / cen;
}

std::string tables_csv(const std::string& algebra, uint32_t q) {
    std::ostringstream os;
    os << "type,class,num_orbits,orbit_size,total,centralizer_order\n";
    for (OrbitType t : all_orbit_types()) {
        TableRow row = algebra == "sl3" ? adjoint_table_row_sl3(t, q)
                                        : adjoint_table_row_su3(t, q);
        BigInt cen = algebra == "sl3" ? centralizer_table_sl3(t, q)
                                      : centralizer_table_su3(t, q);
        const char* cls = regularity(t) == Regularity::zero
                              ? "zero"
                              : (regularity(t) == Regularity::regular ? "reg." : "irreg.");
        os << orbit_type_name(t) << "," << cls << "," << row.num_orbits.str() << ","
           << row.orbit_size.str() << "," << row.total().str() << "," << cen.str() << "\n";
    }
    return os.str();
}

} // namespace rzeta
