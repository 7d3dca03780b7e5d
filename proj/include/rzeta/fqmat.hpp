#ifndef RZETA_FQMAT_HPP
#define RZETA_FQMAT_HPP

#include <array>

#include "rzeta/fq.hpp"

namespace rzeta {

using FqMat3 = std::array<FqElem, 9>;

inline FqMat3 fqm_zero(const FqField& F) {
    FqMat3 M;
    M.fill(F.zero());
    return M;
}

inline FqMat3 fqm_identity(const FqField& F) {
    FqMat3 M = fqm_zero(F);
    M[0] = M[4] = M[8] = F.one();
    return M;
}

inline FqMat3 fqm_mul(const FqField& F, const FqMat3& A, const FqMat3& B) {
    FqMat3 C = fqm_zero(F);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (F.is_zero(A[i * 3 + k])) continue;
            for (int j = 0; j < 3; ++j)
                C[i * 3 + j] = F.add(C[i * 3 + j], F.mul(A[i * 3 + k], B[k * 3 + j]));
        }
    return C;
}

inline FqMat3 fqm_add(const FqField& F, const FqMat3& A, const FqMat3& B) {
    FqMat3 C;
    for (int k = 0; k < 9; ++k) C[k] = F.add(A[k], B[k]);
    return C;
}

inline FqMat3 fqm_sub(const FqField& F, const FqMat3& A, const FqMat3& B) {
    FqMat3 C;
    for (int k = 0; k < 9; ++k) C[k] = F.sub(A[k], B[k]);
    return C;
}

inline FqMat3 fqm_neg(const FqField& F, const FqMat3& A) {
    FqMat3 C;
    for (int k = 0; k < 9; ++k) C[k] = F.neg(A[k]);
    return C;
}

inline FqMat3 fqm_scale(const FqField& F, const FqElem& c, const FqMat3& A) {
    FqMat3 C;
    for (int k = 0; k < 9; ++k) C[k] = F.mul(c, A[k]);
    return C;
}

inline FqMat3 fqm_commutator(const FqField& F, const FqMat3& A, const FqMat3& B) {
    return fqm_sub(F, fqm_mul(F, A, B), fqm_mul(F, B, A));
}

/// conjugate transpose (entrywise Frobenius, then transpose)
inline FqMat3 fqm_conj_transpose(const FqField& F, const FqMat3& A) {
    FqMat3 C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) C[j * 3 + i] = F.frobenius(A[i * 3 + j]);
    return C;
}

inline FqElem fqm_trace(const FqField& F, const FqMat3& A) {
    return F.add(A[0], F.add(A[4], A[8]));
}

inline FqElem fqm_det(const FqField& F, const FqMat3& A) {
    auto m = [&](int i, int j) { return A[i * 3 + j]; };
    FqElem t1 = F.mul(m(0, 0), F.sub(F.mul(m(1, 1), m(2, 2)), F.mul(m(1, 2), m(2, 1))));
    FqElem t2 = F.mul(m(0, 1), F.sub(F.mul(m(1, 0), m(2, 2)), F.mul(m(1, 2), m(2, 0))));
    FqElem t3 = F.mul(m(0, 2), F.sub(F.mul(m(1, 0), m(2, 1)), F.mul(m(1, 1), m(2, 0))));
    return F.add(F.sub(t1, t2), t3);
}

/// adjugate-based inverse; throws on singular input
inline FqMat3 fqm_inv(const FqField& F, const FqMat3& A) {
    FqElem det = fqm_det(F, A);
    if (F.is_zero(det)) throw std::domain_error("fqm_inv: singular");
    FqElem dinv = F.inv(det);
    auto m = [&](int i, int j) { return A[i * 3 + j]; };
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return F.sub(F.mul(m(r0, c0), m(r1, c1)), F.mul(m(r0, c1), m(r1, c0)));
    };
    FqMat3 C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) C[j * 3 + i] = F.mul(dinv, cof(i, j));
    return C;
}

/// rank of an r x c matrix over F_q (row-major, r*c entries)
inline int fqm_rank(const FqField& F, std::vector<FqElem> a, int r, int c) {
    int rank = 0, row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (!F.is_zero(a[i * c + col])) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < c; ++j) std::swap(a[row * c + j], a[piv * c + j]);
        FqElem g = F.inv(a[row * c + col]);
        for (int j = col; j < c; ++j) a[row * c + j] = F.mul(g, a[row * c + j]);
        for (int i = 0; i < r; ++i) {
            if (i == row || F.is_zero(a[i * c + col])) continue;
            FqElem f = a[i * c + col];
            for (int j = col; j < c; ++j)
                a[i * c + j] = F.sub(a[i * c + j], F.mul(f, a[row * c + j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace rzeta

#endif
