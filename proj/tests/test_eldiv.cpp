#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rzeta/eldiv.hpp"
#include "rzeta/fqmat.hpp"
#include "rzeta/lattice.hpp"

using namespace rzeta;

namespace {

DivisorProfile mk(std::initializer_list<int> entries, uint32_t level) {
    DivisorProfile p;
    p.level = static_cast<uint8_t>(level);
    p.len = 0;
    for (int e : entries) p.a[p.len++] = static_cast<uint8_t>(e);
    return p;
}

std::vector<uint64_t> reduce_mat(const std::vector<int64_t>& M, const ResidueRing& R) {
    std::vector<uint64_t> out(M.size());
    for (size_t k = 0; k < M.size(); ++k) out[k] = R.reduce(M[k]);
    return out;
}

// S M S^t over Z/p^n
std::vector<uint64_t> congruence(const std::vector<uint64_t>& M,
                                 const std::vector<uint64_t>& S, int d,
                                 const ResidueRing& R) {
    std::vector<uint64_t> T(M.size(), 0), out(M.size(), 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            uint64_t acc = 0;
            for (int k = 0; k < d; ++k) acc = R.add(acc, R.mul(S[i * d + k], M[k * d + j]));
            T[i * d + j] = acc;
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            uint64_t acc = 0;
            for (int k = 0; k < d; ++k) acc = R.add(acc, R.mul(T[i * d + k], S[j * d + k]));
            out[i * d + j] = acc;
        }
    return out;
}

bool is_unit_matrix(const std::vector<uint64_t>& S, int d, uint32_t p) {
    FqField F(p, 1);
    std::vector<FqElem> a(S.size());
    for (size_t k = 0; k < S.size(); ++k) a[k] = F.from_int(static_cast<int64_t>(S[k] % p));
    return fqm_rank(F, a, d, d) == d;
}

} // namespace

TEST_CASE("profile of hand-built matrices") {
    for (uint32_t p : {2u, 5u}) {
        ResidueRing R(p, 2);
        int64_t pp = p;
        std::vector<int64_t> M = {0, pp, -pp, 0};
        auto prof = antisym_profile(reduce_mat(M, R), 2, R);
        CHECK(prof == mk({1}, 2));
        // the minor oracle sees the same thing on the lift
        CHECK(profile_via_minors(M, 2, R) == mk({1}, 2));
    }

    for (uint32_t n : {1u, 2u, 3u}) {
        ResidueRing R(2, n);
        std::vector<uint64_t> Z(16, 0);
        auto prof = antisym_profile(Z, 4, R);
        CHECK(prof == mk({static_cast<int>(n), static_cast<int>(n)}, n));
        CHECK(profile_via_minors(std::vector<int64_t>(16, 0), 4, R) ==
              mk({static_cast<int>(n), static_cast<int>(n)}, n));
    }

    // 6x6 block diagonal with antisymmetric blocks at valuations 0,1,2 over Z/3^4
    {
        ResidueRing R(3, 4);
        std::vector<int64_t> M(36, 0);
        int64_t v[3] = {1, 3, 9};
        for (int b = 0; b < 3; ++b) {
            M[(2 * b) * 6 + (2 * b + 1)] = v[b];
            M[(2 * b + 1) * 6 + (2 * b)] = -v[b];
        }
        CHECK(antisym_profile(reduce_mat(M, R), 6, R) == mk({0, 1, 2}, 4));
        CHECK(profile_via_minors(M, 6, R) == mk({0, 1, 2}, 4));
    }
}

TEST_CASE("profile of the regular nilpotent commutator evaluation") {
    LieLattice L = make_sl3();
    CommutatorMatrix R(L);
    ResidueRing Z5(5, 1);
    // y = coordinates of e12 + e23 (basis order h12,h23,e12,e23,e13,f21,f23,f13)
    std::vector<uint64_t> y = {0, 0, 1, 1, 0, 0, 0, 0};
    std::vector<uint64_t> M(64);
    R.evaluate_mod(y.data(), Z5, M.data());

    // rank of R(y) mod 5 is 6 by row reduction
    FqField F5(5, 1);
    std::vector<FqElem> Mf(64);
    for (int k = 0; k < 64; ++k) Mf[k] = F5.from_int(static_cast<int64_t>(M[k]));
    CHECK(fqm_rank(F5, Mf, 8, 8) == 6);

    auto prof = antisym_profile(M, 8, Z5);
    CHECK(prof == mk({0, 0, 0, 1}, 1));

    std::vector<int64_t> lift = R.evaluate_int({0, 0, 1, 1, 0, 0, 0, 0});
    CHECK(profile_via_minors(lift, 8, Z5) == mk({0, 0, 0, 1}, 1));

    // x = E12 alone is not antisymmetric as input: reject
    std::vector<uint64_t> bad(64, 0);
    bad[0 * 8 + 1] = 1;
    CHECK_THROWS(antisym_profile(bad, 8, Z5));
}

TEST_CASE("minor oracle agrees on random matrices over Z/8") {
    ResidueRing R(2, 3);
    std::mt19937_64 gen(123);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int64_t> M(64, 0);
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                int64_t v = static_cast<int64_t>(gen() % 8);
                M[i * 8 + j] = v;
                M[j * 8 + i] = -v;
            }
        auto a = antisym_profile(reduce_mat(M, R), 8, R);
        auto b = profile_via_minors(M, 8, R);
        CHECK(a == b);
        // and the BigInt minor path agrees with the int64 one
        if (trial < 50) CHECK(profile_via_minors(M, 8, R, true) == b);
    }
}

TEST_CASE("congruence invariance of the profile") {
    std::mt19937_64 gen(321);
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{2, 3}, {5, 2}}) {
        ResidueRing R(p, n);
        const uint64_t m = R.modulus();
        int done = 0;
        while (done < 1000) {
            std::vector<uint64_t> M(64, 0);
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) {
                    uint64_t v = gen() % m;
                    M[i * 8 + j] = v;
                    M[j * 8 + i] = R.neg(v);
                }
            std::vector<uint64_t> S(64);
            for (auto& s : S) s = gen() % m;
            if (!is_unit_matrix(S, 8, p)) continue;
            auto a = antisym_profile(M, 8, R);
            auto b = antisym_profile(congruence(M, S, 8, R), 8, R);
            CHECK(a == b);
            ++done;
        }
    }
}

TEST_CASE("rank mod p is twice the number of zero profile entries") {
    LieLattice L = make_sl3();
    CommutatorMatrix R(L);
    ResidueRing Z2(2, 1);
    FqField F2(2, 1);
    for (uint32_t c = 1; c < 256; ++c) {
        std::vector<uint64_t> y(8);
        for (int h = 0; h < 8; ++h) y[h] = (c >> h) & 1;
        std::vector<uint64_t> M(64);
        R.evaluate_mod(y.data(), Z2, M.data());
        auto prof = antisym_profile(M, 8, Z2);
        std::vector<FqElem> Mf(64);
        for (int k = 0; k < 64; ++k) Mf[k] = F2.from_int(static_cast<int64_t>(M[k]));
        int zero_entries = 0;
        for (int i = 0; i < prof.len; ++i)
            if (prof.a[i] == 0) ++zero_entries;
        CHECK(fqm_rank(F2, Mf, 8, 8) == 2 * zero_entries);
    }
    // beyond the commutator images: random antisymmetric matrices mod 2
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<uint64_t> M(64, 0);
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                uint64_t v = gen() & 1;
                M[i * 8 + j] = v;
                M[j * 8 + i] = v; // -v = v mod 2
            }
        auto prof = antisym_profile(M, 8, Z2);
        std::vector<FqElem> Mf(64);
        for (int k = 0; k < 64; ++k) Mf[k] = F2.from_int(static_cast<int64_t>(M[k]));
        int zero_entries = 0;
        for (int i = 0; i < prof.len; ++i)
            if (prof.a[i] == 0) ++zero_entries;
        CHECK(fqm_rank(F2, Mf, 8, 8) == 2 * zero_entries);
    }
}

TEST_CASE("last profile entry is n for primitive vectors, p = 2, n <= 2") {
    // rank over the fraction field is at most 6, so a_4 truncates to n
    for (auto& L : {make_sl3(), make_su3(2)}) {
        CommutatorMatrix R(L);
        for (uint32_t n : {1u, 2u}) {
            ResidueRing ring(2, n);
            const uint64_t m = ring.modulus();
            std::vector<uint64_t> y(8, 0);
            std::vector<uint64_t> M(64);
            ProfileWorkspace ws;
            while (true) {
                bool prim = false;
                for (int h = 0; h < 8; ++h)
                    if (y[h] & 1) { prim = true; break; }
                if (prim) {
                    R.evaluate_mod(y.data(), ring, M.data());
                    auto prof = antisym_profile(M.data(), 8, ring, ws);
                    CHECK(prof.a[3] == n);
                }
                int h = 7;
                while (h >= 0 && y[h] == m - 1) y[h--] = 0;
                if (h < 0) break;
                ++y[h];
            }
        }
    }
}
