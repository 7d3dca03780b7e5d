#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rzeta/fqmat.hpp"
#include "rzeta/intmat.hpp"
#include "rzeta/lattice.hpp"

using namespace rzeta;

namespace {

// basis indices in the fixed order
enum { H12 = 0, H23 = 1, E12 = 2, E23 = 3, E13 = 4, F21 = 5, F23 = 6, F13 = 7 };

void check_jacobi(const LieLattice& L) {
    const int d = L.d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<int64_t> ei(d, 0), ej(d, 0), ek(d, 0);
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                auto t1 = L.bracket(L.bracket(ei, ej), ek);
                auto t2 = L.bracket(L.bracket(ej, ek), ei);
                auto t3 = L.bracket(L.bracket(ek, ei), ej);
                for (int h = 0; h < d; ++h) CHECK(t1[h] + t2[h] + t3[h] == 0);
            }
}

void check_antisymmetry(const LieLattice& L) {
    for (int i = 0; i < L.d; ++i)
        for (int j = 0; j < L.d; ++j)
            for (int h = 0; h < L.d; ++h)
                CHECK(L.lambda(i, j, h) == -L.lambda(j, i, h));
}

FqMat3 embed(const FqField& F, const QuadMat3& M) {
    FqMat3 out;
    for (int k = 0; k < 9; ++k) {
        FqElem a = F.from_int(M[k].a);
        if (F.f() == 2) {
            FqElem b = F.from_int(M[k].b);
            out[k] = F.add(a, F.mul(F.make(0, 1), b));
        } else {
            REQUIRE(M[k].b == 0);
            out[k] = a;
        }
    }
    return out;
}

// exhaustive bracket agreement between structure constants and 3x3 matrices
// over F_{p^2} (or F_p for sl3)
void check_matrix_oracle_mod_p(const LieLattice& L, uint32_t p, uint32_t f) {
    FqField F(p, f);
    if (f == 2) {
        // the lattice's quadratic generator must match the field modulus
        FqElem w = F.make(0, 1);
        FqElem wsq = F.mul(w, w);
        FqElem expect = F.add(F.from_int(L.w_sq_c0), F.mul(F.from_int(L.w_sq_c1), w));
        REQUIRE(wsq == expect);
    }
    std::vector<FqMat3> bas;
    for (auto& B : L.basis) bas.push_back(embed(F, B));
    for (int i = 0; i < L.d; ++i)
        for (int j = 0; j < L.d; ++j) {
            FqMat3 lhs = fqm_commutator(F, bas[i], bas[j]);
            FqMat3 rhs = fqm_zero(F);
            for (int h = 0; h < L.d; ++h) {
                int64_t c = L.lambda(i, j, h);
                if (c == 0) continue;
                rhs = fqm_add(F, rhs, fqm_scale(F, F.from_int(c), bas[h]));
            }
            CHECK(lhs == rhs);
        }
}

} // namespace

TEST_CASE("sl3 structure constants against the matrix presentation") {
    LieLattice L = make_sl3();
    CHECK(L.d == 8);
    // [e12, f21] = h12
    CHECK(L.lambda(E12, F21, H12) == 1);
    CHECK(L.lambda(E12, F21, H23) == 0);
    // [h12, e12] = 2 e12
    std::vector<int64_t> h(8, 0), e(8, 0);
    h[H12] = 1;
    e[E12] = 1;
    auto br = L.bracket(h, e);
    CHECK(br[E12] == 2);
    for (int k = 0; k < 8; ++k)
        if (k != E12) CHECK(br[k] == 0);
    // [x, x] = 0 for all basis vectors
    for (int i = 0; i < 8; ++i) {
        std::vector<int64_t> x(8, 0);
        x[i] = 1;
        auto z = L.bracket(x, x);
        for (int k = 0; k < 8; ++k) CHECK(z[k] == 0);
    }
    check_antisymmetry(L);
    check_jacobi(L);
    check_matrix_oracle_mod_p(L, 5, 1);
    check_matrix_oracle_mod_p(L, 2, 1);
}

TEST_CASE("su3 construction") {
    for (uint32_t p : {2u, 5u, 7u}) {
        CAPTURE(p);
        LieLattice L = make_su3(p);
        CHECK(L.d == 8);
        check_antisymmetry(L);
        check_jacobi(L);
        CHECK(is_perfect(L));
        // reduction mod p matches matrix brackets over F_{p^2}
        check_matrix_oracle_mod_p(L, p, 2);
        // basis images are antihermitian, traceless, and F_p-independent
        FqField F(p, 2);
        std::vector<FqElem> stacked;
        for (auto& B : L.basis) {
            FqMat3 M = embed(F, B);
            CHECK(fqm_conj_transpose(F, M) == fqm_neg(F, M));
            CHECK(F.is_zero(fqm_trace(F, M)));
            for (int k = 0; k < 9; ++k) {
                stacked.push_back(F.from_int(M[k].a0)); // F_p coordinates
                stacked.push_back(F.from_int(M[k].a1));
            }
        }
        FqField Fp(p, 1);
        CHECK(fqm_rank(Fp, stacked, 8, 18) == 8);
    }
    CHECK_THROWS(make_su3(3));
}

TEST_CASE("perfectness") {
    CHECK(is_perfect(make_sl3()));
    LieLattice abelian;
    abelian.d = 4;
    abelian.name = "abelian";
    abelian.basis.resize(4);
    abelian.lam.assign(4 * 4 * 4, 0);
    CHECK(!is_perfect(abelian));
}

TEST_CASE("commutator matrix evaluation") {
    LieLattice L = make_sl3();
    CommutatorMatrix R(L);
    ResidueRing z8(2, 3);

    // y = coordinate vector of h12
    std::vector<uint64_t> y(8, 0);
    y[H12] = 1;
    std::vector<uint64_t> M(64);
    R.evaluate_mod(y.data(), z8, M.data());
    CHECK(M[E12 * 8 + F21] == 1);

    // y = 0 gives the zero matrix
    std::fill(y.begin(), y.end(), 0);
    R.evaluate_mod(y.data(), z8, M.data());
    for (auto v : M) CHECK(v == 0);

    // antisymmetry of the evaluation for random y over Z/8
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 1000; ++trial) {
        for (auto& c : y) c = gen() % 8;
        R.evaluate_mod(y.data(), z8, M.data());
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                CHECK(z8.add(M[i * 8 + j], M[j * 8 + i]) == 0);
    }

    CHECK_THROWS(R.evaluate_int(std::vector<int64_t>(5, 0)));
}

TEST_CASE("pairing z^t R(y) w reproduces the bracket, mod p") {
    for (auto& L : {make_sl3(), make_su3(5)}) {
        const uint32_t p = 5;
        ResidueRing Zp(p, 1);
        CommutatorMatrix R(L);
        std::mt19937_64 gen(7);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int64_t> y(8), z(8), w(8);
            for (int h = 0; h < 8; ++h) {
                y[h] = static_cast<int64_t>(gen() % p);
                z[h] = static_cast<int64_t>(gen() % p);
                w[h] = static_cast<int64_t>(gen() % p);
            }
            auto M = R.evaluate_int(y);
            int64_t lhs = 0;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) lhs += z[i] * M[i * 8 + j] * w[j];
            auto br = L.bracket(z, w);
            int64_t rhs = 0;
            for (int h = 0; h < 8; ++h) rhs += br[h] * y[h];
            CHECK(Zp.reduce(lhs) == Zp.reduce(rhs));
        }
    }
}

TEST_CASE("max rank of R(y) over F_2 and F_5 is 6") {
    for (auto& L : {make_sl3(), make_su3(2)}) {
        FqField F2(2, 1);
        CommutatorMatrix R(L);
        int maxrank = 0;
        for (uint32_t c = 0; c < 256; ++c) {
            std::vector<FqElem> y(8);
            for (int h = 0; h < 8; ++h) y[h] = F2.from_int((c >> h) & 1);
            auto M = R.evaluate_fq(y, F2);
            maxrank = std::max(maxrank, fqm_rank(F2, M, 8, 8));
        }
        CHECK(maxrank == 6);
    }
    // F_5: sampled corners plus a full sweep of a random 3-dim slice would be
    // weaker than the real thing; the 5^8 sweep is cheap enough
    for (auto& L : {make_sl3(), make_su3(5)}) {
        FqField F5(5, 1);
        CommutatorMatrix R(L);
        int maxrank = 0;
        std::vector<FqElem> y(8);
        std::vector<uint32_t> digits(8, 0);
        while (true) {
            for (int h = 0; h < 8; ++h) y[h] = F5.from_int(digits[h]);
            auto M = R.evaluate_fq(y, F5);
            maxrank = std::max(maxrank, fqm_rank(F5, M, 8, 8));
            int h = 7;
            while (h >= 0 && digits[h] == 4) digits[h--] = 0;
            if (h < 0) break;
            ++digits[h];
        }
        CHECK(maxrank == 6);
    }
}

TEST_CASE("normalized Killing form") {
    LieLattice L = make_sl3();
    std::vector<int64_t> x(8, 0), y(8, 0);
    x[H12] = 1;
    y[H12] = 1;
    CHECK(normalized_killing(L, x, y) == 2);
    std::fill(x.begin(), x.end(), 0);
    std::fill(y.begin(), y.end(), 0);
    x[E12] = 1;
    y[F21] = 1;
    CHECK(normalized_killing(L, x, y) == 1);

    // det B = +-3
    std::vector<BigInt> B(64);
    for (int k = 0; k < 64; ++k) B[k] = sl3_killing_matrix()[k];
    BigInt det = det_bareiss_big(std::move(B), 8);
    CHECK((det == 3 || det == -3));

    // invariance kappa([x,y],z) = kappa(x,[y,z])
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int64_t> a(8), b(8), c(8);
        for (int h = 0; h < 8; ++h) {
            a[h] = static_cast<int64_t>(gen() % 7) - 3;
            b[h] = static_cast<int64_t>(gen() % 7) - 3;
            c[h] = static_cast<int64_t>(gen() % 7) - 3;
        }
        CHECK(normalized_killing(L, L.bracket(a, b), c) ==
              normalized_killing(L, a, L.bracket(b, c)));
    }

    CHECK_THROWS(normalized_killing(make_su3(5), x, y));
}

TEST_CASE("permissibility criterion") {
    CHECK(permissible(1, 5, 1));
    CHECK(permissible(1, 2, 2));
    CHECK(!permissible(1, 2, 1));
    CHECK(!permissible(3, 2, 5)); // needs m >= 2e = 6
    CHECK(permissible(3, 2, 6));
    CHECK(!permissible(1, 5, 0));
    CHECK(permissible(2, 3, 2));  // m > 1 and m >= 2
    CHECK(!permissible(2, 3, 1)); // m > e/(p-1) = 1 fails
}

TEST_CASE("lattice JSON") {
    std::string js = lattice_to_json(make_sl3());
    CHECK(js.find("\"name\":\"sl3\"") != std::string::npos);
    CHECK(js.find("\"d\":8") != std::string::npos);
    CHECK(js.find("structure_constants") != std::string::npos);
}
