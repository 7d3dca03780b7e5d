#include "rzeta/lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "rzeta/intmat.hpp"

namespace rzeta {

namespace {

QuadInt qmul(const QuadInt& x, const QuadInt& y, int64_t k0, int64_t k1) {
    // (a + bw)(c + dw), w^2 = k0 + k1 w
    int64_t t = x.b * y.b;
    return {x.a * y.a + k0 * t, x.a * y.b + x.b * y.a + k1 * t};
}

QuadMat3 mat_mul(const QuadMat3& A, const QuadMat3& B, int64_t k0, int64_t k1) {
    QuadMat3 C{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QuadInt s{0, 0};
            for (int k = 0; k < 3; ++k) {
                QuadInt p = qmul(A[i * 3 + k], B[k * 3 + j], k0, k1);
                s.a += p.a;
                s.b += p.b;
            }
            C[i * 3 + j] = s;
        }
    return C;
}

QuadMat3 mat_sub(const QuadMat3& A, const QuadMat3& B) {
    QuadMat3 C{};
    for (int k = 0; k < 9; ++k) C[k] = {A[k].a - B[k].a, A[k].b - B[k].b};
    return C;
}

QuadMat3 commutator(const QuadMat3& A, const QuadMat3& B, int64_t k0, int64_t k1) {
    return mat_sub(mat_mul(A, B, k0, k1), mat_mul(B, A, k0, k1));
}

/// Expand a matrix in the lattice basis; throws if the coordinates are not
/// integral (the basis must span the target over Z).
std::vector<int64_t> expand_in_basis(const std::vector<QuadMat3>& basis, const QuadMat3& target) {
    const int d = static_cast<int>(basis.size());
    const int rows = 18;
    // rational Gaussian elimination on [B | t]
    std::vector<Rational> a(rows * (d + 1));
    for (int r = 0; r < rows; ++r) {
        int cell = r / 2;
        bool wpart = r % 2;
        for (int c = 0; c < d; ++c)
            a[r * (d + 1) + c] = wpart ? basis[c][cell].b : basis[c][cell].a;
        a[r * (d + 1) + d] = wpart ? target[cell].b : target[cell].a;
    }
    std::vector<int> pivot_row(d, -1);
    int row = 0;
    for (int col = 0; col < d && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (a[i * (d + 1) + col] != 0) { piv = i; break; }
        if (piv < 0) throw std::logic_error("expand_in_basis: basis not independent");
        for (int j = 0; j <= d; ++j) std::swap(a[row * (d + 1) + j], a[piv * (d + 1) + j]);
        Rational g = a[row * (d + 1) + col];
        for (int j = col; j <= d; ++j) a[row * (d + 1) + j] /= g;
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            Rational f = a[i * (d + 1) + col];
            if (f == 0) continue;
            for (int j = col; j <= d; ++j) a[i * (d + 1) + j] -= f * a[row * (d + 1) + j];
        }
        pivot_row[col] = row;
        ++row;
    }
    // consistency: residual rows must vanish
    for (int i = row; i < rows; ++i)
        if (a[i * (d + 1) + d] != 0)
            throw std::logic_error("expand_in_basis: target outside the lattice span");
    std::vector<int64_t> coords(d);
    for (int c = 0; c < d; ++c) {
        Rational v = a[pivot_row[c] * (d + 1) + d];
        if (boost::multiprecision::denominator(v) != 1)
            throw std::logic_error("expand_in_basis: non-integral coordinate");
        coords[c] = static_cast<int64_t>(boost::multiprecision::numerator(v));
    }
    return coords;
}

void fill_structure_constants(LieLattice& L) {
    const int d = L.d;
    L.lam.assign(static_cast<size_t>(d) * d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            QuadMat3 br = commutator(L.basis[i], L.basis[j], L.w_sq_c0, L.w_sq_c1);
            std::vector<int64_t> c = expand_in_basis(L.basis, br);
            for (int h = 0; h < d; ++h) L.lam[(i * d + j) * d + h] = c[h];
        }
}

QuadMat3 unit(int r, int c) {
    QuadMat3 M{};
    M[r * 3 + c] = {1, 0};
    return M;
}

QuadMat3 scale_w(const QuadMat3& A) {
    // multiply by w: (a + bw)*w = b*k0 + (a + b*k1)w -- only used on pure
    // integer matrices here, so keep it simple
    QuadMat3 M{};
    for (int k = 0; k < 9; ++k) M[k] = {0, A[k].a};
    return M;
}

QuadMat3 lin(int64_t ca, const QuadMat3& A, int64_t cb, const QuadMat3& B) {
    QuadMat3 M{};
    for (int k = 0; k < 9; ++k)
        M[k] = {ca * A[k].a + cb * B[k].a, ca * A[k].b + cb * B[k].b};
    return M;
}

uint32_t least_nonresidue_p(uint32_t p) {
    for (uint32_t dd = 2; dd < p; ++dd) {
        uint64_t r = 1, base = dd, e = (p - 1) / 2;
        while (e) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        if (r == p - 1) return dd;
    }
    throw std::logic_error("least_nonresidue_p");
}

} // namespace

QuadMat3 LieLattice::to_matrix(const std::vector<int64_t>& coords) const {
    if (static_cast<int>(coords.size()) != d) throw std::invalid_argument("to_matrix: dimension");
    QuadMat3 M{};
    for (int h = 0; h < d; ++h)
        for (int k = 0; k < 9; ++k) {
            M[k].a += coords[h] * basis[h][k].a;
            M[k].b += coords[h] * basis[h][k].b;
        }
    return M;
}

std::vector<int64_t> LieLattice::bracket(const std::vector<int64_t>& x,
                                         const std::vector<int64_t>& y) const {
    if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
        throw std::invalid_argument("bracket: dimension");
    std::vector<int64_t> out(d, 0);
    for (int i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (y[j] == 0) continue;
            int64_t c = x[i] * y[j];
            for (int h = 0; h < d; ++h) out[h] += c * lambda(i, j, h);
        }
    }
    return out;
}

LieLattice make_sl3() {
    LieLattice L;
    L.d = 8;
    L.name = "sl3";
    L.built_for_p = 0;
    L.w_sq_c0 = 0;
    L.w_sq_c1 = 0;
    QuadMat3 h12 = lin(1, unit(0, 0), -1, unit(1, 1));
    QuadMat3 h23 = lin(1, unit(1, 1), -1, unit(2, 2));
    L.basis = {h12, h23, unit(0, 1), unit(1, 2), unit(0, 2),
               unit(1, 0), unit(2, 1), unit(2, 0)};
    fill_structure_constants(L);
    return L;
}

LieLattice make_su3(uint32_t p) {
    if (p == 3) throw std::invalid_argument("make_su3: p = 3 unsupported");
    if (!is_prime_u64(p)) throw std::invalid_argument("make_su3: p must be prime");
    LieLattice L;
    L.d = 8;
    L.name = "su3";
    L.built_for_p = p;

    QuadMat3 s12 = lin(1, unit(0, 1), -1, unit(1, 0));
    QuadMat3 s13 = lin(1, unit(0, 2), -1, unit(2, 0));
    QuadMat3 s23 = lin(1, unit(1, 2), -1, unit(2, 1));
    QuadMat3 h12 = lin(1, unit(0, 0), -1, unit(1, 1));
    QuadMat3 h23 = lin(1, unit(1, 1), -1, unit(2, 2));
    QuadMat3 m12 = lin(1, unit(0, 1), 1, unit(1, 0));
    QuadMat3 m13 = lin(1, unit(0, 2), 1, unit(2, 0));
    QuadMat3 m23 = lin(1, unit(1, 2), 1, unit(2, 1));

    if (p != 2) {
        // O = Z_p[w], w^2 = delta, sigma(w) = -w.  Antihermitian traceless
        // matrices decompose as skew + w * (traceless symmetric).
        int64_t delta = least_nonresidue_p(p);
        L.w_sq_c0 = delta;
        L.w_sq_c1 = 0;
        L.basis = {s12, s13, s23,
                   scale_w(h12), scale_w(h23), scale_w(m12), scale_w(m13), scale_w(m23)};
    } else {
        // O = Z_2[w], w^2 = w + 1, sigma(w) = 1 - w.  Here x is antihermitian
        // and traceless exactly when x = A - w (A + A^t) with tr A = 0, so the
        // w-scaled symmetric span has index 8 and we take the basis
        // psi(e12)-psi(e21) etc. together with psi of h12,h23,e12,e23,e13.
        L.w_sq_c0 = 1;
        L.w_sq_c1 = 1;
        auto psi = [](const QuadMat3& A) {
            QuadMat3 M{};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    M[r * 3 + c].a = A[r * 3 + c].a;
                    M[r * 3 + c].b = -(A[r * 3 + c].a + A[c * 3 + r].a);
                }
            return M;
        };
        L.basis = {s12, s13, s23,
                   psi(h12), psi(h23), psi(unit(0, 1)), psi(unit(1, 2)), psi(unit(0, 2))};
    }
    fill_structure_constants(L);
    return L;
}

CommutatorMatrix::CommutatorMatrix(const LieLattice& L) : L_(&L), d_(L.d), coeff_(L.lam) {}

void CommutatorMatrix::evaluate_mod(const uint64_t* y, const ResidueRing& R, uint64_t* out) const {
    const int d = d_;
    const uint64_t m = R.modulus();
    for (int i = 0; i < d; ++i) {
        out[i * d + i] = 0;
        for (int j = i + 1; j < d; ++j) {
            const int64_t* c = &coeff_[(i * d + j) * d];
            int64_t acc = 0;
            for (int h = 0; h < d; ++h) acc += c[h] * static_cast<int64_t>(y[h]);
            uint64_t v = R.reduce(acc);
            out[i * d + j] = v;
            out[j * d + i] = v == 0 ? 0 : m - v;
        }
    }
}

std::vector<int64_t> CommutatorMatrix::evaluate_int(const std::vector<int64_t>& y) const {
    if (static_cast<int>(y.size()) != d_) throw std::invalid_argument("evaluate_int: dimension");
    std::vector<int64_t> out(static_cast<size_t>(d_) * d_, 0);
    for (int i = 0; i < d_; ++i)
        for (int j = i + 1; j < d_; ++j) {
            const int64_t* c = &coeff_[(i * d_ + j) * d_];
            int64_t acc = 0;
            for (int h = 0; h < d_; ++h) acc += c[h] * y[h];
            out[i * d_ + j] = acc;
            out[j * d_ + i] = -acc;
        }
    return out;
}

std::vector<FqElem> CommutatorMatrix::evaluate_fq(const std::vector<FqElem>& y,
                                                  const FqField& F) const {
    if (static_cast<int>(y.size()) != d_) throw std::invalid_argument("evaluate_fq: dimension");
    std::vector<FqElem> out(static_cast<size_t>(d_) * d_, F.zero());
    for (int i = 0; i < d_; ++i)
        for (int j = i + 1; j < d_; ++j) {
            const int64_t* c = &coeff_[(i * d_ + j) * d_];
            FqElem acc = F.zero();
            for (int h = 0; h < d_; ++h) {
                if (c[h] == 0) continue;
                acc = F.add(acc, F.mul(F.from_int(c[h]), y[h]));
            }
            out[i * d_ + j] = acc;
            out[j * d_ + i] = F.neg(acc);
        }
    return out;
}

bool is_perfect(const LieLattice& L) {
    const int d = L.d;
    std::vector<BigInt> m(static_cast<size_t>(d) * d * d);
    // rows indexed by h, columns by the pair (i,j)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int h = 0; h < d; ++h)
                m[h * d * d + (i * d + j)] = L.lambda(i, j, h);
    return rank_over_q(std::move(m), d, d * d) == d;
}

const std::array<int64_t, 64>& sl3_killing_matrix() {
    static const std::array<int64_t, 64> B = {
        2, -1, 0, 0, 0, 0, 0, 0,
        -1, 2, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 1, 0, 0,
        0, 0, 0, 0, 0, 0, 1, 0,
        0, 0, 0, 0, 0, 0, 0, 1,
        0, 0, 1, 0, 0, 0, 0, 0,
        0, 0, 0, 1, 0, 0, 0, 0,
        0, 0, 0, 0, 1, 0, 0, 0};
    return B;
}

int64_t normalized_killing(const LieLattice& L, const std::vector<int64_t>& x,
                           const std::vector<int64_t>& y) {
    if (L.name != "sl3") throw std::invalid_argument("normalized_killing: sl3 instance only");
    if (x.size() != 8 || y.size() != 8) throw std::invalid_argument("normalized_killing: dimension");
    const auto& B = sl3_killing_matrix();
    int64_t s = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) s += x[i] * B[i * 8 + j] * y[j];
    return s;
}

bool permissible(uint32_t e, uint32_t p, uint32_t m) {
    if (e < 1) throw std::invalid_argument("permissible: e >= 1");
    // m > e/(p-1)
    if (static_cast<uint64_t>(m) * (p - 1) <= e) return false;
    if (p > 2) return static_cast<uint64_t>(m) * (p - 2) >= e;
    return m >= 2 * e;
}

std::string lattice_to_json(const LieLattice& L) {
    std::ostringstream os;
    os << "{\"name\":\"" << L.name << "\",\"d\":" << L.d << ",\"structure_constants\":[";
    bool first = true;
    for (int i = 0; i < L.d; ++i)
        for (int j = 0; j < L.d; ++j)
            for (int h = 0; h < L.d; ++h) {
                int64_t v = L.lambda(i, j, h);
                if (v == 0) continue;
                if (!first) os << ",";
                first = false;
                os << "[" << i << "," << j << "," << h << "," << v << "]";
            }
    os << "]}";
    return os.str();
}

} // namespace rzeta
