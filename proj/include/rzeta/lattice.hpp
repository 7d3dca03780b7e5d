#ifndef RZETA_LATTICE_HPP
#define RZETA_LATTICE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rzeta/fq.hpp"
#include "rzeta/modring.hpp"

namespace rzeta {

/// Entry of a 3x3 matrix over the quadratic order Z[w], w^2 = k0 + k1*w.
/// (k0,k1) = (delta,0) gives Z[sqrt(delta)]; (1,1) gives the p = 2 ring.
struct QuadInt {
    int64_t a = 0; // constant part
    int64_t b = 0; // coefficient of w

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

using QuadMat3 = std::array<QuadInt, 9>;

/// A Z-Lie lattice of rank d given by integer structure constants
/// lambda_{ij}^h with respect to a fixed ordered basis.  The two instances
/// used throughout are sl3 (basis h12,h23,e12,e23,e13,f21,f23,f13) and
/// su3 = { x in sl3(O) : conjugate-transpose(x) = -x } for the unramified
/// quadratic extension O fixed by the residue characteristic.
class LieLattice {
public:
    int d = 0;
    std::string name;
    uint32_t built_for_p = 0; // su3 only: residue characteristic baked into the constants
    int64_t w_sq_c0 = 0;      // w^2 = c0 + c1 w for the basis matrices below
    int64_t w_sq_c1 = 0;
    std::vector<QuadMat3> basis;   // basis as 3x3 matrices over Z[w]
    std::vector<int64_t> lam;      // lambda[(i*d+j)*d+h]

    int64_t lambda(int i, int j, int h) const { return lam[(i * d + j) * d + h]; }

    /// coordinates -> 3x3 matrix over Z[w]
    QuadMat3 to_matrix(const std::vector<int64_t>& coords) const;

    /// bracket of coordinate vectors via the structure constants
    std::vector<int64_t> bracket(const std::vector<int64_t>& x,
                                 const std::vector<int64_t>& y) const;
};

LieLattice make_sl3();
LieLattice make_su3(uint32_t p);

/// The antisymmetric d x d matrix of linear forms R(Y), entry (i,j) equal to
/// sum_h lambda_{ij}^h Y_h.  Evaluation lands in whichever ring the caller
/// supplies coordinates for.
class CommutatorMatrix {
public:
    explicit CommutatorMatrix(const LieLattice& L);

    int dim() const { return d_; }
    const LieLattice& lattice() const { return *L_; }

    /// coefficient vector of entry (i,j)
    const int64_t* entry_coeffs(int i, int j) const { return &coeff_[(i * d_ + j) * d_]; }

    /// evaluate over Z/p^n into out[d*d]; y has d coordinates in [0, modulus)
    void evaluate_mod(const uint64_t* y, const ResidueRing& R, uint64_t* out) const;

    /// evaluate over Z (canonical integer lift)
    std::vector<int64_t> evaluate_int(const std::vector<int64_t>& y) const;

    /// evaluate over F_q
    std::vector<FqElem> evaluate_fq(const std::vector<FqElem>& y, const FqField& F) const;

private:
    const LieLattice* L_;
    int d_;
    std::vector<int64_t> coeff_; // same layout as lam
};

bool is_perfect(const LieLattice& L);

/// x^t B y for the normalized Killing form of the sl3 instance.
int64_t normalized_killing(const LieLattice& L, const std::vector<int64_t>& x,
                           const std::vector<int64_t>& y);

const std::array<int64_t, 64>& sl3_killing_matrix();

/// Sufficient permissibility criterion: m > e/(p-1), plus m >= e/(p-2) for
/// p > 2 and m >= 2e for p = 2.
bool permissible(uint32_t e, uint32_t p, uint32_t m);

/// {name, d, nonzero structure constants as (i,j,h,value)} as a JSON string
std::string lattice_to_json(const LieLattice& L);

} // namespace rzeta

#endif
