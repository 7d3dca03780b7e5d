#ifndef RZETA_FQ_HPP
#define RZETA_FQ_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "rzeta/numeric.hpp"

namespace rzeta {

struct FqElem {
    uint32_t a0 = 0; // constant coefficient
    uint32_t a1 = 0; // coefficient of the adjoined root (f = 2 only)

    friend bool operator==(const FqElem&, const FqElem&) = default;
};

/// F_q with q = p^f, f in {1,2}.  For f = 2 the field is F_p[X]/(m(X)) with
/// m = X^2 - delta (p odd, delta the least non-residue) or m = X^2 + X + 1
/// (p = 2).  Stored as X^2 = c0 + c1 X.
class FqField {
public:
    explicit FqField(uint32_t p, uint32_t f = 1) : p_(p), f_(f) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FqField: p must be prime");
        if (f != 1 && f != 2) throw std::invalid_argument("FqField: f must be 1 or 2");
        q_ = (f == 2) ? p * p : p;
        if (f == 2) {
            if (p == 2) {
                c0_ = 1; c1_ = 1;          // X^2 = X + 1
            } else {
                c0_ = least_nonresidue(p); // X^2 = delta
                c1_ = 0;
            }
        }
    }

    uint32_t p() const { return p_; }
    uint32_t f() const { return f_; }
    uint32_t q() const { return q_; }
    uint32_t modulus_c0() const { return c0_; }
    uint32_t modulus_c1() const { return c1_; }

    FqElem zero() const { return {0, 0}; }
    FqElem one() const { return {1, 0}; }
    FqElem from_int(int64_t v) const {
        int64_t r = v % p_;
        if (r < 0) r += p_;
        return {static_cast<uint32_t>(r), 0};
    }
    FqElem make(uint32_t a0, uint32_t a1) const {
        if (f_ == 1 && a1 != 0) throw std::invalid_argument("make: a1 in prime field");
        return {a0 % p_, a1 % p_};
    }

    /// index in [0, q) <-> element, for exhaustive scans
    FqElem from_index(uint32_t i) const { return {i % p_, i / p_}; }
    uint32_t index(const FqElem& x) const { return x.a0 + x.a1 * p_; }

    bool is_zero(const FqElem& x) const { return x.a0 == 0 && x.a1 == 0; }
    bool in_prime_field(const FqElem& x) const { return x.a1 == 0; }

    FqElem add(const FqElem& a, const FqElem& b) const {
        return {addp(a.a0, b.a0), addp(a.a1, b.a1)};
    }
    FqElem sub(const FqElem& a, const FqElem& b) const {
        return {subp(a.a0, b.a0), subp(a.a1, b.a1)};
    }
    FqElem neg(const FqElem& a) const { return {negp(a.a0), negp(a.a1)}; }

    FqElem mul(const FqElem& a, const FqElem& b) const {
        if (f_ == 1) return {mulp(a.a0, b.a0), 0};
        uint32_t t = mulp(a.a1, b.a1); // coefficient of X^2
        uint32_t r0 = addp(mulp(a.a0, b.a0), mulp(c0_, t));
        uint32_t r1 = addp(addp(mulp(a.a0, b.a1), mulp(a.a1, b.a0)), mulp(c1_, t));
        return {r0, r1};
    }

    FqElem pow(FqElem a, uint64_t e) const {
        FqElem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// the non-trivial automorphism x -> x^q of F_{q^2} | F_q (identity for f = 1)
    FqElem frobenius(const FqElem& a) const {
        if (f_ == 1) return a;
        if (p_ == 2) return {addp(a.a0, a.a1), a.a1}; // sigma(X) = X + 1
        return {a.a0, negp(a.a1)};                    // sigma(X) = -X
    }

    FqElem inv(const FqElem& a) const {
        if (is_zero(a)) throw std::domain_error("inv: zero");
        if (f_ == 1) return {invp(a.a0), 0};
        FqElem conj = frobenius(a);
        FqElem nrm = mul(a, conj); // in F_p
        uint32_t ninv = invp(nrm.a0);
        return {mulp(conj.a0, ninv), mulp(conj.a1, ninv)};
    }

private:
    uint32_t addp(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t subp(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t negp(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mulp(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t invp(uint32_t a) const {
        // a^(p-2) mod p
        uint64_t r = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = (r * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }

    static uint32_t least_nonresidue(uint32_t p) {
        for (uint32_t d = 2; d < p; ++d) {
            // Euler criterion
            uint64_t r = 1, base = d, e = (p - 1) / 2;
            while (e) {
                if (e & 1) r = (r * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            if (r == p - 1) return d;
        }
        throw std::logic_error("no non-residue found");
    }

    uint32_t p_;
    uint32_t f_;
    uint32_t q_;
    uint32_t c0_ = 0, c1_ = 0;
};

/// norm = x sigma(x), trace = x + sigma(x); requires f = 2.
inline std::pair<FqElem, FqElem> fq_norm_trace(const FqField& F, const FqElem& x) {
    if (F.f() != 2) throw std::domain_error("fq_norm_trace: field must have f = 2");
    FqElem s = F.frobenius(x);
    FqElem nrm = F.mul(x, s);
    FqElem tr = F.add(x, s);
    if (!F.in_prime_field(nrm) || !F.in_prime_field(tr))
        throw std::logic_error("norm/trace left the prime field");
    return {nrm, tr};
}

} // namespace rzeta

#endif
