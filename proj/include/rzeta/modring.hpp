#ifndef RZETA_MODRING_HPP
#define RZETA_MODRING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rzeta/numeric.hpp"

namespace rzeta {

/// Valuation of an element of Z/p^n.  An engaged value k means p^k exactly
/// divides the canonical representative; disengaged means the element is 0,
/// i.e. the valuation is >= n.
using Valuation = std::optional<uint32_t>;

/// The finite ring Z/p^n, p prime, n >= 1.  Canonical representatives live in
/// [0, p^n).  Instances are immutable and cheap to copy around by reference;
/// unit inverses are table-backed for the small moduli used in enumeration.
class ResidueRing {
public:
    ResidueRing(uint32_t p, uint32_t n) : p_(p), n_(n) {
        if (!is_prime_u64(p)) throw std::invalid_argument("ResidueRing: p must be prime");
        if (n < 1) throw std::invalid_argument("ResidueRing: n must be >= 1");
        modulus_ = 1;
        for (uint32_t i = 0; i < n; ++i) {
            if (modulus_ > UINT64_MAX / p) throw std::overflow_error("ResidueRing: modulus too large");
            modulus_ *= p;
        }
        if (modulus_ <= (1u << 22)) {
            inv_table_.assign(modulus_, 0);
            for (uint64_t x = 1; x < modulus_; ++x)
                if (x % p_ != 0) inv_table_[x] = inv_slow(x);
        }
    }

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint64_t modulus() const { return modulus_; }

    uint64_t reduce(int64_t x) const {
        int64_t m = static_cast<int64_t>(modulus_);
        int64_t r = x % m;
        if (r < 0) r += m;
        return static_cast<uint64_t>(r);
    }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + modulus_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : modulus_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % modulus_; }

    bool is_unit(uint64_t a) const { return a % p_ != 0; }

    /// Largest k < n with p^k | a, or the ">= n" sentinel for a = 0.
    Valuation val(uint64_t a) const {
        if (a == 0) return std::nullopt;
        uint32_t v = 0;
        while (a % p_ == 0) {
            a /= p_;
            ++v;
        }
        return v;
    }

    /// Exact division by p^k; requires val(a) >= k.
    uint64_t div_pk(uint64_t a, uint32_t k) const {
        uint64_t pk = 1;
        for (uint32_t i = 0; i < k; ++i) pk *= p_;
        if (a % pk != 0) throw std::domain_error("div_pk: not divisible");
        return a / pk;
    }

    uint64_t inv(uint64_t a) const {
        if (!is_unit(a)) throw std::domain_error("inv: not a unit");
        if (!inv_table_.empty()) return inv_table_[a];
        return inv_slow(a);
    }

    uint64_t pow_p(uint32_t k) const {
        uint64_t r = 1;
        for (uint32_t i = 0; i < k; ++i) r *= p_;
        return r;
    }

private:
    uint64_t inv_slow(uint64_t a) const {
        // extended Euclid on (a, modulus)
        int64_t t = 0, newt = 1;
        int64_t r = static_cast<int64_t>(modulus_), newr = static_cast<int64_t>(a);
        while (newr != 0) {
            int64_t qq = r / newr;
            int64_t tmp = t - qq * newt;
            t = newt;
            newt = tmp;
            tmp = r - qq * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<int64_t>(modulus_);
        return static_cast<uint64_t>(t);
    }

    uint32_t p_;
    uint32_t n_;
    uint64_t modulus_;
    std::vector<uint64_t> inv_table_;
};

/// An element of Z/p^n together with its ring.  Immutable value type for the
/// public surface; hot loops work on raw uint64_t via ResidueRing directly.
struct ResidueElem {
    uint64_t value = 0;
    const ResidueRing* ring = nullptr;

    ResidueElem() = default;
    ResidueElem(int64_t v, const ResidueRing& r) : value(r.reduce(v)), ring(&r) {}

    Valuation val() const { return ring->val(value); }

    friend ResidueElem operator+(ResidueElem a, ResidueElem b) {
        return ResidueElem(static_cast<int64_t>(a.ring->add(a.value, b.value)), *a.ring);
    }
    friend ResidueElem operator-(ResidueElem a, ResidueElem b) {
        return ResidueElem(static_cast<int64_t>(a.ring->sub(a.value, b.value)), *a.ring);
    }
    friend ResidueElem operator*(ResidueElem a, ResidueElem b) {
        return ResidueElem(static_cast<int64_t>(a.ring->mul(a.value, b.value)), *a.ring);
    }
    friend bool operator==(const ResidueElem& a, const ResidueElem& b) {
        return a.value == b.value;
    }
};

inline Valuation val(const ResidueElem& x) { return x.val(); }

} // namespace rzeta

#endif
