#ifndef RZETA_RATFUN_HPP
#define RZETA_RATFUN_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rzeta/numeric.hpp"

namespace rzeta {

/// Laurent polynomial in q with integer coefficients.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(int64_t c) { if (c != 0) c_[0] = c; } // NOLINT(google-explicit-constructor)
    static LaurentQ monomial(BigInt coeff, int exp) {
        LaurentQ r;
        if (coeff != 0) r.c_[exp] = std::move(coeff);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    const std::map<int, BigInt>& terms() const { return c_; }
    BigInt coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? BigInt(0) : it->second;
    }

    friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r = a;
        for (auto& [e, c] : b.c_) {
            auto& dst = r.c_[e];
            dst += c;
            if (dst == 0) r.c_.erase(e);
        }
        return r;
    }
    friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) { return a + (-b); }
    LaurentQ operator-() const {
        LaurentQ r = *this;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_) {
                auto& dst = r.c_[ea + eb];
                dst += ca * cb;
                if (dst == 0) r.c_.erase(ea + eb);
            }
        return r;
    }
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.c_ == b.c_; }

    /// q -> q^{-1}
    LaurentQ invert_q() const {
        LaurentQ r;
        for (auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    /// exact division by a monomial coeff*q^exp; coeff must divide every term
    LaurentQ div_monomial(const BigInt& coeff, int exp) const {
        LaurentQ r;
        for (auto& [e, c] : c_) {
            if (c % coeff != 0) throw std::domain_error("div_monomial: not divisible");
            r.c_[e - exp] = c / coeff;
        }
        return r;
    }

    Rational eval(const Rational& q) const {
        Rational s = 0;
        for (auto& [e, c] : c_) s += Rational(c) * qpow(q, e);
        return s;
    }

    std::string to_string() const;

private:
    std::map<int, BigInt> c_;
};

/// polynomial in t with LaurentQ coefficients; index = t-degree
using PolyT = std::vector<LaurentQ>;

PolyT pt_trim(PolyT p);
bool pt_is_zero(const PolyT& p);
PolyT pt_add(const PolyT& a, const PolyT& b);
PolyT pt_sub(const PolyT& a, const PolyT& b);
PolyT pt_mul(const PolyT& a, const PolyT& b);
bool pt_eq(const PolyT& a, const PolyT& b);
/// exact division; requires the divisor's leading t-coefficient to be a
/// monomial.  Returns false if the division leaves a remainder.
bool pt_try_divide(const PolyT& num, const PolyT& den, PolyT& quot);

/// 1 - q^a t^b
PolyT pt_one_minus(int a, int b);

/// Rational function in (q, t), t = q^{-s}.  Exact arithmetic; equality by
/// cross multiplication.
class RatFunQT {
public:
    RatFunQT() : num_{LaurentQ(0)}, den_{LaurentQ(1)} {}
    RatFunQT(PolyT num, PolyT den);
    static RatFunQT from_poly(PolyT p) { return RatFunQT(std::move(p), {LaurentQ(1)}); }
    static RatFunQT monomial(BigInt coeff, int qexp, int texp);

    const PolyT& num() const { return num_; }
    const PolyT& den() const { return den_; }

    friend RatFunQT operator+(const RatFunQT& a, const RatFunQT& b);
    friend RatFunQT operator-(const RatFunQT& a, const RatFunQT& b);
    friend RatFunQT operator*(const RatFunQT& a, const RatFunQT& b);
    friend RatFunQT operator/(const RatFunQT& a, const RatFunQT& b);
    friend bool operator==(const RatFunQT& a, const RatFunQT& b) {
        return pt_eq(pt_mul(a.num_, b.den_), pt_mul(b.num_, a.den_));
    }

    /// the substitution q -> q^{-1}; since t = q^{-s} is itself a power of q,
    /// it transforms as t -> t^{-1}
    RatFunQT invert_q() const;

    /// exact t-expansion coefficients c_0..c_kmax at a rational value of q
    std::vector<Rational> series_in_t(const Rational& q_value, int k_max) const;

    Rational eval(const Rational& q_value, const Rational& t_value) const;

    std::string to_string() const;

    /// render with t = q^{-s} folded into the exponents, i.e. monomials
    /// printed as q^{a-bs}
    std::string to_exponent_string() const;

private:
    PolyT num_, den_;
};

enum class A2Variant { sl3, su3 };

/// u(X) as a Laurent polynomial, per variant
LaurentQ a2_u_poly(A2Variant v);

/// q^{8m} (1 + u(q) q^{-3} t^2 + u(q^{-1}) q^{-2} t^3 + q^{-5} t^5)
///        / ((1 - q t^2)(1 - q^2 t^3))
RatFunQT congruence_zeta(A2Variant v, uint32_t m);

/// check invert_q(Z) == q^{8(1-2m)} Z for Z = congruence_zeta(variant, m)
bool funeq_check(A2Variant v, uint32_t m = 0);

/// real parts a/b of the zero loci of the denominator factors (1 - q^a t^b),
/// after cancelling factors that divide the numerator exactly
std::set<Rational> pole_real_parts(const RatFunQT& f);

/// max of pole_real_parts (the factor's abscissa)
Rational abscissa_from_poles(const RatFunQT& f);

} // namespace rzeta

#endif
