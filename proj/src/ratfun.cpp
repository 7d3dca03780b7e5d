#include "rzeta/ratfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rzeta {

std::string LaurentQ::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigInt ac = abs(c);
        if (ac != 1 || e == 0) os << ac.str();
        if (e != 0) {
            if (ac != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

PolyT pt_trim(PolyT p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

bool pt_is_zero(const PolyT& p) {
    for (auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

PolyT pt_add(const PolyT& a, const PolyT& b) {
    PolyT r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.size()) r[k] = r[k] + a[k];
        if (k < b.size()) r[k] = r[k] + b[k];
    }
    return pt_trim(std::move(r));
}

PolyT pt_sub(const PolyT& a, const PolyT& b) {
    PolyT r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.size()) r[k] = r[k] + a[k];
        if (k < b.size()) r[k] = r[k] - b[k];
    }
    return pt_trim(std::move(r));
}

PolyT pt_mul(const PolyT& a, const PolyT& b) {
    if (pt_is_zero(a) || pt_is_zero(b)) return {};
    PolyT r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return pt_trim(std::move(r));
}

bool pt_eq(const PolyT& a, const PolyT& b) { return pt_is_zero(pt_sub(a, b)); }

bool pt_try_divide(const PolyT& num, const PolyT& den, PolyT& quot) {
    PolyT d = pt_trim(den);
    if (d.empty()) throw std::domain_error("pt_try_divide: zero divisor");
    if (!d.back().is_monomial())
        throw std::domain_error("pt_try_divide: divisor leading coefficient not a monomial");
    auto [lead_exp, lead_coeff] = *d.back().terms().begin();
    PolyT r = pt_trim(num);
    quot.assign(r.size() > d.size() ? r.size() - d.size() + 1 : 1, LaurentQ(0));
    while (!r.empty() && r.size() >= d.size()) {
        size_t shift = r.size() - d.size();
        LaurentQ qc;
        try {
            qc = r.back().div_monomial(lead_coeff, lead_exp);
        } catch (const std::domain_error&) {
            return false;
        }
        quot[shift] = quot[shift] + qc;
        PolyT sub(shift + d.size());
        for (size_t k = 0; k < d.size(); ++k) sub[shift + k] = qc * d[k];
        r = pt_sub(r, sub);
        if (r.size() > shift + d.size() - 1) return false; // no progress
    }
    if (!r.empty()) return false;
    quot = pt_trim(std::move(quot));
    return true;
}

PolyT pt_one_minus(int a, int b) {
    PolyT p(static_cast<size_t>(b) + 1, LaurentQ(0));
    p[0] = LaurentQ(1);
    p[b] = LaurentQ::monomial(-1, a);
    return p;
}

RatFunQT::RatFunQT(PolyT num, PolyT den) : num_(pt_trim(std::move(num))), den_(pt_trim(std::move(den))) {
    if (pt_is_zero(den_)) throw std::domain_error("RatFunQT: zero denominator");
    if (pt_is_zero(num_)) {
        num_ = {LaurentQ(0)};
        den_ = {LaurentQ(1)};
    }
}

RatFunQT RatFunQT::monomial(BigInt coeff, int qexp, int texp) {
    PolyT p(static_cast<size_t>(texp) + 1, LaurentQ(0));
    p[texp] = LaurentQ::monomial(std::move(coeff), qexp);
    return from_poly(std::move(p));
}

RatFunQT operator+(const RatFunQT& a, const RatFunQT& b) {
    return RatFunQT(pt_add(pt_mul(a.num_, b.den_), pt_mul(b.num_, a.den_)),
                    pt_mul(a.den_, b.den_));
}

RatFunQT operator-(const RatFunQT& a, const RatFunQT& b) {
    return RatFunQT(pt_sub(pt_mul(a.num_, b.den_), pt_mul(b.num_, a.den_)),
                    pt_mul(a.den_, b.den_));
}

RatFunQT operator*(const RatFunQT& a, const RatFunQT& b) {
    return RatFunQT(pt_mul(a.num_, b.num_), pt_mul(a.den_, b.den_));
}

RatFunQT operator/(const RatFunQT& a, const RatFunQT& b) {
    if (pt_is_zero(b.num_)) throw std::domain_error("RatFunQT: division by zero");
    return RatFunQT(pt_mul(a.num_, b.den_), pt_mul(a.den_, b.num_));
}

RatFunQT RatFunQT::invert_q() const {
    // f(q^{-1}, t^{-1}) = t^{deg den - deg num} rev(num)/rev(den)
    auto rev = [](const PolyT& p) {
        PolyT r(p.rbegin(), p.rend());
        for (auto& c : r) c = c.invert_q();
        return pt_trim(std::move(r));
    };
    PolyT n = rev(num_), d = rev(den_);
    int shift = static_cast<int>(den_.size()) - static_cast<int>(num_.size());
    if (shift >= 0) {
        PolyT tpow(static_cast<size_t>(shift) + 1, LaurentQ(0));
        tpow[shift] = LaurentQ(1);
        n = pt_mul(n, tpow);
    } else {
        PolyT tpow(static_cast<size_t>(-shift) + 1, LaurentQ(0));
        tpow[-shift] = LaurentQ(1);
        d = pt_mul(d, tpow);
    }
    return RatFunQT(std::move(n), std::move(d));
}

std::vector<Rational> RatFunQT::series_in_t(const Rational& q_value, int k_max) const {
    if (q_value == 0) throw std::domain_error("series_in_t: q must be nonzero");
    std::vector<Rational> n(k_max + 1, Rational(0)), d(k_max + 1, Rational(0));
    for (size_t k = 0; k < num_.size() && static_cast<int>(k) <= k_max; ++k)
        n[k] = num_[k].eval(q_value);
    for (size_t k = 0; k < den_.size() && static_cast<int>(k) <= k_max; ++k)
        d[k] = den_[k].eval(q_value);
    Rational d0 = den_.empty() ? Rational(0) : den_[0].eval(q_value);
    if (d0 == 0) throw std::domain_error("series_in_t: denominator constant term vanishes");
    std::vector<Rational> out(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        Rational acc = n[k];
        for (int j = 0; j < k; ++j) acc -= out[j] * d[k - j];
        out[k] = acc / d0;
    }
    return out;
}

Rational RatFunQT::eval(const Rational& q_value, const Rational& t_value) const {
    auto eval_pt = [&](const PolyT& p) {
        Rational s = 0, tp = 1;
        for (size_t k = 0; k < p.size(); ++k) {
            if (!p[k].is_zero()) s += p[k].eval(q_value) * tp;
            tp *= t_value;
        }
        return s;
    };
    Rational dv = eval_pt(den_);
    if (dv == 0) throw std::domain_error("eval: pole");
    return eval_pt(num_) / dv;
}

std::string RatFunQT::to_string() const {
    auto pt_str = [](const PolyT& p) {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < p.size(); ++k) {
            if (p[k].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << p[k].to_string() << ")";
            if (k == 1) os << "*t";
            else if (k > 1) os << "*t^" << k;
        }
        return first ? std::string("0") : os.str();
    };
    std::ostringstream os;
    os << "[" << pt_str(num_) << "] / [" << pt_str(den_) << "]";
    return os.str();
}

std::string RatFunQT::to_exponent_string() const {
    auto monomial_str = [](const BigInt& c, int qe, int te) {
        std::ostringstream os;
        BigInt ac = abs(c);
        if (ac != 1 || (qe == 0 && te == 0)) os << ac.str();
        if (qe != 0 || te != 0) {
            if (ac != 1) os << " ";
            os << "q^{";
            if (qe != 0) os << qe;
            if (te != 0) {
                if (te == -1) os << "+s";
                else if (te == 1) os << "-s";
                else if (te < 0) os << "+" << -te << "s";
                else os << "-" << te << "s";
            }
            os << "}";
        }
        return os.str();
    };
    auto pt_str = [&](const PolyT& p) {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < p.size(); ++k) {
            for (auto& [e, c] : p[k].terms()) {
                if (!first) os << (c > 0 ? " + " : " - ");
                else if (c < 0) os << "-";
                first = false;
                os << monomial_str(c, e, static_cast<int>(k));
            }
        }
        return first ? std::string("0") : os.str();
    };
    std::ostringstream os;
    os << "(" << pt_str(num_) << ") / (" << pt_str(den_) << ")";
    return os.str();
}

LaurentQ a2_u_poly(A2Variant v) {
    LaurentQ u;
    if (v == A2Variant::sl3) {
        // X^3 + X^2 - X - 1 - X^{-1}
        u = LaurentQ::monomial(1, 3) + LaurentQ::monomial(1, 2) + LaurentQ::monomial(-1, 1) +
            LaurentQ::monomial(-1, 0) + LaurentQ::monomial(-1, -1);
    } else {
        // -X^3 + X^2 - X + 1 - X^{-1}
        u = LaurentQ::monomial(-1, 3) + LaurentQ::monomial(1, 2) + LaurentQ::monomial(-1, 1) +
            LaurentQ::monomial(1, 0) + LaurentQ::monomial(-1, -1);
    }
    return u;
}

RatFunQT congruence_zeta(A2Variant v, uint32_t m) {
    LaurentQ u = a2_u_poly(v);
    PolyT num(6, LaurentQ(0));
    num[0] = LaurentQ(1);
    num[2] = u * LaurentQ::monomial(1, -3);              // u(q) q^{-3}
    num[3] = u.invert_q() * LaurentQ::monomial(1, -2);   // u(q^{-1}) q^{-2}
    num[5] = LaurentQ::monomial(1, -5);
    PolyT den = pt_mul(pt_one_minus(1, 2), pt_one_minus(2, 3));
    RatFunQT base(std::move(num), std::move(den));
    return RatFunQT::from_poly({LaurentQ::monomial(1, static_cast<int>(8 * m))}) * base;
}

bool funeq_check(A2Variant v, uint32_t m) {
    RatFunQT Z = congruence_zeta(v, m);
    RatFunQT lhs = Z.invert_q();
    RatFunQT rhs = RatFunQT::from_poly({LaurentQ::monomial(1, 8 * (1 - 2 * static_cast<int>(m)))}) * Z;
    return lhs == rhs;
}

namespace {

/// factor a PolyT into unit-monomial * t^k * prod (1 - q^a t^b); throws when
/// the shape is unsupported
std::vector<std::pair<int, int>> factor_cyclotomic_like(PolyT p) {
    std::vector<std::pair<int, int>> factors;
    p = pt_trim(std::move(p));
    if (p.empty()) throw std::domain_error("factor: zero polynomial");
    // strip t-content
    size_t low = 0;
    while (low < p.size() && p[low].is_zero()) ++low;
    if (low > 0) p.erase(p.begin(), p.begin() + static_cast<long>(low));
    while (p.size() > 1) {
        if (!p[0].is_monomial())
            throw std::domain_error("factor: constant term not a monomial");
        // lowest positive-degree term supplies the candidate factors
        size_t b0 = 1;
        while (b0 < p.size() && p[b0].is_zero()) ++b0;
        if (b0 >= p.size()) throw std::domain_error("factor: no positive-degree term");
        auto [c0e, c0c] = *p[0].terms().begin();
        bool divided = false;
        for (auto& [e, c] : p[b0].terms()) {
            // candidate (1 - q^a t^{b0}) with a = e - c0e (after normalizing
            // the constant term to 1)
            int a = e - c0e;
            PolyT cand = pt_one_minus(a, static_cast<int>(b0));
            PolyT quot;
            if (pt_try_divide(p, cand, quot)) {
                factors.emplace_back(a, static_cast<int>(b0));
                p = pt_trim(std::move(quot));
                divided = true;
                break;
            }
            (void)c;
        }
        if (!divided) throw std::domain_error("factor: unsupported denominator shape");
    }
    if (!p[0].is_monomial())
        throw std::domain_error("factor: residual unit is not a monomial");
    return factors;
}

} // namespace

std::set<Rational> pole_real_parts(const RatFunQT& f) {
    auto factors = factor_cyclotomic_like(f.den());
    // cancel factors dividing the numerator exactly
    PolyT num = f.num();
    std::vector<std::pair<int, int>> kept;
    for (auto& [a, b] : factors) {
        PolyT quot;
        if (pt_try_divide(num, pt_one_minus(a, b), quot)) num = quot;
        else kept.emplace_back(a, b);
    }
    std::set<Rational> out;
    for (auto& [a, b] : kept) out.insert(Rational(a) / Rational(b));
    return out;
}

Rational abscissa_from_poles(const RatFunQT& f) {
    auto poles = pole_real_parts(f);
    if (poles.empty()) throw std::domain_error("abscissa_from_poles: no poles");
    return *poles.rbegin();
}

} // namespace rzeta
