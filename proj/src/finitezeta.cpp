#include "rzeta/finitezeta.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "rzeta/fqmat.hpp"

namespace rzeta {

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool qp_is_zero(const QPoly& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

Rational qp_eval(const QPoly& a, const Rational& q) {
    Rational s = 0;
    for (size_t i = a.size(); i-- > 0;) s = s * q + a[i];
    return s;
}

namespace {

QPoly C(int64_t c) { return c == 0 ? QPoly{} : QPoly{Rational(c)}; }
QPoly Cr(int64_t n, int64_t d) { return QPoly{Rational(n, d)}; }
const QPoly Q = {Rational(0), Rational(1)};

QPoly operator+(const QPoly& a, const QPoly& b) { return qp_add(a, b); }
QPoly operator-(const QPoly& a, const QPoly& b) { return qp_sub(a, b); }
QPoly operator*(const QPoly& a, const QPoly& b) { return qp_mul(a, b); }

} // namespace

std::vector<ZetaTerm> zeta_terms(FiniteGroupFamily fam, int branch) {
    const QPoly q = Q;
    const QPoly q2 = q * q;
    const QPoly q3 = q2 * q;
    switch (fam) {
        case FiniteGroupFamily::SL3: {
            if (branch != 1 && branch != 2)
                throw std::invalid_argument("zeta_terms: SL3 branch must be q mod 3 in {1,2}");
            std::vector<ZetaTerm> t;
            t.push_back({C(1), C(1)});
            t.push_back({C(1), q2 + q});
            t.push_back({q - C(2), q2 + q + C(1)});
            if (branch == 1) {
                t.push_back({C(6), Cr(1, 3) * (q + C(1)) * (q - C(1)) * (q - C(1))});
                t.push_back({C(3), Cr(1, 3) * (q2 + q + C(1)) * (q + C(1))});
                t.push_back({Cr(1, 3) * (q + C(2)) * (q - C(1)),
                             (q + C(1)) * (q - C(1)) * (q - C(1))});
            } else {
                t.push_back({Cr(1, 3) * (q2 + q), (q + C(1)) * (q - C(1)) * (q - C(1))});
            }
            t.push_back({Cr(1, 2) * (q2 - q), q3 - C(1)});
            t.push_back({C(1), q3});
            t.push_back({q - C(2), q3 + q2 + q});
            if (branch == 1)
                t.push_back({Cr(1, 6) * (q - C(1)) * (q - C(4)), (q2 + q + C(1)) * (q + C(1))});
            else
                t.push_back({Cr(1, 6) * (q - C(2)) * (q - C(3)), (q2 + q + C(1)) * (q + C(1))});
            return t;
        }
        case FiniteGroupFamily::SU3: {
            if (branch != 1 && branch != 2)
                throw std::invalid_argument("zeta_terms: SU3 branch must be q mod 3 in {1,2}");
            std::vector<ZetaTerm> t;
            t.push_back({C(1), C(1)});
            t.push_back({C(1), q2 - q});
            t.push_back({q, q2 - q + C(1)});
            if (branch == 2) {
                t.push_back({C(6), Cr(1, 3) * (q - C(1)) * (q + C(1)) * (q + C(1))});
                t.push_back({C(3), Cr(1, 3) * (q2 - q + C(1)) * (q - C(1))});
                t.push_back({Cr(1, 3) * (q + C(1)) * (q - C(2)),
                             (q - C(1)) * (q + C(1)) * (q + C(1))});
            } else {
                t.push_back({Cr(1, 3) * (q2 - q), (q - C(1)) * (q + C(1)) * (q + C(1))});
            }
            t.push_back({Cr(1, 2) * (q + C(1)) * (q - C(2)), q3 + C(1)});
            t.push_back({C(1), q3});
            t.push_back({q, q3 - q2 + q});
            if (branch == 2)
                t.push_back({Cr(1, 6) * (q + C(1)) * (q - C(2)), (q2 - q + C(1)) * (q - C(1))});
            else
                t.push_back({Cr(1, 6) * (q2 - q), (q2 - q + C(1)) * (q - C(1))});
            return t;
        }
        case FiniteGroupFamily::GL2:
            return {{q - C(1), C(1)},
                    {q - C(1), q},
                    {Cr(1, 2) * (q - C(1)) * (q - C(2)), q + C(1)},
                    {Cr(1, 2) * q * (q - C(1)), q - C(1)}};
        case FiniteGroupFamily::GU2:
            return {{q + C(1), C(1)},
                    {q + C(1), q},
                    {Cr(1, 2) * (q + C(1)) * (q - C(2)), q + C(1)},
                    {Cr(1, 2) * (q + C(1)) * q, q - C(1)}};
        case FiniteGroupFamily::Heisenberg:
            return {{q2, C(1)}, {q - C(1), q}};
    }
    throw std::logic_error("unreachable");
}

QPoly group_order_poly(FiniteGroupFamily fam) {
    const QPoly q = Q;
    const QPoly q2 = q * q;
    const QPoly q3 = q2 * q;
    switch (fam) {
        case FiniteGroupFamily::SL3: return q3 * (q2 - C(1)) * (q3 - C(1));
        case FiniteGroupFamily::SU3: return q3 * (q2 - C(1)) * (q3 + C(1));
        case FiniteGroupFamily::GL2: return (q2 - C(1)) * (q2 - q);
        case FiniteGroupFamily::GU2: return q * (q + C(1)) * (q2 - C(1));
        case FiniteGroupFamily::Heisenberg: return q3;
    }
    throw std::logic_error("unreachable");
}

BigInt group_order(FiniteGroupFamily fam, uint32_t q) {
    Rational v = qp_eval(group_order_poly(fam), Rational(q));
    return boost::multiprecision::numerator(v);
}

bool md2_polynomial_identity(FiniteGroupFamily fam, int branch) {
    QPoly sum;
    for (auto& term : zeta_terms(fam, branch))
        sum = qp_add(sum, qp_mul(term.multiplicity, qp_mul(term.degree, term.degree)));
    return qp_is_zero(qp_sub(sum, group_order_poly(fam)));
}

namespace {

DegreeMultiset evaluate_terms(FiniteGroupFamily fam, uint32_t q) {
    int branch = 0;
    if (fam == FiniteGroupFamily::SL3 || fam == FiniteGroupFamily::SU3) {
        branch = static_cast<int>(q % 3);
        if (branch == 0)
            throw std::invalid_argument("finite zeta: q divisible by 3 unsupported");
    }
    DegreeMultiset out;
    for (auto& term : zeta_terms(fam, branch)) {
        Rational m = qp_eval(term.multiplicity, Rational(q));
        Rational d = qp_eval(term.degree, Rational(q));
        if (boost::multiprecision::denominator(m) != 1 ||
            boost::multiprecision::denominator(d) != 1)
            throw std::logic_error("finite zeta: non-integral term value");
        BigInt mi = boost::multiprecision::numerator(m);
        BigInt di = boost::multiprecision::numerator(d);
        if (mi < 0 || di <= 0) throw std::logic_error("finite zeta: invalid term value");
        if (mi == 0) continue;
        out.entries[di] += mi;
    }
    return out;
}

} // namespace

DegreeMultiset zeta_sl3_fq(uint32_t q) { return evaluate_terms(FiniteGroupFamily::SL3, q); }
DegreeMultiset zeta_su3_fq(uint32_t q) { return evaluate_terms(FiniteGroupFamily::SU3, q); }
DegreeMultiset zeta_gl2_fq(uint32_t q) { return evaluate_terms(FiniteGroupFamily::GL2, q); }
DegreeMultiset zeta_gu2_fq(uint32_t q) { return evaluate_terms(FiniteGroupFamily::GU2, q); }
DegreeMultiset zeta_heisenberg_fq(uint32_t q) {
    return evaluate_terms(FiniteGroupFamily::Heisenberg, q);
}

DegreeMultiset zeta_finite_group(FiniteGroupFamily fam, uint32_t q) {
    return evaluate_terms(fam, q);
}

namespace {

std::pair<uint32_t, uint32_t> q_to_pf(uint32_t q) {
    for (uint32_t p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            if (q == p * p) return {p, 2};
            throw std::invalid_argument("unsupported prime power");
        }
    return {q, 1};
}

/// generic conjugacy-class counter for a list of invertible matrices
template <int N>
uint64_t count_classes(const FqField& F, const std::vector<std::array<FqElem, N * N>>& elems) {
    using Mat = std::array<FqElem, N * N>;
    auto mul = [&](const Mat& A, const Mat& B) {
        Mat C;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                FqElem s = F.zero();
                for (int k = 0; k < N; ++k)
                    s = F.add(s, F.mul(A[i * N + k], B[k * N + j]));
                C[i * N + j] = s;
            }
        return C;
    };
    auto key_of = [&](const Mat& A) {
        uint64_t key = 0;
        for (int k = 0; k < N * N; ++k) key = key * F.q() + F.index(A[k]);
        return key;
    };
    std::unordered_map<uint64_t, uint32_t> index;
    index.reserve(elems.size() * 2);
    for (uint32_t i = 0; i < elems.size(); ++i) index[key_of(elems[i])] = i;

    // inverses by scanning the multiplication (cheap enough at these sizes)
    // g^{-1} found via g * h == 1 using the index of the identity is not
    // direct; invert explicitly instead
    auto inv2 = [&](const Mat& A) {
        FqElem det = F.sub(F.mul(A[0], A[3]), F.mul(A[1], A[2]));
        FqElem di = F.inv(det);
        Mat R;
        R[0] = F.mul(di, A[3]);
        R[1] = F.neg(F.mul(di, A[1]));
        R[2] = F.neg(F.mul(di, A[2]));
        R[3] = F.mul(di, A[0]);
        return R;
    };
    std::vector<Mat> inverses(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        if constexpr (N == 3) {
            FqMat3 m;
            std::copy(elems[i].begin(), elems[i].end(), m.begin());
            FqMat3 mi = fqm_inv(F, m);
            std::copy(mi.begin(), mi.end(), inverses[i].begin());
        } else {
            inverses[i] = inv2(elems[i]);
        }
    }

    std::vector<bool> seen(elems.size(), false);
    uint64_t classes = 0;
    for (uint32_t i = 0; i < elems.size(); ++i) {
        if (seen[i]) continue;
        ++classes;
        for (uint32_t g = 0; g < elems.size(); ++g) {
            Mat conj = mul(mul(elems[g], elems[i]), inverses[g]);
            auto it = index.find(key_of(conj));
            if (it == index.end()) throw std::logic_error("conjugate left the group");
            seen[it->second] = true;
        }
    }
    return classes;
}

} // namespace

uint64_t class_number_bruteforce(FiniteGroupFamily fam, uint32_t q) {
    switch (fam) {
        case FiniteGroupFamily::SL3: {
            auto [p, f] = q_to_pf(q);
            FqField F(p, f);
            std::vector<std::array<FqElem, 9>> elems;
            const uint64_t total = upow(q, 9);
            if (total > (1ull << 26)) throw std::invalid_argument("class_number: budget");
            for (uint64_t idx = 0; idx < total; ++idx) {
                FqMat3 g;
                uint64_t t = idx;
                for (int k = 0; k < 9; ++k) {
                    g[k] = F.from_index(static_cast<uint32_t>(t % q));
                    t /= q;
                }
                if (fqm_det(F, g) == F.one()) elems.push_back(g);
            }
            return count_classes<3>(F, elems);
        }
        case FiniteGroupFamily::SU3: {
            FqField F2(q, 2);
            const uint64_t total = upow(static_cast<uint64_t>(q) * q, 9);
            if (total > (1ull << 26)) throw std::invalid_argument("class_number: budget");
            std::vector<std::array<FqElem, 9>> elems;
            for (uint64_t idx = 0; idx < total; ++idx) {
                FqMat3 g;
                uint64_t t = idx;
                for (int k = 0; k < 9; ++k) {
                    g[k] = F2.from_index(static_cast<uint32_t>(t % F2.q()));
                    t /= F2.q();
                }
                if (!(fqm_mul(F2, fqm_conj_transpose(F2, g), g) == fqm_identity(F2))) continue;
                if (!(fqm_det(F2, g) == F2.one())) continue;
                elems.push_back(g);
            }
            return count_classes<3>(F2, elems);
        }
        case FiniteGroupFamily::GL2: {
            auto [p, f] = q_to_pf(q);
            FqField F(p, f);
            std::vector<std::array<FqElem, 4>> elems;
            for (uint64_t idx = 0; idx < upow(q, 4); ++idx) {
                std::array<FqElem, 4> g;
                uint64_t t = idx;
                for (int k = 0; k < 4; ++k) {
                    g[k] = F.from_index(static_cast<uint32_t>(t % q));
                    t /= q;
                }
                if (!F.is_zero(F.sub(F.mul(g[0], g[3]), F.mul(g[1], g[2])))) elems.push_back(g);
            }
            return count_classes<2>(F, elems);
        }
        case FiniteGroupFamily::GU2: {
            FqField F2(q, 2);
            std::vector<std::array<FqElem, 4>> elems;
            for (uint64_t idx = 0; idx < upow(static_cast<uint64_t>(q) * q, 4); ++idx) {
                std::array<FqElem, 4> g;
                uint64_t t = idx;
                for (int k = 0; k < 4; ++k) {
                    g[k] = F2.from_index(static_cast<uint32_t>(t % F2.q()));
                    t /= F2.q();
                }
                // g^circ g == 1 for the 2x2 identity form
                auto entry = [&](int i, int j) {
                    FqElem s = F2.zero();
                    for (int k = 0; k < 2; ++k)
                        s = F2.add(s, F2.mul(F2.frobenius(g[k * 2 + i]), g[k * 2 + j]));
                    return s;
                };
                if (!(entry(0, 0) == F2.one())) continue;
                if (!(entry(1, 1) == F2.one())) continue;
                if (!F2.is_zero(entry(0, 1))) continue;
                elems.push_back(g);
            }
            return count_classes<2>(F2, elems);
        }
        case FiniteGroupFamily::Heisenberg: {
            auto [p, f] = q_to_pf(q);
            FqField F(p, f);
            std::vector<std::array<FqElem, 9>> elems;
            for (uint32_t a = 0; a < q; ++a)
                for (uint32_t b = 0; b < q; ++b)
                    for (uint32_t c = 0; c < q; ++c) {
                        FqMat3 g = fqm_identity(F);
                        g[1] = F.from_index(a);
                        g[2] = F.from_index(b);
                        g[5] = F.from_index(c);
                        elems.push_back(g);
                    }
            return count_classes<3>(F, elems);
        }
    }
    throw std::logic_error("unreachable");
}

std::string finite_zeta_json(FiniteGroupFamily fam, uint32_t q, bool with_bruteforce) {
    DegreeMultiset z = zeta_finite_group(fam, q);
    std::ostringstream os;
    os << "{\"group\":\"" << family_name(fam) << "\",\"q\":" << q << ",\"degrees\":[";
    bool first = true;
    for (auto& [d, m] : z.entries) {
        if (!first) os << ",";
        first = false;
        os << "{\"d\":" << d.str() << ",\"m\":" << m.str() << "}";
    }
    os << "],\"checks\":{\"sum_md2\":" << z.sum_m_d2().str()
       << ",\"order\":" << group_order(fam, q).str()
       << ",\"classes\":" << z.num_characters().str();
    if (with_bruteforce)
        os << ",\"classes_bruteforce\":" << class_number_bruteforce(fam, q);
    os << "}}";
    return os.str();
}

FiniteGroupFamily family_from_name(const std::string& name) {
    if (name == "sl3") return FiniteGroupFamily::SL3;
    if (name == "su3") return FiniteGroupFamily::SU3;
    if (name == "gl2") return FiniteGroupFamily::GL2;
    if (name == "gu2") return FiniteGroupFamily::GU2;
    if (name == "heisenberg" || name == "h") return FiniteGroupFamily::Heisenberg;
    throw std::invalid_argument("unknown finite group family: " + name);
}

std::string family_name(FiniteGroupFamily fam) {
    switch (fam) {
        case FiniteGroupFamily::SL3: return "sl3";
        case FiniteGroupFamily::SU3: return "su3";
        case FiniteGroupFamily::GL2: return "gl2";
        case FiniteGroupFamily::GU2: return "gu2";
        case FiniteGroupFamily::Heisenberg: return "heisenberg";
    }
    return "?";
}

} // namespace rzeta
