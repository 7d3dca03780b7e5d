#ifndef RZETA_DIRICHLET_HPP
#define RZETA_DIRICHLET_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rzeta/finitezeta.hpp"
#include "rzeta/numeric.hpp"

namespace rzeta {

/// Sparse Dirichlet series sum a_n n^{-s} with nonnegative rational
/// coefficients, truncated at a degree cap.
class DirichletSeries {
public:
    explicit DirichletSeries(BigInt cap) : cap_(std::move(cap)) {}

    const BigInt& cap() const { return cap_; }
    const std::map<BigInt, Rational>& coeffs() const { return a_; }

    void add(const BigInt& n, const Rational& c) {
        if (n < 1) throw std::invalid_argument("DirichletSeries: degree must be >= 1");
        if (c < 0) throw std::invalid_argument("DirichletSeries: negative coefficient");
        if (c == 0 || n > cap_) return;
        a_[n] += c;
    }

    Rational coefficient_sum() const {
        Rational s = 0;
        for (auto& [n, c] : a_) s += c;
        return s;
    }

    static DirichletSeries one(BigInt cap) {
        DirichletSeries d(std::move(cap));
        d.add(1, 1);
        return d;
    }

    static DirichletSeries from_multiset(const DegreeMultiset& m, BigInt cap) {
        DirichletSeries d(std::move(cap));
        for (auto& [deg, mult] : m.entries) d.add(deg, Rational(mult));
        return d;
    }

private:
    BigInt cap_;
    std::map<BigInt, Rational> a_;
};

/// xi << eta: partial sums of xi never exceed those of eta up to the cap
bool dominates(const DirichletSeries& xi, const DirichletSeries& eta);

/// Dirichlet convolution truncated at cap
DirichletSeries product(const DirichletSeries& xi, const DirichletSeries& eta, BigInt cap);

/// the approximative local Euler-factor summands, per type tag
enum class PsiTag { t1a, t1b, t2a, t2b, t2c, t3a, t3b, t4a, t4b, t4c, t5 };
enum class PsiVariant { inner, outer };

PsiTag psi_tag_from_name(const std::string& name);
std::string psi_tag_name(PsiTag tag);
std::vector<PsiTag> all_psi_tags();

/// evaluation of the printed formula; throws std::domain_error when a
/// geometric factor has ratio >= 1 (the series the formula stands for
/// diverges there)
double psi_eval(PsiTag tag, PsiVariant variant, uint32_t q, double s);

/// the tag's stated convergence threshold for the sum over primes
Rational psi_threshold(PsiTag tag);

struct PsiSumReport {
    double partial_sum = 0;
    double last_decade_increment = 0; // Cauchy indicator: sum over (B/10, B]
    bool expected_divergent = false;  // s at or below the stated threshold
    bool divergent_terms = false;     // some term's geometric factor diverged
};

PsiSumReport psi_sum_over_primes(PsiTag tag, PsiVariant variant, double s,
                                 uint64_t prime_bound);

std::vector<uint32_t> primes_up_to(uint32_t n);

struct AbscissaReport {
    std::vector<std::pair<BigInt, double>> grid; // (N, log A(N)/log N)
    double largest_slope = 0;                    // estimate at the largest grid point
    double extrapolated = 0;                     // linear-in-1/log N extrapolation
    std::vector<uint32_t> skipped_primes;
    size_t support_size = 0;
};

/// truncated Euler product of local degree multisets over primes <= bound;
/// primes where the factory throws are skipped and reported
AbscissaReport euler_product_abscissa(
    const std::function<DegreeMultiset(uint32_t)>& local_factory, uint32_t prime_bound,
    const BigInt& cap);

} // namespace rzeta

#endif
