#include "rzeta/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rzeta {

bool dominates(const DirichletSeries& xi, const DirichletSeries& eta) {
    if (xi.cap() != eta.cap()) throw std::invalid_argument("dominates: cap mismatch");
    // walk the union of supports; the inequality can only flip at support points
    auto ix = xi.coeffs().begin(), ex = xi.coeffs().end();
    auto iy = eta.coeffs().begin(), ey = eta.coeffs().end();
    Rational sx = 0, sy = 0;
    while (ix != ex || iy != ey) {
        BigInt n;
        if (ix == ex) n = iy->first;
        else if (iy == ey) n = ix->first;
        else n = std::min(ix->first, iy->first);
        while (ix != ex && ix->first == n) sx += (ix++)->second;
        while (iy != ey && iy->first == n) sy += (iy++)->second;
        if (sx > sy) return false;
    }
    return true;
}

DirichletSeries product(const DirichletSeries& xi, const DirichletSeries& eta, BigInt cap) {
    DirichletSeries out(std::move(cap));
    for (auto& [n1, c1] : xi.coeffs()) {
        if (n1 > out.cap()) break;
        for (auto& [n2, c2] : eta.coeffs()) {
            BigInt n = n1 * n2;
            if (n > out.cap()) break; // eta coefficients are sorted by degree
            out.add(n, c1 * c2);
        }
    }
    return out;
}

PsiTag psi_tag_from_name(const std::string& name) {
    if (name == "1a") return PsiTag::t1a;
    if (name == "1b") return PsiTag::t1b;
    if (name == "2a") return PsiTag::t2a;
    if (name == "2b") return PsiTag::t2b;
    if (name == "2c") return PsiTag::t2c;
    if (name == "3a") return PsiTag::t3a;
    if (name == "3b") return PsiTag::t3b;
    if (name == "4a") return PsiTag::t4a;
    if (name == "4b") return PsiTag::t4b;
    if (name == "4c") return PsiTag::t4c;
    if (name == "5") return PsiTag::t5;
    throw std::invalid_argument("unknown psi tag: " + name);
}

std::string psi_tag_name(PsiTag tag) {
    switch (tag) {
        case PsiTag::t1a: return "1a";
        case PsiTag::t1b: return "1b";
        case PsiTag::t2a: return "2a";
        case PsiTag::t2b: return "2b";
        case PsiTag::t2c: return "2c";
        case PsiTag::t3a: return "3a";
        case PsiTag::t3b: return "3b";
        case PsiTag::t4a: return "4a";
        case PsiTag::t4b: return "4b";
        case PsiTag::t4c: return "4c";
        case PsiTag::t5: return "5";
    }
    return "?";
}

std::vector<PsiTag> all_psi_tags() {
    return {PsiTag::t1a, PsiTag::t1b, PsiTag::t2a, PsiTag::t2b, PsiTag::t2c, PsiTag::t3a,
            PsiTag::t3b, PsiTag::t4a, PsiTag::t4b, PsiTag::t4c, PsiTag::t5};
}

namespace {

double qs(uint32_t q, double a, double b, double s) { return std::pow(q, a - b * s); }

/// 1/(1 - q^{2-3s}) etc.; throws when the geometric ratio is >= 1
double geom(uint32_t q, double a, double b, double s) {
    double ratio = std::pow(q, a - b * s);
    if (ratio >= 1.0) throw std::domain_error("psi_eval: geometric factor diverges");
    return 1.0 / (1.0 - ratio);
}

} // namespace

double psi_eval(PsiTag tag, PsiVariant variant, uint32_t q, double s) {
    const bool inner = variant == PsiVariant::inner;
    switch (tag) {
        case PsiTag::t1a: {
            double c = inner ? std::pow(2.0, 5 + 3 * s) : std::pow(2.0, 3 + s);
            return c * qs(q, 2, 6, s) * geom(q, 2, 3, s);
        }
        case PsiTag::t1b: {
            double c = inner ? std::pow(2.0, 5 + 3 * s) : std::pow(2.0, 3 + s);
            return c * qs(q, 0, 7, s) * geom(q, 2, 3, s);
        }
        case PsiTag::t2a: {
            double c = inner ? std::pow(2.0, 2 + s) : std::pow(2.0, 3 + 2 * s);
            return c *
                   (10 * qs(q, 1, 4, s) + 10 * qs(q, 5, 6, s) + qs(q, 2, 5, s) +
                    qs(q, 6, 7, s)) *
                   geom(q, 1, 2, s) * geom(q, 2, 3, s);
        }
        case PsiTag::t2b:
        case PsiTag::t2c: {
            double c = inner ? std::pow(2.0, 2 + s) : std::pow(2.0, 3 + 2 * s);
            return c * (qs(q, 2, 5, s) + qs(q, 6, 7, s)) * geom(q, 1, 2, s) *
                   geom(q, 2, 3, s);
        }
        case PsiTag::t3a: {
            double c = inner ? std::pow(2.0, s) : std::pow(2.0, 1 + s);
            return (qs(q, 2, 4, s) + c * qs(q, 3, 5, s)) * geom(q, 1, 2, s);
        }
        case PsiTag::t3b: {
            double c = inner ? std::pow(2.0, 7 + 4 * s) : std::pow(2.0, 9 + 5 * s);
            return c * (qs(q, 1, 6, s) + qs(q, 5, 8, s)) * geom(q, 1, 2, s) *
                   geom(q, 2, 3, s);
        }
        case PsiTag::t4a:
        case PsiTag::t4b:
        case PsiTag::t4c: {
            double c = inner ? std::pow(2.0, 1 + s) : std::pow(2.0, 3 + 2 * s);
            return c * qs(q, 4, 6, s) * geom(q, 2, 3, s);
        }
        case PsiTag::t5: {
            double c = inner ? std::pow(2.0, 1 + s) : std::pow(2.0, 3 + 2 * s);
            return c * qs(q, 3, 6, s) * geom(q, 2, 3, s);
        }
    }
    throw std::logic_error("unreachable");
}

Rational psi_threshold(PsiTag tag) {
    switch (tag) {
        case PsiTag::t1a:
        case PsiTag::t1b:
        case PsiTag::t5: return Rational(2, 3);
        case PsiTag::t2a:
        case PsiTag::t2b:
        case PsiTag::t2c: return Rational(1);
        case PsiTag::t3a: return Rational(4, 5);
        case PsiTag::t3b: return Rational(3, 4);
        case PsiTag::t4a:
        case PsiTag::t4b:
        case PsiTag::t4c: return Rational(5, 6);
    }
    throw std::logic_error("unreachable");
}

std::vector<uint32_t> primes_up_to(uint32_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<uint32_t> primes;
    for (uint32_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (uint64_t j = static_cast<uint64_t>(i) * i; j <= n; j += i) sieve[j] = false;
    }
    return primes;
}

PsiSumReport psi_sum_over_primes(PsiTag tag, PsiVariant variant, double s,
                                 uint64_t prime_bound) {
    PsiSumReport report;
    report.expected_divergent = s <= psi_threshold(tag).convert_to<double>() + 1e-12;
    const double decade_start = static_cast<double>(prime_bound) / 10.0;
    for (uint32_t p : primes_up_to(static_cast<uint32_t>(prime_bound))) {
        double term;
        try {
            term = psi_eval(tag, variant, p, s);
        } catch (const std::domain_error&) {
            report.divergent_terms = true;
            term = std::numeric_limits<double>::infinity();
        }
        report.partial_sum += term;
        if (p > decade_start) report.last_decade_increment += term;
    }
    return report;
}

AbscissaReport euler_product_abscissa(
    const std::function<DegreeMultiset(uint32_t)>& local_factory, uint32_t prime_bound,
    const BigInt& cap) {
    AbscissaReport report;
    DirichletSeries series = DirichletSeries::one(cap);
    for (uint32_t p : primes_up_to(prime_bound)) {
        DegreeMultiset local;
        try {
            local = local_factory(p);
        } catch (const std::exception&) {
            report.skipped_primes.push_back(p);
            continue;
        }
        series = product(series, DirichletSeries::from_multiset(local, cap), cap);
    }
    report.support_size = series.coeffs().size();

    // partial sums at a decade grid
    std::vector<BigInt> grid_points;
    for (BigInt N = 10; N <= cap; N *= 10) grid_points.push_back(N);
    if (grid_points.empty() || grid_points.back() != cap) grid_points.push_back(cap);
    auto it = series.coeffs().begin();
    Rational acc = 0;
    for (auto& N : grid_points) {
        while (it != series.coeffs().end() && it->first <= N) acc += (it++)->second;
        double logA = acc > 0 ? std::log(acc.convert_to<double>()) : 0.0;
        double slope = logA / std::log(N.convert_to<double>());
        report.grid.emplace_back(N, slope);
    }
    report.largest_slope = report.grid.back().second;
    if (report.grid.size() >= 2) {
        auto [n1, a1] = report.grid[report.grid.size() - 2];
        auto [n2, a2] = report.grid.back();
        double l1 = std::log(n1.convert_to<double>());
        double l2 = std::log(n2.convert_to<double>());
        report.extrapolated = (a2 * l2 - a1 * l1) / (l2 - l1);
    } else {
        report.extrapolated = report.largest_slope;
    }
    return report;
}

} // namespace rzeta
