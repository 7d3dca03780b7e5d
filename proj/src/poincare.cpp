#include "rzeta/poincare.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "json.hpp"

namespace rzeta {

namespace {

uint32_t encode_profile(const DivisorProfile& prof) {
    uint32_t k = 0;
    for (int i = 0; i < prof.len; ++i) k |= static_cast<uint32_t>(prof.a[i]) << (4 * i);
    return k;
}

DivisorProfile decode_profile(uint32_t key, int len, uint32_t level) {
    DivisorProfile prof;
    prof.len = static_cast<uint8_t>(len);
    prof.level = static_cast<uint8_t>(level);
    for (int i = 0; i < len; ++i) prof.a[i] = static_cast<uint8_t>((key >> (4 * i)) & 0xF);
    return prof;
}

unsigned resolve_workers(unsigned workers) {
    if (workers) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Scan one level exhaustively; tally[key] += 1 per primitive vector.
void scan_level(const CommutatorMatrix& R, const ResidueRing& ring, unsigned workers,
                std::vector<uint64_t>& tally_out) {
    const int d = R.dim();
    const uint64_t m = ring.modulus();
    uint64_t blocks = m * m;
    std::vector<std::vector<uint64_t>> tallies(workers, std::vector<uint64_t>(1 << 16, 0));
    auto work = [&](unsigned wi) {
        std::vector<uint64_t> y(d, 0);
        std::vector<uint64_t> mat(static_cast<size_t>(d) * d);
        ProfileWorkspace ws;
        auto& tally = tallies[wi];
        const uint32_t p = ring.p();
        for (uint64_t blk = wi; blk < blocks; blk += workers) {
            y[0] = blk / m;
            y[1] = blk % m;
            bool head_unit = (y[0] % p != 0) || (y[1] % p != 0);
            for (int h = 2; h < d; ++h) y[h] = 0;
            // odometer over the remaining d-2 coordinates
            while (true) {
                bool primitive = head_unit;
                if (!primitive)
                    for (int h = 2; h < d; ++h)
                        if (y[h] % p != 0) { primitive = true; break; }
                if (primitive) {
                    R.evaluate_mod(y.data(), ring, mat.data());
                    DivisorProfile prof = antisym_profile(mat.data(), d, ring, ws);
                    ++tally[encode_profile(prof)];
                }
                int h = d - 1;
                while (h >= 2 && y[h] == m - 1) { y[h] = 0; --h; }
                if (h < 2) break;
                ++y[h];
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < workers; ++wi) threads.emplace_back(work, wi);
    for (auto& t : threads) t.join();
    tally_out.assign(1 << 16, 0);
    for (auto& t : tallies)
        for (size_t k = 0; k < t.size(); ++k) tally_out[k] += t[k];
}

} // namespace

ProfileCensus enumerate_counts(const LieLattice& L, uint32_t p, uint32_t n_max,
                               unsigned workers, uint64_t budget) {
    if (n_max < 1) throw std::invalid_argument("enumerate_counts: n_max >= 1");
    const int d = L.d;
    // total profile computations across levels
    BigInt required = 0;
    for (uint32_t n = 1; n <= n_max; ++n)
        required += bigpow(p, static_cast<unsigned long>(d) * n) -
                    bigpow(p, static_cast<unsigned long>(d) * (n - 1));
    if (required > budget)
        throw BudgetExceeded(required.convert_to<uint64_t>());

    auto t0 = std::chrono::steady_clock::now();
    ProfileCensus census;
    census.lattice_name = L.name;
    census.p = p;
    census.exact = true;
    CommutatorMatrix R(L);
    unsigned w = resolve_workers(workers);
    for (uint32_t n = 1; n <= n_max; ++n) {
        ResidueRing ring(p, n);
        std::vector<uint64_t> tally;
        scan_level(R, ring, w, tally);
        auto& lvl = census.levels[n];
        for (uint32_t key = 0; key < tally.size(); ++key)
            if (tally[key]) lvl[decode_profile(key, d / 2, n)] = tally[key];
    }
    census.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return census;
}

std::vector<BigInt> zeta_coeffs(const ProfileCensus& census, uint32_t m, uint32_t k_max) {
    if (!census.exact) throw std::invalid_argument("zeta_coeffs: census must be exact");
    const uint32_t n_max = census.n_max();
    if (2 * n_max + 1 < k_max)
        throw std::invalid_argument("zeta_coeffs: census incomplete for requested k_max "
                                    "(need 2*n_max+1 >= k_max)");
    // Completeness rests on every class at level n having weight >= 2n, i.e.
    // profiles start (0,0,...).  That is a level-1 condition (rank of R(y)
    // mod p at least 4 for primitive y), so check it on the level-1 census.
    auto it1 = census.levels.find(1);
    if (it1 == census.levels.end()) throw std::invalid_argument("zeta_coeffs: level 1 missing");
    for (auto& [prof, cnt] : it1->second)
        if (prof.len >= 2 && (prof.a[0] != 0 || prof.a[1] != 0))
            throw std::logic_error("zeta_coeffs: level-1 profile with rank < 4 breaks the "
                                   "completeness bound");
    const BigInt q = census.p;
    std::vector<Rational> r(k_max + 1, Rational(0));
    r[0] = Rational(bigpow(q, 8 * m)); // level-0 class
    for (auto& [n, profs] : census.levels) {
        for (auto& [prof, cnt] : profs) {
            uint32_t k = prof.weight();
            if (k < 2 * n)
                throw std::logic_error("zeta_coeffs: observed weight below 2n");
            if (k > k_max) continue;
            // q^{8m} * N * q^{-2k}
            r[k] += Rational(BigInt(cnt) * bigpow(q, 8 * m)) / Rational(bigpow(q, 2 * k));
        }
    }
    std::vector<BigInt> out(k_max + 1);
    for (uint32_t k = 0; k <= k_max; ++k) {
        if (boost::multiprecision::denominator(r[k]) != 1)
            throw std::logic_error("zeta_coeffs: non-integral multiplicity r_" +
                                   std::to_string(k));
        out[k] = boost::multiprecision::numerator(r[k]);
        if (out[k] < 0) throw std::logic_error("zeta_coeffs: negative multiplicity");
    }
    return out;
}

BigInt radical_index(const LieLattice& L, const std::vector<int64_t>& w, uint32_t p,
                     uint32_t n) {
    ResidueRing ring(p, n);
    bool prim = false;
    for (int64_t c : w)
        if (ring.reduce(c) % p != 0) { prim = true; break; }
    if (!prim) throw std::invalid_argument("radical_index: w must be primitive");
    CommutatorMatrix R(L);
    std::vector<uint64_t> y(L.d);
    for (int h = 0; h < L.d; ++h) y[h] = ring.reduce(w[h]);
    std::vector<uint64_t> mat(static_cast<size_t>(L.d) * L.d);
    R.evaluate_mod(y.data(), ring, mat.data());
    BigInt kernel = kernel_size_mod_pn(mat, L.d, ring);
    BigInt total = bigpow(p, static_cast<unsigned long>(L.d) * n);
    if (total % kernel != 0) throw std::logic_error("radical_index: kernel does not divide");
    return total / kernel;
}

BigInt radical_index_from_profile(const DivisorProfile& prof, uint32_t p) {
    unsigned long e = 0;
    for (int i = 0; i < prof.len; ++i) e += 2u * (prof.level - std::min<uint8_t>(prof.a[i], prof.level));
    return bigpow(p, e);
}

ProfileCensus montecarlo_profiles(const LieLattice& L, uint32_t p, uint32_t n,
                                  uint64_t num_samples, uint64_t seed, unsigned workers) {
    const int d = L.d;
    ResidueRing ring(p, n);
    const uint64_t m = ring.modulus();
    if (m > 255) throw std::invalid_argument("montecarlo_profiles: modulus above 255");
    auto t0 = std::chrono::steady_clock::now();

    // deterministic draw phase (independent of worker count)
    std::mt19937_64 gen(seed);
    const uint64_t lim = (UINT64_MAX / m) * m;
    auto draw = [&]() {
        uint64_t r;
        do { r = gen(); } while (r >= lim);
        return r % m;
    };
    std::vector<uint8_t> coords;
    coords.reserve(num_samples * d);
    for (uint64_t s = 0; s < num_samples; ++s) {
        while (true) {
            uint64_t buf[8];
            bool prim = false;
            for (int h = 0; h < d; ++h) {
                buf[h] = draw();
                if (buf[h] % p != 0) prim = true;
            }
            if (!prim) continue;
            for (int h = 0; h < d; ++h) coords.push_back(static_cast<uint8_t>(buf[h]));
            break;
        }
    }

    unsigned w = resolve_workers(workers);
    CommutatorMatrix R(L);
    std::vector<std::vector<uint64_t>> tallies(w, std::vector<uint64_t>(1 << 16, 0));
    auto work = [&](unsigned wi) {
        std::vector<uint64_t> y(d);
        std::vector<uint64_t> mat(static_cast<size_t>(d) * d);
        ProfileWorkspace ws;
        uint64_t lo = num_samples * wi / w, hi = num_samples * (wi + 1) / w;
        for (uint64_t s = lo; s < hi; ++s) {
            for (int h = 0; h < d; ++h) y[h] = coords[s * d + h];
            R.evaluate_mod(y.data(), ring, mat.data());
            DivisorProfile prof = antisym_profile(mat.data(), d, ring, ws);
            ++tallies[wi][encode_profile(prof)];
        }
    };
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < w; ++wi) threads.emplace_back(work, wi);
    for (auto& t : threads) t.join();

    ProfileCensus census;
    census.lattice_name = L.name;
    census.p = p;
    census.exact = false;
    census.samples = num_samples;
    census.seed = seed;
    auto& lvl = census.levels[n];
    for (uint32_t key = 0; key < (1u << 16); ++key) {
        uint64_t total = 0;
        for (auto& t : tallies) total += t[key];
        if (total) lvl[decode_profile(key, d / 2, n)] = total;
    }
    census.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return census;
}

std::map<DivisorProfile, uint64_t> project_level(const ProfileCensus& census,
                                                 uint32_t n_from, uint32_t n_to, int d) {
    auto it = census.levels.find(n_from);
    if (it == census.levels.end()) throw std::invalid_argument("project_level: level missing");
    uint64_t fibre = 1;
    for (uint32_t i = 0; i < static_cast<uint32_t>(d) * (n_from - n_to); ++i) fibre *= census.p;
    std::map<DivisorProfile, uint64_t> grouped;
    for (auto& [prof, cnt] : it->second) {
        DivisorProfile tr = prof;
        tr.level = static_cast<uint8_t>(n_to);
        for (int i = 0; i < tr.len; ++i) tr.a[i] = std::min<uint8_t>(tr.a[i], n_to);
        grouped[tr] += cnt;
    }
    std::map<DivisorProfile, uint64_t> out;
    for (auto& [prof, cnt] : grouped) {
        if (cnt % fibre != 0)
            throw std::logic_error("project_level: grouped count not divisible by fibre size");
        out[prof] = cnt / fibre;
    }
    return out;
}

std::string census_to_json(const ProfileCensus& census, bool include_wall_time) {
    nlohmann::json j;
    j["lattice"] = census.lattice_name;
    j["p"] = census.p;
    j["exact"] = census.exact;
    nlohmann::json levels = nlohmann::json::array();
    for (auto& [n, profs] : census.levels) {
        nlohmann::json lvl;
        lvl["n"] = n;
        nlohmann::json plist = nlohmann::json::array();
        for (auto& [prof, cnt] : profs) {
            nlohmann::json pj;
            pj["a"] = std::vector<int>(prof.a.begin(), prof.a.begin() + prof.len);
            pj["count"] = cnt;
            if (!census.exact && census.samples > 0) {
                double f = static_cast<double>(cnt) / static_cast<double>(census.samples);
                pj["frequency"] = f;
                pj["stderr"] = std::sqrt(f * (1 - f) / static_cast<double>(census.samples));
            }
            plist.push_back(pj);
        }
        lvl["profiles"] = plist;
        levels.push_back(lvl);
    }
    j["levels"] = levels;
    nlohmann::json meta;
    if (!census.exact) {
        meta["samples"] = census.samples;
        meta["seed"] = census.seed;
    }
    if (include_wall_time) meta["wall_time"] = census.wall_time_s;
    j["meta"] = meta;
    return j.dump(2);
}

ProfileCensus census_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ProfileCensus census;
    census.lattice_name = j.at("lattice").get<std::string>();
    census.p = j.at("p").get<uint32_t>();
    census.exact = j.at("exact").get<bool>();
    for (auto& lvl : j.at("levels")) {
        uint32_t n = lvl.at("n").get<uint32_t>();
        auto& dst = census.levels[n];
        for (auto& pj : lvl.at("profiles")) {
            DivisorProfile prof;
            auto av = pj.at("a").get<std::vector<int>>();
            prof.len = static_cast<uint8_t>(av.size());
            prof.level = static_cast<uint8_t>(n);
            for (size_t i = 0; i < av.size(); ++i) prof.a[i] = static_cast<uint8_t>(av[i]);
            dst[prof] = pj.at("count").get<uint64_t>();
        }
    }
    if (j.contains("meta")) {
        auto& meta = j["meta"];
        if (meta.contains("samples")) census.samples = meta["samples"].get<uint64_t>();
        if (meta.contains("seed")) census.seed = meta["seed"].get<uint64_t>();
        if (meta.contains("wall_time")) census.wall_time_s = meta["wall_time"].get<double>();
    }
    return census;
}

} // namespace rzeta
