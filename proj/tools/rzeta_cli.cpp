// Command-line driver: exact censuses, closed-form verification, orbit
// tables, finite-group zeta functions, Euler products and the p-adic
// integral link, with machine-readable output.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rzeta/dirichlet.hpp"
#include "rzeta/finitezeta.hpp"
#include "rzeta/orbitclass.hpp"
#include "rzeta/padicint.hpp"
#include "rzeta/poincare.hpp"
#include "rzeta/ratfun.hpp"

using namespace rzeta;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

struct Manifest {
    std::string command;
    json config = json::object();
    json input_hashes = json::object();
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    bool stable = false;

    json finish() const {
        json m;
        m["command"] = command;
        m["config"] = config;
        m["version"] = kVersion;
        m["input_hashes"] = input_hashes;
        if (!stable)
            m["wall_time"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return m;
    }
};

void emit(const json& payload, const std::string& out_path) {
    std::string text = payload.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        os << text;
    }
}

LieLattice make_algebra(const std::string& name, uint32_t p) {
    if (name == "sl3") return make_sl3();
    if (name == "su3") return make_su3(p);
    throw CLI::ValidationError("--algebra must be sl3 or su3");
}

uint64_t default_budget() {
    if (const char* env = std::getenv("RZETA_BUDGET")) return std::strtoull(env, nullptr, 10);
    return 1ull << 32;
}

ProfileCensus load_or_enumerate(const std::string& census_path, const std::string& algebra,
                                uint32_t p, uint32_t levels, unsigned workers,
                                Manifest& manifest) {
    if (!census_path.empty()) {
        std::ifstream is(census_path);
        if (!is) throw std::runtime_error("cannot open census file: " + census_path);
        std::stringstream buf;
        buf << is.rdbuf();
        manifest.input_hashes[census_path] = hex64(fnv1a(buf.str()));
        ProfileCensus census = census_from_json(buf.str());
        if (census.lattice_name != algebra || census.p != p)
            throw std::runtime_error("census file does not match the requested algebra/p");
        if (census.n_max() < levels)
            throw std::runtime_error("census file has fewer levels than required");
        return census;
    }
    LieLattice L = make_algebra(algebra, p);
    return enumerate_counts(L, p, levels, workers, default_budget());
}

json census_payload(const ProfileCensus& census, const Manifest& manifest) {
    json j = json::parse(census_to_json(census, !manifest.stable));
    j["manifest"] = manifest.finish();
    return j;
}

int cmd_enumerate(const std::string& algebra, uint32_t p, uint32_t levels, unsigned workers,
                  const std::string& out, bool allow_char3, bool montecarlo,
                  uint64_t samples, uint64_t seed, Manifest& manifest) {
    if (p == 3 && !allow_char3) {
        std::cerr << "error: p = 3 unsupported (pass --allow-char3 for exploratory censuses)\n";
        return kExitUsage;
    }
    try {
        LieLattice L = make_algebra(algebra, p);
        ProfileCensus census =
            montecarlo ? montecarlo_profiles(L, p, levels, samples, seed, workers)
                       : enumerate_counts(L, p, levels, workers, default_budget());
        emit(census_payload(census, manifest), out);
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (override with RZETA_BUDGET)\n";
        return kExitUsage;
    }
}

int cmd_verify(const std::string& algebra, uint32_t p, uint32_t m, uint32_t kmax,
               const std::string& census_path, unsigned workers, const std::string& out,
               Manifest& manifest) {
    if (p == 3) {
        std::cerr << "error: p = 3 unsupported for closed-form verification\n";
        return kExitUsage;
    }
    if (!permissible(1, p, m)) {
        std::cerr << "error: m = " << m << " is not permissible for p = " << p
                  << " (sufficient criterion: m > 1/(p-1), and m >= 2 when p = 2)\n";
        return kExitUsage;
    }
    uint32_t levels = kmax >= 2 ? kmax / 2 : 1; // completeness bound 2*n_max + 1 >= k_max
    ProfileCensus census = load_or_enumerate(census_path, algebra, p, levels, workers, manifest);

    auto r = zeta_coeffs(census, m, kmax);
    A2Variant v = algebra == "sl3" ? A2Variant::sl3 : A2Variant::su3;
    auto series = congruence_zeta(v, m).series_in_t(Rational(p), static_cast<int>(kmax));
    json results = json::array();
    bool all_pass = true;
    for (uint32_t k = 0; k <= kmax; ++k) {
        bool ok = Rational(r[k]) == series[k];
        all_pass = all_pass && ok;
        json row;
        row["k"] = k;
        row["census"] = r[k].str();
        row["closed_form"] = boost::multiprecision::numerator(series[k]).str();
        row["pass"] = ok;
        results.push_back(row);
        std::cout << (ok ? "PASS" : "FAIL") << " k=" << k << " r_k=" << r[k].str() << "\n";
    }
    json j;
    j["algebra"] = algebra;
    j["p"] = p;
    j["m"] = m;
    j["results"] = results;
    j["all_pass"] = all_pass;
    j["manifest"] = manifest.finish();
    if (!out.empty()) emit(j, out);
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_orbits(const std::string& algebra, uint32_t q, const std::string& emit_format,
               unsigned workers, const std::string& out, bool census_only,
               Manifest& manifest) {
    bool ok = true;
    TypeCensus census = algebra == "sl3" ? census_sl3(q, workers) : census_su3(q, workers);
    json rows = json::array();
    for (OrbitType t : all_orbit_types()) {
        TableRow row =
            algebra == "sl3" ? adjoint_table_row_sl3(t, q) : adjoint_table_row_su3(t, q);
        BigInt cen_table =
            algebra == "sl3" ? centralizer_table_sl3(t, q) : centralizer_table_su3(t, q);
        bool census_ok = BigInt(census.total[static_cast<int>(t)]) == row.total();
        ok = ok && census_ok;
        json r;
        r["type"] = orbit_type_name(t);
        r["num_orbits"] = row.num_orbits.str();
        r["orbit_size"] = row.orbit_size.str();
        r["total"] = row.total().str();
        r["census_total"] = census.total[static_cast<int>(t)];
        r["census_matches"] = census_ok;
        r["centralizer_order"] = cen_table.str();
        if (!census_only && row.num_orbits != 0) {
            BigInt cen_run;
            if (algebra == "sl3") {
                FqField F(q, 1);
                cen_run = t == OrbitType::T0 ? sl3_order_by_enumeration(F, workers)
                                             : centralizer_order_sl3(F, sl3_representative(F, t),
                                                                     workers);
            } else {
                FqField F2(q, 2);
                cen_run = t == OrbitType::T0
                              ? su3_order_by_enumeration(F2, workers)
                              : centralizer_order_su3(F2, su3_representative(F2, t), workers);
            }
            bool cen_ok = cen_run == cen_table;
            ok = ok && cen_ok;
            r["centralizer_enumerated"] = cen_run.str();
            r["centralizer_matches"] = cen_ok;
        }
        rows.push_back(r);
    }
    if (emit_format == "csv") {
        std::ostringstream os;
        os << "# manifest: " << manifest.finish().dump() << "\n";
        os << tables_csv(algebra, q);
        if (out.empty()) std::cout << os.str();
        else std::ofstream(out) << os.str();
    } else {
        json j;
        j["algebra"] = algebra;
        j["q"] = q;
        j["rows"] = rows;
        j["all_pass"] = ok;
        j["manifest"] = manifest.finish();
        emit(j, out);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_finite_zeta(const std::string& group, uint32_t q, bool bruteforce,
                    const std::string& out, Manifest& manifest) {
    FiniteGroupFamily fam = family_from_name(group);
    json j = json::parse(finite_zeta_json(fam, q, bruteforce));
    DegreeMultiset z = zeta_finite_group(fam, q);
    bool ok = z.sum_m_d2() == group_order(fam, q);
    if (bruteforce) ok = ok && BigInt(class_number_bruteforce(fam, q)) == z.num_characters();
    j["all_pass"] = ok;
    j["manifest"] = manifest.finish();
    emit(j, out);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_funeq(const std::string& algebra, uint32_t m, const std::string& out,
              Manifest& manifest) {
    A2Variant v = algebra == "sl3" ? A2Variant::sl3 : A2Variant::su3;
    bool ok = funeq_check(v, m);
    std::cout << "q->q^-1 identity: " << (ok ? "PASS" : "FAIL") << ", factor q^"
              << 8 * (1 - 2 * static_cast<int>(m)) << "\n";
    json j;
    j["algebra"] = algebra;
    j["m"] = m;
    j["pass"] = ok;
    j["closed_form"] = congruence_zeta(v, m).to_exponent_string();
    j["poles"] = json::array();
    for (auto& pr : pole_real_parts(congruence_zeta(v, m))) {
        std::ostringstream os;
        os << pr;
        j["poles"].push_back(os.str());
    }
    j["manifest"] = manifest.finish();
    if (!out.empty()) emit(j, out);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_link(const std::string& algebra, uint32_t p, uint32_t nmax, int64_t s,
             const std::string& census_path, unsigned workers, const std::string& out,
             Manifest& manifest) {
    if (p == 3) {
        std::cerr << "error: p = 3 unsupported\n";
        return kExitUsage;
    }
    ProfileCensus census = load_or_enumerate(census_path, algebra, p, nmax, workers, manifest);
    bool equal = link_check(census, s, nmax);
    Rational lhs = poincare_truncated_minus_one(census, s, nmax);
    Rational rhs = Z_truncated(census, Rational(-s, 2), 3 * s - 9, nmax, 3) /
                   (1 - Rational(1) / Rational(p));
    json j;
    j["algebra"] = algebra;
    j["p"] = p;
    j["n_max"] = nmax;
    j["s"] = s;
    std::ostringstream ls, rs;
    ls << lhs;
    rs << rhs;
    j["lhs"] = ls.str();
    j["rhs"] = rs.str();
    j["equal"] = equal;
    j["manifest"] = manifest.finish();
    emit(j, out);
    return equal ? kExitOk : kExitCheckFailed;
}

int cmd_euler(const std::string& family, uint32_t prime_bound, const std::string& cap_str,
              const std::vector<double>& s_grid, const std::string& out, Manifest& manifest) {
    BigInt cap(cap_str);
    std::function<DegreeMultiset(uint32_t)> factory;
    if (family == "sl3") factory = [](uint32_t p) { return zeta_sl3_fq(p); };
    else if (family == "su3") factory = [](uint32_t p) { return zeta_su3_fq(p); };
    else {
        std::cerr << "error: --family must be sl3 or su3\n";
        return kExitUsage;
    }
    AbscissaReport rep = euler_product_abscissa(factory, prime_bound, cap);
    json j;
    j["family"] = family;
    j["primes_up_to"] = prime_bound;
    j["cap"] = cap_str;
    j["grid"] = json::array();
    for (auto& [N, slope] : rep.grid) j["grid"].push_back({{"N", N.str()}, {"slope", slope}});
    j["largest_slope"] = rep.largest_slope;
    j["extrapolated"] = rep.extrapolated;
    j["support_size"] = rep.support_size;
    j["skipped_primes"] = rep.skipped_primes;
    if (!s_grid.empty()) {
        // re-run to access the product is wasteful; evaluate via a fresh build
        j["s_grid"] = json::array();
        DirichletSeries series = DirichletSeries::one(cap);
        for (uint32_t p : primes_up_to(prime_bound)) {
            try {
                series = product(series, DirichletSeries::from_multiset(factory(p), cap), cap);
            } catch (const std::exception&) {
            }
        }
        for (double s : s_grid) {
            double val = 0;
            for (auto& [n, c] : series.coeffs())
                val += c.convert_to<double>() * std::pow(n.convert_to<double>(), -s);
            j["s_grid"].push_back({{"s", s}, {"partial_sum", val}});
        }
    }
    j["manifest"] = manifest.finish();
    emit(j, out);
    return kExitOk;
}

int cmd_psi(const std::string& variant, const std::string& tag, double s, uint32_t prime_bound,
            const std::string& out, Manifest& manifest) {
    PsiVariant v = variant == "inner" ? PsiVariant::inner : PsiVariant::outer;
    PsiTag t = psi_tag_from_name(tag);
    PsiSumReport rep = psi_sum_over_primes(t, v, s, prime_bound);
    json j;
    j["variant"] = variant;
    j["tag"] = tag;
    j["s"] = s;
    j["primes_up_to"] = prime_bound;
    std::ostringstream th;
    th << psi_threshold(t);
    j["threshold"] = th.str();
    j["partial_sum"] = std::isinf(rep.partial_sum) ? json("inf") : json(rep.partial_sum);
    j["last_decade_increment"] = std::isinf(rep.last_decade_increment)
                                     ? json("inf")
                                     : json(rep.last_decade_increment);
    j["expected_divergent"] = rep.expected_divergent;
    j["divergent_terms"] = rep.divergent_terms;
    j["manifest"] = manifest.finish();
    emit(j, out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"representation zeta toolkit for sl3/su3 congruence lattices"};
    app.require_subcommand(1);

    Manifest manifest;
    std::string algebra = "sl3", census_path, out, emit_format = "json";
    uint32_t p = 2, levels = 1, m = 2, kmax = 7, q = 5, prime_bound = 10000, nmax = 1;
    int64_t s_int = 4;
    double s_real = 1.0;
    unsigned workers = 0;
    uint64_t samples = 1000000, seed = 1;
    bool allow_char3 = false, montecarlo = false, census_only = false, bruteforce = false;
    std::string cap_str = "100000000";
    std::string group = "sl3", family = "sl3", variant = "inner", tag = "4a";
    std::vector<double> s_grid;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--parallel", workers, "worker threads (0 = hardware)");
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_flag("--stable-output", manifest.stable,
                      "omit wall-time for byte-identical reruns");
    };

    auto* enumerate = app.add_subcommand("enumerate", "exact or Monte Carlo profile census");
    enumerate->add_option("--algebra", algebra)->required();
    enumerate->add_option("--p", p)->required();
    enumerate->add_option("--levels", levels)->required();
    enumerate->add_flag("--allow-char3", allow_char3, "allow exploratory p = 3 censuses");
    enumerate->add_flag("--montecarlo", montecarlo);
    enumerate->add_option("--samples", samples);
    enumerate->add_option("--seed", seed);
    add_common(enumerate);

    auto* verify = app.add_subcommand("verify", "census vs closed-form coefficients");
    verify->add_option("--algebra", algebra)->required();
    verify->add_option("--p", p)->required();
    verify->add_option("--m", m)->required();
    verify->add_option("--kmax", kmax)->required();
    verify->add_option("--census", census_path);
    add_common(verify);

    auto* orbits = app.add_subcommand("orbits", "adjoint orbit tables");
    orbits->add_option("--algebra", algebra)->required();
    orbits->add_option("--q", q)->required();
    orbits->add_option("--emit", emit_format)->check(CLI::IsMember({"json", "csv"}));
    orbits->add_flag("--census-only", census_only);
    add_common(orbits);

    auto* finite = app.add_subcommand("finite-zeta", "finite group zeta function");
    finite->add_option("--group", group)->required();
    finite->add_option("--q", q)->required();
    finite->add_flag("--bruteforce", bruteforce, "cross-check the class number");
    add_common(finite);

    uint32_t funeq_m = 0;
    auto* funeq = app.add_subcommand("funeq", "q -> 1/q functional equation");
    funeq->add_option("--algebra", algebra)->required();
    funeq->add_option("--m", funeq_m);
    add_common(funeq);

    auto* link = app.add_subcommand("link", "Poincare series vs integral");
    link->add_option("--algebra", algebra)->required();
    link->add_option("--p", p)->required();
    link->add_option("--nmax", nmax)->required();
    link->add_option("--s", s_int)->required();
    link->add_option("--census", census_path);
    add_common(link);

    auto* euler = app.add_subcommand("euler", "Euler product abscissa estimate");
    euler->add_option("--family", family)->required();
    euler->add_option("--primes-up-to", prime_bound)->required();
    euler->add_option("--cap", cap_str);
    euler->add_option("--s-grid", s_grid);
    add_common(euler);

    auto* psi = app.add_subcommand("psi", "approximant prime sums");
    psi->add_option("--variant", variant)->check(CLI::IsMember({"inner", "outer"}));
    psi->add_option("--tag", tag)->required();
    psi->add_option("--s", s_real)->required();
    psi->add_option("--primes-up-to", prime_bound);
    add_common(psi);

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    manifest.command = sub->get_name();
    for (const auto* opt : sub->get_options()) {
        if (opt->count())
            manifest.config[opt->get_name()] = opt->results().size() == 1
                                                   ? json(opt->results().front())
                                                   : json(opt->results());
    }

    try {
        if (sub == enumerate)
            return cmd_enumerate(algebra, p, levels, workers, out, allow_char3, montecarlo,
                                 samples, seed, manifest);
        if (sub == verify)
            return cmd_verify(algebra, p, m, kmax, census_path, workers, out, manifest);
        if (sub == orbits)
            return cmd_orbits(algebra, q, emit_format, workers, out, census_only, manifest);
        if (sub == finite) return cmd_finite_zeta(group, q, bruteforce, out, manifest);
        if (sub == funeq) return cmd_funeq(algebra, funeq_m, out, manifest);
        if (sub == link)
            return cmd_link(algebra, p, nmax, s_int, census_path, workers, out, manifest);
        if (sub == euler)
            return cmd_euler(family, prime_bound, cap_str, s_grid, out, manifest);
        if (sub == psi) return cmd_psi(variant, tag, s_real, prime_bound, out, manifest);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
