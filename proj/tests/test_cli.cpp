// end-to-end checks of the command-line surface: exit codes, JSON shape,
// determinism of --stable-output reruns, and the census file round trip
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RZETA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("enumerate smoke and determinism") {
    auto a = run("enumerate --algebra sl3 --p 2 --levels 2 --stable-output");
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("\"lattice\": \"sl3\"") != std::string::npos);
    auto b = run("enumerate --algebra sl3 --p 2 --levels 2 --stable-output");
    CHECK(a.output == b.output);

    auto mc1 = run("enumerate --algebra sl3 --p 5 --levels 2 --montecarlo --samples 20000 "
                   "--seed 11 --stable-output");
    auto mc1_again = run("enumerate --algebra sl3 --p 5 --levels 2 --montecarlo "
                         "--samples 20000 --seed 11 --stable-output");
    auto mc2 = run("enumerate --algebra sl3 --p 5 --levels 2 --montecarlo --samples 20000 "
                   "--seed 11 --stable-output --parallel 2");
    CHECK(mc1.exit_code == 0);
    CHECK(mc1.output == mc1_again.output); // byte-identical rerun
    // the tally itself does not depend on the worker count (manifests differ)
    auto census_part = [](const std::string& s) { return s.substr(0, s.find("\"manifest\"")); };
    CHECK(census_part(mc1.output) == census_part(mc2.output));
}

TEST_CASE("char-3 policy") {
    auto refused = run("enumerate --algebra sl3 --p 3 --levels 1");
    CHECK(refused.exit_code == 2);
    auto allowed = run("enumerate --algebra sl3 --p 3 --levels 1 --allow-char3");
    CHECK(allowed.exit_code == 0);
    auto verify3 = run("verify --algebra sl3 --p 3 --m 1 --kmax 2");
    CHECK(verify3.exit_code == 2);
}

TEST_CASE("verify against the closed form, including the census file path") {
    auto direct = run("verify --algebra su3 --p 5 --m 1 --kmax 2");
    CHECK(direct.exit_code == 0);
    CHECK(direct.output.find("PASS k=2") != std::string::npos);

    auto bad_m = run("verify --algebra sl3 --p 2 --m 1 --kmax 3");
    CHECK(bad_m.exit_code == 2); // m = 1 not permissible at p = 2

    std::string census_path = std::string(RZETA_TMP_DIR) + "/census_sl3_p2.json";
    auto enumed = run("enumerate --algebra sl3 --p 2 --levels 2 --out " + census_path);
    CHECK(enumed.exit_code == 0);
    auto verified = run("verify --algebra sl3 --p 2 --m 2 --kmax 5 --census " + census_path);
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("FAIL") == std::string::npos);

    // tamper with the census: verification must fail with exit code 1
    {
        std::ifstream is(census_path);
        std::stringstream buf;
        buf << is.rdbuf();
        std::string text = buf.str();
        auto pos = text.find("\"count\": ");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 9, "\"count\": 1");
        std::ofstream(census_path) << text;
    }
    auto tampered = run("verify --algebra sl3 --p 2 --m 2 --kmax 5 --census " + census_path);
    CHECK(tampered.exit_code == 1);
}

TEST_CASE("funeq, link, orbits, finite-zeta, psi, euler smoke") {
    auto fe = run("funeq --algebra sl3");
    CHECK(fe.exit_code == 0);
    CHECK(fe.output.find("PASS") != std::string::npos);

    auto lk = run("link --algebra sl3 --p 2 --nmax 2 --s 4");
    CHECK(lk.exit_code == 0);
    CHECK(lk.output.find("\"equal\": true") != std::string::npos);

    auto orb = run("orbits --algebra sl3 --q 2 --emit csv --census-only");
    CHECK(orb.exit_code == 0);
    CHECK(orb.output.find("type,class,num_orbits") != std::string::npos);

    auto fz = run("finite-zeta --group heisenberg --q 3 --bruteforce");
    CHECK(fz.exit_code == 0);
    CHECK(fz.output.find("\"classes_bruteforce\": 11") != std::string::npos);

    auto ps = run("psi --variant outer --tag 5 --s 1.0 --primes-up-to 1000");
    CHECK(ps.exit_code == 0);
    CHECK(ps.output.find("\"threshold\": \"2/3\"") != std::string::npos);

    auto eu = run("euler --family sl3 --primes-up-to 100 --cap 1000000");
    CHECK(eu.exit_code == 0);
    CHECK(eu.output.find("\"extrapolated\"") != std::string::npos);
}
