#include "cdx/hopf_zero.hpp"
#include "cdx/json_io.hpp"

#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using cdx::Element;
using cdx::ordered_json;
using cdx::Scalar;

namespace {

struct RunResult {
    int code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Runs the installed binary with stdout captured and stderr dropped; the
// timing lines on stderr are not part of the contract under test.
RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(CDX_TEST_TMPDIR) + "/cli_out.json";
    const std::string cmd =
        std::string(CDVERIFY_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), slurp(out_path)};
}

std::string write_input(const std::string& name, const ordered_json& j) {
    const std::string path = std::string(CDX_TEST_TMPDIR) + "/" + name;
    std::ofstream f(path);
    f << j.dump(2);
    return path;
}

} // namespace

TEST_CASE("verify: pass, fail modes and exit codes") {
    const RunResult ok = run_cli("verify --level 4 --seed 7 --samples 10 lemma-1.1");
    CHECK(ok.code == 0);
    const ordered_json j = ordered_json::parse(ok.out);
    CHECK(j["command"] == "verify");
    CHECK(j["passed"] == true);
    CHECK(j["reports"][0]["suite"] == "lemma-1.1");

    CHECK(run_cli("verify --level 4 no-such-suite").code == 2);
    CHECK(run_cli("verify --level 3 thm-3.4").code == 2);       // below minimum level
    CHECK(run_cli("verify --mode float lemma-1.1").code == 2);  // suites are exact-only
    CHECK(run_cli("verify --level 4 --samples 0 lemma-1.1").code == 2);
    CHECK(run_cli("--level 4").code == 2);                      // missing subcommand
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("verify: default sweep skips suites above the level") {
    const RunResult r = run_cli("verify --level 2 --seed 3 --samples 5");
    CHECK(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["reports"].size() == 3); // lemma-1.1, cor-1.2, norm-chain
    CHECK(j["skipped_below_min_level"].size() == 10);
}

TEST_CASE("verify: byte-identical output for identical configs") {
    const RunResult a = run_cli("verify --level 4 --seed 20 --samples 8 thm-4.5 dims");
    const RunResult b = run_cli("verify --level 4 --seed 20 --samples 8 thm-4.5 dims");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("search: exhaustive results and mode guards") {
    const RunResult empty = run_cli("search --level 3 --support 2");
    CHECK(empty.code == 0);
    CHECK(ordered_json::parse(empty.out)["count"] == 0);

    const RunResult found = run_cli("search --level 4 --support 2");
    CHECK(found.code == 0);
    const ordered_json j = ordered_json::parse(found.out);
    CHECK(j["count"] == 336);
    CHECK(j["certs"].size() == 336);

    CHECK(run_cli("search --level 4 --method numeric --mode exact").code == 2);
    CHECK(run_cli("search --level 4 --method exhaustive --mode float").code == 2);
    CHECK(run_cli("search --level 4 --method sideways").code == 2);
}

TEST_CASE("search: numeric runs summarize residuals") {
    const RunResult r = run_cli("search --method numeric --mode float --level 3 --seed 4 --samples 5");
    CHECK(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["run_count"] == 5);
    CHECK(j["runs"].size() == 5);
    CHECK(j["converged_runs"] == 0);
    for (const auto& run : j["runs"]) {
        const double res = run["residual"].get<double>();
        CHECK(res > 0.99);
        CHECK(res < 1.01);
    }
}

TEST_CASE("verify-cert re-verifies and discriminates failure kinds") {
    const auto certs = cdx::search_exhaustive(4, 2, 0);
    const std::string good = write_input("cert_good.json", cdx::cert_to_json(certs.front()));
    CHECK(run_cli("verify-cert " + good).code == 0);

    ordered_json tampered = cdx::cert_to_json(certs.front());
    tampered["b"][4] = "17/5";
    const std::string bad = write_input("cert_bad.json", tampered);
    CHECK(run_cli("verify-cert " + bad).code == 1); // verified failure, not usage error

    const std::string trunc = std::string(CDX_TEST_TMPDIR) + "/cert_trunc.json";
    std::ofstream(trunc) << "{\"level\": 4, \"a\": [";
    CHECK(run_cli("verify-cert " + trunc).code == 2); // parse diagnostics are usage errors
    CHECK(run_cli("verify-cert /no/such/file.json").code == 2);
}

TEST_CASE("retract round trip through files") {
    const auto certs = cdx::search_exhaustive(4, 2, 0);
    const Element a = certs.front().pair().a;
    const Element d = certs.front().pair().b;
    const Element b = Scalar(3) * a - Scalar(2) * tilde(a) + d;

    ordered_json in;
    in["level"] = 4;
    in["a"] = cdx::coeffs_to_json(a);
    in["b"] = cdx::coeffs_to_json(b);
    const std::string path = write_input("retract_in.json", in);

    const RunResult r = run_cli("retract --in " + path);
    CHECK(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["product_zero"] == true);
    CHECK(cdx::coeffs_from_json(j["result"]["a"]) == a.coeffs());
    CHECK(cdx::coeffs_from_json(j["result"]["b"]) == d.coeffs());

    // a complex-collinear input is a precondition violation
    ordered_json collinear;
    collinear["level"] = 4;
    collinear["a"] = cdx::coeffs_to_json(a);
    collinear["b"] = cdx::coeffs_to_json(Scalar(2) * a);
    CHECK(run_cli("retract --in " + write_input("retract_p.json", collinear)).code == 2);
}

TEST_CASE("table dumps") {
    const RunResult quat = run_cli("table --level 2");
    CHECK(quat.code == 0);
    const ordered_json j = ordered_json::parse(quat.out);
    CHECK(j["sign"][1][1] == -1);
    CHECK(j["index"][1][2] == 3);
    CHECK(j["index"][3][3] == 0);

    // frame table for a unit certificate alpha
    const auto certs = cdx::search_exhaustive(4, 2, 0);
    const Element alpha =
        cdx::make_scalar(1, 2) * cdx::make_double(certs.front().pair().a, certs.front().pair().b);
    const std::string path = write_input("alpha.json", cdx::element_to_json(alpha));
    const RunResult fr = run_cli("table --alpha " + path);
    CHECK(fr.code == 0);
    const ordered_json fj = ordered_json::parse(fr.out);
    CHECK(fj["report"]["passed"] == true);
    CHECK(fj["frame"].size() == 8);
}

TEST_CASE("orbit subcommand") {
    const auto certs = cdx::search_exhaustive(4, 2, 0);
    const Element alpha =
        cdx::make_scalar(1, 2) * cdx::make_double(certs.front().pair().a, certs.front().pair().b);
    const std::string path = write_input("alpha_orbit.json", cdx::element_to_json(alpha));

    const RunResult r = run_cli("orbit --alpha " + path + " --g 3/5 4/5 0 0");
    CHECK(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["norm_preserved"] == true);
    CHECK(j["same_orbit"] == true);

    CHECK(run_cli("orbit --alpha " + path + " --g 1 1 0 0").code == 2); // not on the sphere
    const RunResult seeded = run_cli("orbit --alpha " + path + " --seed 6");
    CHECK(seeded.code == 0);
}
