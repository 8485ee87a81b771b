#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(SERRE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

fs::path fresh_dir(const std::string& tag) {
    fs::path d = fs::temp_directory_path() / ("serre_cli_" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("analytics --help") == 0);
    CHECK(run_cli("") == 2);                        // a subcommand is required
    CHECK(run_cli("frobnicate") == 2);              // unknown subcommand
    CHECK(run_cli("analytics --no-such-flag") == 2);
    CHECK(run_cli("converge --order 2") == 2);      // below the supported range
}

TEST_CASE("analytics writes amplitude and profile tables") {
    auto dir = fresh_dir("analytics");
    CHECK(run_cli("analytics --out " + dir.string()) == 0);

    std::string amp = slurp(dir / "amplitudes.csv");
    CHECK(first_line(amp) == "c,A_serre,A_cb,A_euler_series");
    // Default speeds are 1.1 and 1.2; check the 1.1 row values.
    std::istringstream rows(amp);
    std::string line;
    std::getline(rows, line);  // header
    std::getline(rows, line);
    double c, as, acb, ae;
    char comma;
    std::istringstream(line) >> c >> comma >> as >> comma >> acb >> comma >> ae;
    CHECK(c == doctest::Approx(1.1));
    CHECK(as == doctest::Approx(0.21).epsilon(1e-10));
    CHECK(std::fabs(acb - 0.2177418344889134) <= 1e-6);
    CHECK(std::fabs(ae - 0.21273693695625021) <= 1e-6);

    std::string prof = slurp(dir / "profiles.csv");
    CHECK(first_line(prof) == "c,x,zeta,u");

    // Subcritical speeds are a configuration error.
    CHECK(run_cli("analytics --speeds 0.9 --out " + dir.string()) == 2);
}

TEST_CASE("evolve writes invariants and a final state, and flags instability") {
    auto dir = fresh_dir("evolve");
    CHECK(run_cli("evolve --n 128 --tfinal 1 --out " + dir.string()) == 0);
    std::string inv = slurp(dir / "invariants.csv");
    CHECK(first_line(inv) == "t,mass,momentum,energy");
    std::string fin = slurp(dir / "final_state.csv");
    CHECK(first_line(fin) == "x,zeta,u");
    std::string rep = slurp(dir / "evolve_report.json");
    CHECK(rep.find("\"N\": 128") != std::string::npos);
    CHECK(rep.find("eta_error") != std::string::npos);

    // A Courant number far beyond the stable range blows up: exit 3.
    auto dir2 = fresh_dir("evolve_blowup");
    CHECK(run_cli("evolve --n 128 --courant 3 --tfinal 100 --out " + dir2.string()) == 3);

    // Invalid configuration: too few cells for the order.
    CHECK(run_cli("evolve --n 4 --out " + dir2.string()) == 2);
}

TEST_CASE("configuration file fills in subcommand options") {
    auto dir = fresh_dir("config");
    fs::path ini = dir / "run.ini";
    {
        std::ofstream f(ini);
        f << "[evolve]\n"
          << "n=96\n"
          << "tfinal=0.5\n";
    }
    CHECK(run_cli("--config " + ini.string() + " evolve --out " + dir.string()) == 0);
    std::string rep = slurp(dir / "evolve_report.json");
    CHECK(rep.find("\"N\": 96") != std::string::npos);
    CHECK(rep.find("\"T\": 0.5") != std::string::npos);
}

TEST_CASE("collide produces a trace and a classification") {
    auto dir = fresh_dir("collide");
    CHECK(run_cli("collide --domain 40 --spacing 0.5 --step 0.05 --tfinal 1 --t-measure 1 "
                  "--out " +
                  dir.string()) == 0);
    std::string trace = slurp(dir / "collide_trace.csv");
    CHECK(first_line(trace) == "t,x1,zeta1,x2,zeta2");
    std::string rep = slurp(dir / "collide_report.json");
    CHECK(rep.find("\"lax_case\": \"a\"") != std::string::npos);
    CHECK(fs::exists(dir / "final_state.csv"));

    CHECK(run_cli("collide --ratio 0.5 --out " + dir.string()) == 2);  // ratio must be > 1
}

TEST_CASE("resolve counts emerged waves and stores snapshots") {
    auto dir = fresh_dir("resolve");
    CHECK(run_cli("resolve --domain 30 --a 0.2 --b 0.5 --spacing 0.25 --step 0.05 --tfinal 1 "
                  "--out " +
                  dir.string()) == 0);
    std::string rep = slurp(dir / "resolve_report.json");
    CHECK(rep.find("\"n_right\"") != std::string::npos);
    CHECK(fs::exists(dir / "state_t1.csv"));

    CHECK(run_cli("resolve --a -1 --out " + dir.string()) == 2);
}

TEST_CASE("stability sweeps Courant numbers") {
    auto dir = fresh_dir("stability");
    CHECK(run_cli("stability --n 64 --tfinal 1 --courants 0.1,0.5 --out " + dir.string()) == 0);
    std::string csv = slurp(dir / "stability.csv");
    CHECK(first_line(csv) == "courant,verdict,final_l2_error");
    // Two data rows follow the header.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    std::string rep = slurp(dir / "stability_report.json");
    CHECK(rep.find("\"verdict\"") != std::string::npos);

    CHECK(run_cli("stability --courants 0 --out " + dir.string()) == 2);
}
