#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "cascade/tolerances.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

// Runs the installed binary through the shell; stderr is discarded so usage
// errors stay quiet in the test log.
CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += std::string(CASCADE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string f;
    while (std::getline(in, f, ',')) fields.push_back(f);
    return fields;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("run: depolarizing trace") {
    CliResult r = run_cli("run --code five --noise dep --fidelity 0.92 --levels 3");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(std::abs(j["F0"].get<double>() - 0.92) < 1e-12);
    CHECK(j["code"] == "five");
    CHECK(j["noise"]["kind"] == "dep");
    REQUIRE(j["levels"].size() == 4);
    CHECK(std::abs(j["levels"][3]["F"].get<double>() - 0.993991) < 1e-6);
    CHECK(!j.contains("terminal_L"));

    CliResult deep = run_cli("run --code five --noise dep --fidelity 0.92 --levels 12");
    REQUIRE(deep.status == 0);
    json jd = json::parse(deep.out);
    REQUIRE(jd.contains("terminal_L"));
    CHECK(jd["terminal_L"] == 5);
    CHECK(jd["levels"].size() == 6);
}

TEST_CASE("run: other noise kinds") {
    CliResult ad = run_cli("run --code five --noise ad --fidelity 0.92 --levels 0");
    REQUIRE(ad.status == 0);
    json ja = json::parse(ad.out);
    CHECK(ja["noise"]["kind"] == "ad");
    CHECK(std::abs(ja["noise"]["gamma"].get<double>() - 0.156666) < 1e-6);

    CliResult adg = run_cli("run --code five --noise ad --gamma 0.3 --levels 0");
    REQUIRE(adg.status == 0);
    CHECK(json::parse(adg.out)["noise"]["gamma"] == 0.3);

    CliResult pl = run_cli("run --code five --noise pauli --params 0.85 0.05 0.06 0.04 --levels 1");
    REQUIRE(pl.status == 0);
    json jp = json::parse(pl.out);
    CHECK(jp["noise"]["p"].size() == 4);
    CHECK(std::abs(jp["F0"].get<double>() - 0.85) < 1e-12);

    CliResult gn = run_cli("run --code five --noise general --params 0.3 0.4 0.5 0.6 0.7 --levels 0");
    REQUIRE(gn.status == 0);
    CHECK(json::parse(gn.out)["noise"]["kind"] == "general");

    CliResult st = run_cli("run --code steane --noise bitflip --fidelity 0.94 --levels 1");
    REQUIRE(st.status == 0);
    json js = json::parse(st.out);
    CHECK(js["code"] == "steane");
    CHECK(std::abs(js["levels"][1]["F"].get<double>() - 0.943035) < 1e-6);
}

TEST_CASE("run: writes to a file") {
    const std::string path = "/tmp/cascade_test_run_out.json";
    std::filesystem::remove(path);
    CliResult r = run_cli("run --code five --noise dep --fidelity 0.9 --levels 1 --out " + path);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json j = json::parse(in);
    CHECK(j["levels"].size() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("run: usage errors") {
    CHECK(run_cli("run --code five --noise dep").status == 2);
    CHECK(run_cli("run --code seven --noise dep --fidelity 0.92").status == 2);
    CHECK(run_cli("run --code five --noise fog --fidelity 0.92").status == 2);
    CHECK(run_cli("run --code five --noise dep --fidelity 0.92 --levels 13").status == 2);
    CHECK(run_cli("run --code five --noise pauli --params 0.9 0.05 0.05").status == 2);
    CHECK(run_cli("run --code five --noise ad").status == 2);
    // domain violations inside the engine are failures, not usage errors
    CHECK(run_cli("run --code five --noise dep --fidelity 0.1").status == 1);
}

TEST_CASE("tables 1 and 2") {
    CliResult t1 = run_cli("tables --which 1");
    REQUIRE(t1.status == 0);
    std::vector<std::string> rows = lines_of(t1.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "l,dep,ad,bitflip");
    std::vector<std::string> l3 = fields_of(rows[4]);
    REQUIRE(l3.size() == 4);
    CHECK(l3[0] == "3");
    CHECK(std::abs(num(l3[1]) - 0.993991) < 1e-6);
    CHECK(std::abs(num(l3[2]) - 0.99403) < 1e-6);
    CHECK(std::abs(num(l3[3]) - 0.993576) < 1e-6);

    CliResult t2 = run_cli("tables --which 2");
    REQUIRE(t2.status == 0);
    rows = lines_of(t2.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "l,ad,bitflip");
    std::vector<std::string> l2 = fields_of(rows[3]);
    CHECK(std::abs(num(l2[1]) - 8.77e-5) < 0.02 * 8.77e-5);
    CHECK(std::abs(num(l2[2]) - 2.04e-3) < 0.02 * 2.04e-3);
}

TEST_CASE("table 3") {
    CliResult t3 = run_cli("tables --which 3");
    REQUIRE(t3.status == 0);
    std::vector<std::string> rows = lines_of(t3.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "l,dep,ad,bitflip");
    std::vector<std::string> l7 = fields_of(rows[8]);
    REQUIRE(l7.size() == 4);
    CHECK(l7[1] == ">=1-1e-5");
    CHECK(std::abs(num(l7[2]) - 0.999935) < 1e-6);
    CHECK(std::abs(num(l7[3]) - 0.998693) < 1e-6);
    std::vector<std::string> l9 = fields_of(rows[10]);
    CHECK(l9[1] == ">=1-1e-5");
    CHECK(l9[2] == ">=1-1e-5");
    CHECK(l9[3] == ">=1-1e-5");

    CliResult j3 = run_cli("tables --which 3 --format json");
    REQUIRE(j3.status == 0);
    json arr = json::parse(j3.out);
    REQUIRE(arr.size() == 10);
    CHECK(arr[7]["dep"] == ">=1-1e-5");
    CHECK(std::abs(arr[7]["ad"].get<double>() - 0.999935) < 1e-6);

    CHECK(run_cli("tables --which 9").status == 2);
    CHECK(run_cli("tables --which 1 --format yaml").status == 2);
}

TEST_CASE("threshold") {
    CliResult r = run_cli("threshold");
    REQUIRE(r.status == 0);
    std::vector<std::string> rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].rfind("p* = ", 0) == 0);
    REQUIRE(rows[1].rfind("F0* = ", 0) == 0);
    const double p = num(rows[0].substr(5));
    const double f = num(rows[1].substr(6));
    CHECK(p > 0.18);
    CHECK(p < 0.19);
    CHECK(f > 0.857);
    CHECK(f < 0.865);
    CHECK(std::abs(f - (1.0 - 0.75 * p)) < 1e-15);
}

TEST_CASE("curves") {
    CliResult r = run_cli("curves --which ad-five --points 5");
    REQUIRE(r.status == 0);
    std::vector<std::string> rows = lines_of(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "param,closed,numeric,absdiff");
    CHECK(num(fields_of(rows[1])[0]) == 0.0);
    CHECK(num(fields_of(rows[5])[0]) == 1.0);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(num(fields_of(rows[i])[3]) < 1e-9);

    CliResult st = run_cli("curves --which ad-steane --points 3");
    REQUIRE(st.status == 0);
    rows = lines_of(st.out);
    REQUIRE(rows.size() == 4);
    for (size_t i = 1; i < rows.size(); ++i) CHECK(num(fields_of(rows[i])[3]) < 1e-9);

    CliResult jr = run_cli("curves --which eq-dep-p --points 2 --format json");
    REQUIRE(jr.status == 0);
    json arr = json::parse(jr.out);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].contains("param"));
    CHECK(arr[0].contains("closed"));
    CHECK(arr[0].contains("numeric"));
    CHECK(arr[0].contains("absdiff"));

    CHECK(run_cli("curves --which eq-dep-F --from 0.2 --points 3").status == 2);
    CHECK(run_cli("curves --which ad-five --points 0").status == 2);
    CHECK(run_cli("curves --which bogus").status == 2);
}

TEST_CASE("ensemble") {
    const std::string args = "ensemble --fidelity 0.9 --samples 16 --levels 2 --seed 7";
    CliResult one = run_cli(args + " --workers 1");
    CliResult four = run_cli(args + " --workers 4");
    REQUIRE(one.status == 0);
    REQUIRE(four.status == 0);
    CHECK(one.out == four.out);
    json j = json::parse(one.out);
    CHECK(j["M"] == 16);
    CHECK(j["seed"] == 7);
    CHECK(j["levels"] == 2);
    CHECK(j["D_max"].size() == 3);
    CHECK(j["F_min"].size() == 3);

    const std::string csv_path = "/tmp/cascade_test_samples.csv";
    std::filesystem::remove(csv_path);
    CliResult s = run_cli("ensemble --fidelity 0.9 --samples 4 --levels 1 --seed 3 --workers 2"
                          " --samples-out " + csv_path);
    REQUIRE(s.status == 0);
    std::ifstream in(csv_path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<std::string> rows = lines_of(buf.str());
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "sample,theta,phi,alpha,beta,gamma,F_0,F_1,D_0,D_1");
    CHECK(fields_of(rows[4])[0] == "3");
    std::filesystem::remove(csv_path);

    CHECK(run_cli("ensemble --fidelity 0.85 --samples 2").status == 2);
    CHECK(run_cli("ensemble --fidelity 0.86 --samples 2").status == 2);
    CHECK(run_cli("ensemble --fidelity 0.9 --samples 0").status == 2);
    CHECK(run_cli("ensemble --fidelity 0.9 --samples 2 --levels 13").status == 2);
}

TEST_CASE("tolerance overrides through the environment") {
    CliResult r = run_cli("run --code five --noise dep --fidelity 0.92 --levels 12",
                          "CASCADE_TOL=near_perfect=1e-3");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j.contains("terminal_L"));
    CHECK(j["terminal_L"] == 4);
    CHECK(j["levels"].size() == 5);

    CHECK(run_cli("threshold", "CASCADE_TOL=bogus=1").status == 2);
    CHECK(run_cli("threshold", "CASCADE_TOL=near_perfect=0").status == 2);
    CHECK(run_cli("threshold", "CASCADE_TOL=near_perfect").status == 2);
}

TEST_CASE("tolerance overrides in the library") {
    cascade::Tolerances saved = cascade::tolerances();
    cascade::apply_tolerance_overrides("equality=1e-11,bisection=1e-8");
    CHECK(cascade::tolerances().equality == 1e-11);
    CHECK(cascade::tolerances().bisection == 1e-8);
    CHECK(cascade::tolerances().hermiticity == saved.hermiticity);
    CHECK_THROWS_AS(cascade::apply_tolerance_overrides("vibes=1e-3"), std::invalid_argument);
    CHECK_THROWS_AS(cascade::apply_tolerance_overrides("equality"), std::invalid_argument);
    CHECK_THROWS_AS(cascade::apply_tolerance_overrides("equality=zero"), std::invalid_argument);
    CHECK_THROWS_AS(cascade::apply_tolerance_overrides("equality=-1e-9"), std::invalid_argument);
    cascade::tolerances() = saved;
}

TEST_CASE("help and exit codes") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("run --code five --noise dep --fidelity 0.92 --frob 3").status == 2);
    CHECK(run_cli("threshold --out /nonexistent-dir/x.txt").status == 1);
}

}  // TEST_SUITE("cli")
