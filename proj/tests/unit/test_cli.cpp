#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "intquant/cli.hpp"
#include "intquant/errors.hpp"
#include "intquant/io.hpp"

using namespace intquant;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/" + name;
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("grid parsing") {
    const auto inc = parse_grid("0.1:0.9:0.2", "--p-grid");
    REQUIRE(inc.size() == 5);
    CHECK(inc.front() == 0.1);
    CHECK(inc.back() == 0.9);  // endpoint forced exact on integral ratios
    const auto exc = parse_grid("0.1:0.9:0.25", "--p-grid");
    REQUIRE(exc.size() == 4);
    CHECK(exc.back() == doctest::Approx(0.85).epsilon(1e-15));
    const auto single = parse_grid("0.5:0.5:1", "--p-grid");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 0.5);
    CHECK_THROWS_AS((void)parse_grid("0.1:0.9", "--p-grid"), ParameterError);
    CHECK_THROWS_AS((void)parse_grid("0.1:0.9:0", "--p-grid"), ParameterError);
    CHECK_THROWS_AS((void)parse_grid("0.9:0.1:0.1", "--p-grid"), ParameterError);
    CHECK_THROWS_AS((void)parse_grid("a:b:c", "--p-grid"), ParameterError);
}

TEST_CASE("loss file reading") {
    std::istringstream ok("loss\n 1.5 \n\n2.5\n");
    const auto xs = read_losses(ok, "mem");
    REQUIRE(xs.size() == 2);
    CHECK(xs[0] == 1.5);
    std::istringstream bad("1.0\n2.0\npotato\n");
    try {
        (void)read_losses(bad, "mem");
        FAIL("expected DataError");
    } catch (const DataError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("mem:3") != std::string::npos);
        CHECK(msg.find("potato") != std::string::npos);
    }
    std::istringstream inf("1.0\ninf\n");
    CHECK_THROWS_AS((void)read_losses(inf, "mem"), DataError);
    std::istringstream empty("loss\n\n");
    CHECK_THROWS_AS((void)read_losses(empty, "mem"), DataError);
}

TEST_CASE("es subcommand on a file") {
    const std::string path = write_temp("intquant_es.txt", "loss\n1\n2\n3\n4\n");
    const CliRun r = run({"es", "--input", path, "--p", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.err == "");
    CHECK(r.out.find("\"estimate\":3.5") != std::string::npos);
    CHECK(r.out.find("\"n\":4") != std::string::npos);
    CHECK(r.out.find("\"std_error\":0.957427107756") != std::string::npos);
    CHECK(r.out.find("small sample") != std::string::npos);

    const CliRun c = run({"es", "--input", path, "--p", "0.5", "--format", "csv"});
    CHECK(c.code == 0);
    CHECK(c.out.find("estimate,std_error,ci_low,ci_high,level,n,warnings") == 0);
    CHECK(c.out.find("3.5,0.957427107756") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("es analytic variance needs a model") {
    const std::string path = write_temp("intquant_es2.txt", "1\n2\n3\n4\n");
    const CliRun bad = run({"es", "--input", path, "--p", "0.5",
                            "--variance", "analytic"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error:") == 0);
    const CliRun good = run({"es", "--input", path, "--p", "0.5",
                             "--variance", "analytic", "--f", "exp:1"});
    CHECK(good.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("rvar subcommand") {
    const CliRun r = run({"rvar", "--f", "uniform:0,1", "--p", "0.2", "--q", "0.8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"value\":0.5") != std::string::npos);
    // works on infinite-mean models
    const CliRun heavy = run({"rvar", "--f", "lomax:0.5,1", "--p", "0.25",
                              "--q", "0.75"});
    CHECK(heavy.code == 0);
}

TEST_CASE("gap subcommand emits csv rows with bound columns") {
    const CliRun r = run({"gap", "--f", "lomax:10,1", "--g", "lomax:8,1",
                          "--p", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p,value,lower,upper,applicable,status") == 0);
    CHECK(r.out.find("\n0.5,") != std::string::npos);
    CHECK(r.out.find(",ok") != std::string::npos);
    // grid form, json
    const CliRun j = run({"gap", "--f", "lomax:10,1", "--g", "lomax:8,1",
                          "--p-grid", "0.1:0.9:0.4", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"points\"") != std::string::npos);
    // infinite-mean comparison still runs (extended gap needs no moments)
    const CliRun heavy = run({"gap", "--f", "lomax:0.5,1", "--g", "lomax:0.3,1",
                              "--p", "0.5"});
    CHECK(heavy.code == 0);
}

TEST_CASE("surface subcommand value is reproducible") {
    const CliRun r = run({"surface", "--f", "lomax:10,1", "--g", "lomax:8,1",
                          "--p-grid", "0.9:0.9:1", "--z-grid", "0.5:0.5:1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p,z,value,lower,upper,applicable,status") == 0);
    CHECK(r.out.find("-0.00705100828475") != std::string::npos);
    // moment gate surfaces as exit 3
    const CliRun gate = run({"surface", "--f", "lomax:1,1", "--g", "lomax:8,1",
                             "--p-grid", "0.5:0.5:1", "--z-grid", "1:1:1"});
    CHECK(gate.code == 3);
}

TEST_CASE("distortion subcommand, model and sample sides") {
    const CliRun m = run({"distortion", "--f", "lomax:3,1",
                          "--measure", "atom:0.9,1"});
    CHECK(m.code == 0);
    CHECK(m.out.find("\"value\"") != std::string::npos);
    CHECK(m.out.find("\"total_mass\":1") != std::string::npos);
    const std::string path =
        write_temp("intquant_dist.txt", "1\n2\n3\n4\n5\n6\n7\n8\n");
    const CliRun s = run({"distortion", "--input", path,
                          "--measure", "atom:0.5,1", "--level", "0.9"});
    CHECK(s.code == 0);
    CHECK(s.out.find("\"estimate\":6.5") != std::string::npos);
    std::remove(path.c_str());
    const CliRun both = run({"distortion", "--f", "exp:1", "--input", path,
                             "--measure", "atom:0.5,1"});
    CHECK(both.code == 1);
}

TEST_CASE("monte carlo subcommands are seeded and deterministic") {
    const std::vector<std::string> args = {"mc-coverage", "--f", "lomax:3,1",
                                           "--n", "80", "--reps", "50",
                                           "--p", "0.9", "--seed", "11"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"coverage\":") != std::string::npos);
    const CliRun c = run({"mc-coverage", "--f", "lomax:3,1", "--n", "80",
                          "--reps", "50", "--p", "0.9", "--seed", "11",
                          "--format", "csv"});
    CHECK(c.out.find("n,reps,p,level,seed,variance,coverage,mean_width") == 0);
    const CliRun v = run({"mc-coverage", "--f", "lomax:3,1", "--n", "80",
                          "--reps", "10", "--p", "0.9", "--seed", "11",
                          "--format", "csv", "--verbose"});
    CHECK(v.out.find("rep,covered,width") != std::string::npos);

    const CliRun d = run({"mc-remainder", "--f", "lomax:10,1",
                          "--n-list", "100,400", "--reps", "40",
                          "--p", "0.9", "--seed", "2", "--format", "json"});
    CHECK(d.code == 0);
    CHECK(d.out.find("\"medians_decreasing\":true") != std::string::npos);
}

TEST_CASE("output redirection writes the same bytes to a file") {
    const std::string out_path = "/tmp/intquant_out.json";
    const CliRun direct = run({"rvar", "--f", "exp:1", "--p", "0.1", "--q", "0.9"});
    const CliRun redirected = run({"rvar", "--f", "exp:1", "--p", "0.1",
                                   "--q", "0.9", "--out", out_path});
    CHECK(redirected.code == 0);
    CHECK(redirected.out == "");
    std::ifstream f(out_path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == direct.out);
    std::remove(out_path.c_str());
}

TEST_CASE("exit codes and help") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"es", "--help"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"es", "--p", "0.5"}).code == 1);                 // missing --input
    CHECK(run({"es", "--input", "/nonexistent", "--p", "0.5"}).code == 2);
    const std::string path = write_temp("intquant_bad.txt", "1\nnope\n");
    CHECK(run({"es", "--input", path, "--p", "0.5"}).code == 2);
    std::remove(path.c_str());
    CHECK(run({"gap", "--f", "weird:1", "--g", "exp:1", "--p", "0.5"}).code == 1);
    CHECK(run({"rvar", "--f", "exp:1", "--p", "0.9", "--q", "0.1"}).code == 3);
    const CliRun gate = run({"es", "--input", "/nonexistent", "--p", "1.5"});
    CHECK(gate.code == 1);  // flag validation precedes file access
}

TEST_CASE("numbers render consistently at twelve significant digits") {
    const CliRun r = run({"rvar", "--f", "uniform:0,3", "--p", "0.1",
                          "--q", "0.2"});
    // (0.3 + 0.6)/2 * ... uniform quantile mean over (0.1,0.2] is 0.45
    CHECK(r.out.find("0.45") != std::string::npos);
    CHECK(r.out.find("0.450000000001") == std::string::npos);
}

}  // TEST_SUITE
