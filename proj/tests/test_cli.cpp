#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using namespace spingate;
using cli::parse_input_spec;
using cli::run_cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return std::string(SPINGATE_SOURCE_DIR) + "/" + name;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("parse_input_spec") {
    SUBCASE("uniform") {
        const SpinState s = parse_input_spec("uniform", 2);
        for (const Complex& a : s.amps) CHECK(std::abs(a - Complex(0.5)) < 1e-15);
    }
    SUBCASE("bitstring") {
        const SpinState s = parse_input_spec("01", 2);
        CHECK(s.amps[0b01] == Complex(1.0));
        const SpinState f = parse_input_spec("100", 3);
        CHECK(f.amps[0b100] == Complex(1.0));
    }
    SUBCASE("amplitude list is normalized with a warning") {
        std::ostringstream warn;
        const SpinState s = parse_input_spec("2,0,0,0", 2, &warn);
        CHECK(std::abs(s.amps[0] - Complex(1.0)) < 1e-15);
        CHECK(warn.str().find("warning") != std::string::npos);
        std::ostringstream quiet;
        parse_input_spec("0.5,0.5,0.5,0.5", 2, &quiet);
        CHECK(quiet.str().empty());
    }
    SUBCASE("complex entries") {
        const SpinState s = parse_input_spec("(0,1),0", 1);
        CHECK(std::abs(s.amps[0] - Complex(0.0, 1.0)) < 1e-15);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_input_spec("1,0,0", 2), WrongLength);
        CHECK_THROWS_AS(parse_input_spec("012", 3), BadInputSpec);
        CHECK_THROWS_AS(parse_input_spec("01", 3), WrongLength);
        CHECK_THROWS_AS(parse_input_spec("x,y,z,w", 2), BadInputSpec);
        CHECK_THROWS_AS(parse_input_spec("", 1), BadInputSpec);
    }
}

TEST_CASE("verify subcommand") {
    SUBCASE("ideal pair passes with exit 0") {
        const RunResult r = run({"verify", "--gate", "cnot", "--ideal"});
        CHECK(r.code == 0);
        CHECK(r.out.find("result: PASS") != std::string::npos);
    }
    SUBCASE("lossy pair fails with exit 1") {
        const RunResult r = run({"verify", "--gate", "cnot", "--r0", "0.9", "--rh", "0.9"});
        CHECK(r.code == 1);
        CHECK(r.out.find("result: FAIL") != std::string::npos);
    }
    SUBCASE("unknown gate is an argument error") {
        const RunResult r = run({"verify", "--gate", "nope", "--ideal"});
        CHECK(r.code == 2);
    }
    SUBCASE("missing cavity parameters is an argument error") {
        const RunResult r = run({"verify", "--gate", "cnot"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("simulate subcommand") {
    SUBCASE("fredkin with an inactive swap shows the input state everywhere") {
        const RunResult r = run({"simulate", "--gate", "fredkin", "--ideal", "--input", "100"});
        CHECK(r.code == 0);
        CHECK(count_lines(r.out) > 4);
        CHECK(r.out.find("|100>") != std::string::npos);
        CHECK(r.out.find("efficiency 1") != std::string::npos);
        CHECK(r.out.find("F_sim 1") != std::string::npos);
    }
    SUBCASE("trace prints named checkpoints") {
        const RunResult r =
            run({"simulate", "--gate", "toffoli", "--ideal", "--trace", "--input", "uniform"});
        CHECK(r.code == 0);
        for (const char* cp : {"checkpoint Xi1", "checkpoint Xi2", "checkpoint Xi3",
                               "checkpoint Xi4"}) {
            CHECK(r.out.find(cp) != std::string::npos);
        }
    }
    SUBCASE("runs a netlist file") {
        const RunResult r = run({"simulate", "--netlist", fixture("netlists/cnot.net"),
                                 "--ideal", "--input", "10"});
        CHECK(r.code == 0);
        CHECK(r.out.find("|11>") != std::string::npos);
    }
    SUBCASE("dephasing scales the reported fidelity") {
        const RunResult r = run({"simulate", "--gate", "cnot", "--ideal", "--tau", "1",
                                 "--t2", "1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("F_dephased 0.367879441") != std::string::npos);
    }
    SUBCASE("needs a gate or a netlist") {
        CHECK(run({"simulate", "--ideal"}).code == 2);
    }
}

TEST_CASE("sweep subcommand") {
    SUBCASE("cardinality of the full default grid requested explicitly") {
        const std::string path = std::string(SPINGATE_BINARY_DIR) + "/sweep_cli_test.csv";
        const RunResult r = run({"sweep", "--gates", "cnot,toffoli,fredkin", "--g", "0:2.4:5",
                                 "--ks", "0:1.3:3", "--gamma", "0.1", "--out", path});
        CHECK(r.code == 0);
        std::ifstream in(path);
        REQUIRE(in.good());
        std::ostringstream ss;
        ss << in.rdbuf();
        CHECK(count_lines(ss.str()) == 1 + 3 * 5 * 3);
        CHECK(r.err.find("note:") != std::string::npos);
        std::remove(path.c_str());
    }
    SUBCASE("stdout output is byte-identical across runs") {
        const RunResult a = run({"sweep", "--gates", "cnot", "--g", "0:1:3", "--ks", "0.2"});
        const RunResult b = run({"sweep", "--gates", "cnot", "--g", "0:1:3", "--ks", "0.2"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.rfind("gate,g_over_kappa_plus_kappas", 0) == 0);
    }
    SUBCASE("bad range is an argument error") {
        CHECK(run({"sweep", "--g", "0:bad:3"}).code == 2);
    }
    SUBCASE("explicit input with mixed gate arities is rejected") {
        CHECK(run({"sweep", "--gates", "cnot,toffoli", "--input", "00"}).code == 2);
    }
}

TEST_CASE("parse subcommand") {
    SUBCASE("the shipped fixtures validate") {
        for (const char* name : {"netlists/cnot.net", "netlists/toffoli.net",
                                 "netlists/fredkin.net"}) {
            const RunResult r = run({"parse", "--netlist", fixture(name)});
            CHECK(r.code == 0);
            CHECK(r.out.rfind("ok:", 0) == 0);
        }
    }
    SUBCASE("malformed netlists report the category and exit 1") {
        const RunResult r =
            run({"parse", "--netlist", fixture("tests/fixtures/bad_unknown_keyword.net")});
        CHECK(r.code == 1);
        CHECK(r.err.find("unknown keyword") != std::string::npos);
    }
    SUBCASE("missing file") {
        CHECK(run({"parse", "--netlist", "/nonexistent.net"}).code == 1);
    }
    SUBCASE("missing argument") {
        CHECK(run({"parse"}).code == 2);
    }
}
