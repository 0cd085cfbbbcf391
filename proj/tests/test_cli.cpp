#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const char* cli_path() { return std::getenv("FMDS_CLI"); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& stdin_data = {}) {
    const std::string dir = "/tmp/fmds_cli_test";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) return {};
    const std::string out_path = dir + "/out.txt";
    const std::string err_path = dir + "/err.txt";
    const std::string in_path = dir + "/in.txt";
    {
        std::ofstream in(in_path);
        in << stdin_data;
    }
    const std::string cmd = std::string(cli_path()) + " " + args + " <" + in_path + " >" +
                            out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

#define REQUIRE_CLI()                                             \
    do {                                                          \
        if (cli_path() == nullptr) {                              \
            MESSAGE("FMDS_CLI not set; skipping CLI e2e tests");  \
            return;                                               \
        }                                                         \
    } while (0)

TEST_CASE("cli demo prints the walkthrough and exits cleanly") {
    REQUIRE_CLI();
    const auto res = run_cli("demo");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "a = 3 12 7 0 1 0 1 2 4 0 10 12"));
    CHECK(contains(res.out, "data = 1 2 3 4 5 6"));
    CHECK(contains(res.out, "all intermediates match"));
}

TEST_CASE("cli gen, encode, decode round trip") {
    REQUIRE_CLI();
    const std::string desc = "/tmp/fmds_cli_test/code.txt";
    auto gen = run_cli("gen --n 12 --r 6 --p 13 --out " + desc);
    REQUIRE(gen.exit_code == 0);
    CHECK(slurp(desc) == "p=13\nbeta=1\nomega=2\nn=12\nr=6\nstart=0\nstep=1\n");

    auto enc = run_cli("encode --code " + desc, "1 2 3 4 5 6\n");
    REQUIRE(enc.exit_code == 0);
    CHECK(enc.out == "8 9 2 9 3 2 10 8 4 10 5 7\n");

    auto dec = run_cli("decode --code " + desc, "8 9 2 6 3 3 10 8 4 1 5 7\n");
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.out == "1 2 3 4 5 6\n");
    CHECK(contains(dec.err, "position(s) 3 5 9"));

    // encode | decode round trip with multiple blocks and no corruption
    auto enc2 = run_cli("encode --code " + desc, "1 2 3 4 5 6\n7 8 9 10 11 12\n");
    REQUIRE(enc2.exit_code == 0);
    auto dec2 = run_cli("decode --code " + desc, enc2.out);
    REQUIRE(dec2.exit_code == 0);
    CHECK(dec2.out == "1 2 3 4 5 6\n7 8 9 10 11 12\n");
    CHECK(contains(dec2.err, "block 0: ok"));
    CHECK(contains(dec2.err, "block 1: ok"));
}

TEST_CASE("cli decode reports failure past the capability") {
    REQUIRE_CLI();
    const std::string desc = "/tmp/fmds_cli_test/code.txt";
    run_cli("gen --n 12 --r 6 --p 13 --out " + desc);
    // corrupt five positions of the known codeword
    auto dec = run_cli("decode --code " + desc, "1 1 1 1 1 2 10 8 4 10 5 7\n");
    if (dec.exit_code == 1) {
        CHECK(contains(dec.err, "FAIL"));
    } else {
        // a miscorrection within capability is also a legal outcome
        CHECK(dec.exit_code == 0);
    }
}

TEST_CASE("cli stream errors are usage errors") {
    REQUIRE_CLI();
    const std::string desc = "/tmp/fmds_cli_test/code.txt";
    run_cli("gen --n 12 --r 6 --p 13 --out " + desc);

    auto bad_symbol = run_cli("encode --code " + desc, "1 2 3\n4 5 13\n");
    CHECK(bad_symbol.exit_code == 2);
    CHECK(contains(bad_symbol.err, "line 2"));

    auto short_block = run_cli("encode --code " + desc, "1 2 3 4\n");
    CHECK(short_block.exit_code == 2);
    CHECK(contains(short_block.err, "short final block"));
}

TEST_CASE("cli gen rejects an invalid step") {
    REQUIRE_CLI();
    const auto res = run_cli("gen --n 12 --r 6 --p 13 --k 4");
    CHECK(res.exit_code == 2);
}

TEST_CASE("cli gen emits the large prime-field descriptor") {
    REQUIRE_CLI();
    const auto res = run_cli("gen --n 256 --r 224 --p 257");
    REQUIRE(res.exit_code == 0);
    CHECK(contains(res.out, "omega=3"));
    CHECK(contains(res.out, "n=256"));
}

TEST_CASE("cli field listing") {
    REQUIRE_CLI();
    const auto res = run_cli("field --n 52");
    REQUIRE(res.exit_code == 0);
    // prime field first, then the small extensions
    const auto pos53 = res.out.find("GF(53)");
    const auto pos54 = res.out.find("GF(5^4)");
    const auto pos36 = res.out.find("GF(3^6)");
    REQUIRE(pos53 != std::string::npos);
    REQUIRE(pos54 != std::string::npos);
    REQUIRE(pos36 != std::string::npos);
    CHECK(pos53 < pos54);
    CHECK(pos54 < pos36);

    const auto single = run_cli("field --n 400 --p 401");
    REQUIRE(single.exit_code == 0);
    CHECK(contains(single.out, "GF(401)"));
    CHECK(contains(single.out, "beta=1"));

    const auto bad = run_cli("field --n 12 --p 2");
    CHECK(bad.exit_code != 0);
    CHECK(contains(bad.err, "characteristic divides"));
}

TEST_CASE("cli plan") {
    REQUIRE_CLI();
    const auto res = run_cli("plan --rate 7/8 --errors 25");
    REQUIRE(res.exit_code == 0);
    CHECK(contains(res.out, "n >= 400"));
    CHECK(contains(res.out, "(400, 350, 51)"));
    CHECK(contains(res.out, "GF(401)"));

    const auto adj = run_cli("plan --rate 7/8 --errors 25 --p 2");
    REQUIRE(adj.exit_code == 0);
    CHECK(contains(adj.out, "(399, 349, 51)"));
    CHECK(contains(adj.out, "GF(2^18)"));

    const auto bad = run_cli("plan --rate 9/8 --errors 25");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli series") {
    REQUIRE_CLI();
    const auto res = run_cli("series --rate 7/9 --p 2 --count 4");
    REQUIRE(res.exit_code == 0);
    CHECK(contains(res.out, "(9, 7, 3)  GF(2^6)"));
    CHECK(contains(res.out, "(27, 21, 7)  GF(2^18)"));
    CHECK(contains(res.out, "(45, 35, 11)  GF(2^12)"));
    CHECK(contains(res.out, "(63, 49, 15)  GF(2^6)"));

    const auto primes = run_cli("series --rate 3/4 --primes 5,13,17,29,37");
    REQUIRE(primes.exit_code == 0);
    CHECK(contains(primes.out, "(4, 3, 2)  GF(5)"));
    CHECK(contains(primes.out, "(36, 27, 10)  GF(37)"));
}
