#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "cuspidal/record.hpp"

using namespace cuspidal;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("structure command") {
    RunResult r = run_cli("structure 481 --l 3 --format json");
    CHECK(r.status == 0);
    const OutputRecord rec = record_from_json(r.out);
    CHECK(rec.N == 481);
    CHECK(rec.l == 3);
    REQUIRE(rec.summands.size() == 1);
    CHECK(rec.summands[0].d == 481);
    CHECK(rec.summands[0].epsilon == "18");
    CHECK(rec.summands[0].valuation == 2);
    CHECK(rec.summands[0].cyclic_order == "9");
    CHECK_FALSE(rec.oracle_checked);

    // round-trip
    CHECK(record_from_json(to_json(rec)) == rec);

    r = run_cli("structure 49 --l 5 --format json");
    CHECK(r.status == 0);
    CHECK(record_from_json(r.out).summands.empty());

    r = run_cli("structure 90 --l 7");
    CHECK(r.status != 0);  // even N

    r = run_cli("structure 91 --l 3 --verify");
    CHECK(r.status == 0);
    CHECK(r.out.find("oracle checked") != std::string::npos);
}

TEST_CASE("order command") {
    RunResult r = run_cli("order 11 1:-1");
    CHECK(r.status == 0);
    CHECK(r.out.find("order: 5") != std::string::npos);
    CHECK(r.out.find("h: 2") != std::string::npos);

    r = run_cli("order 11 0");
    CHECK(r.status == 0);
    CHECK(r.out.find("order 1") != std::string::npos);

    r = run_cli("order 245 z:49");
    CHECK(r.status == 0);
    CHECK(r.out.find("order: 48") != std::string::npos);

    r = run_cli("order 11 c:11");
    CHECK(r.status == 0);
    CHECK(r.out.find("order: 5") != std::string::npos);

    r = run_cli("order 45 1:1");  // degree nonzero
    CHECK(r.status != 0);
}

TEST_CASE("cusps and eta-div commands") {
    RunResult r = run_cli("cusps 45");
    CHECK(r.status == 0);
    CHECK(r.out.find("total cusps: 8") != std::string::npos);

    r = run_cli("eta-div 11 c:11");
    CHECK(r.status == 0);
    CHECK(r.out.find("12/5") != std::string::npos);
    CHECK(r.out.find("modular: yes") != std::string::npos);
}

TEST_CASE("verify command") {
    RunResult r = run_cli("verify 91 --l 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("EQUAL") != std::string::npos);
}

TEST_CASE("table command is deterministic") {
    RunResult a = run_cli("table 3..105 --l 5 --out /tmp/cuspidal_t1.csv");
    RunResult b = run_cli("table 3..105 --l 5 --out /tmp/cuspidal_t2.csv");
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    RunResult diff{0, ""};
    {
        FILE* p = popen("cmp -s /tmp/cuspidal_t1.csv /tmp/cuspidal_t2.csv; echo $?", "r");
        std::array<char, 64> buf{};
        std::string out;
        while (fgets(buf.data(), buf.size(), p)) out += buf.data();
        pclose(p);
        CHECK(out.find("0") == 0);
    }
    // spot checks on the table content
    RunResult head = run_cli("table 3..15 --l 5");
    CHECK(head.status == 0);
    CHECK(head.out.find("N,l,d,epsilon,valuation,order,checked,reason") == 0);
    CHECK(head.out.find("15,5,15,") != std::string::npos);
}
