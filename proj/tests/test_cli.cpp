#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(GAETA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("char command") {
    RunResult r = run("char 3 2/3 17/9");
    CHECK(r.code == 0);
    CHECK(r.out.find("chi = 1") != std::string::npos);
    CHECK(r.out.find("above the Drezet-Le Potier curve") != std::string::npos);
    RunResult r2 = run("char 1 0 6");
    CHECK(r2.out.find("chi = -5") != std::string::npos);
    CHECK(run("char nonsense 0 6").code == 2);
    CHECK(run("char 3 2/3").code == 2);
}

TEST_CASE("gaeta command reproduces the worked example") {
    RunResult r = run("gaeta 3 2/3 17/9");
    CHECK(r.code == 0);
    CHECK(r.out.find("O(-2)^4 -> O(-1)^6 + O") != std::string::npos);
    CHECK(r.out.find("case: Positive") != std::string::npos);
    CHECK(r.out.find("gamma = 0") != std::string::npos);
    RunResult d = run("gaeta 3 2/3 17/9 --serre-dual");
    CHECK(d.out.find("O(-7) + O(-6)^2 -> O(-5)^6") != std::string::npos);
    CHECK(d.out.find("(0,6,0,-2,1,0)") != std::string::npos);
    CHECK(d.out.find("gamma = 22/5") != std::string::npos);
}

TEST_CASE("cones and table commands") {
    RunResult c = run("cones 12");
    CHECK(c.out.find("effective edge: 7/2 H - 1/2 B") != std::string::npos);
    CHECK(c.out.find("movable edge:   25/7 H - 1/2 B") != std::string::npos);
    CHECK(c.out.find("beta.H = 7") != std::string::npos);
    RunResult t = run("table 5");
    CHECK(t.code == 0);
    CHECK(t.out.find("g(5)''") != std::string::npos);
    CHECK(t.out.find("consistency: ok") != std::string::npos);
    CHECK(run("table 7").code == 3);
    CHECK(run("cones 1").code == 3);
}

TEST_CASE("verify commands and exit codes") {
    CHECK(run("verify interp-tan --s 2 --k 1").code == 0);
    CHECK(run("verify qk --s 2 --k 1 --trials 2").code == 0);
    RunResult b = run("verify betti --n 6 --stratum general --trials 2 --json");
    CHECK(b.code == 0);
    CHECK(b.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
    std::string a = run("verify betti --n 5 --stratum L_4 --trials 3 --seed 9 --json").out;
    std::string b = run("verify betti --n 5 --stratum L_4 --trials 3 --seed 9 --json").out;
    CHECK(a == b);
    CHECK(!a.empty());
    std::string g1 = run("gaeta 1 0 12 --json").out;
    std::string g2 = run("gaeta 1 0 12 --json").out;
    CHECK(g1 == g2);
}
