#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_binary() {
    const char* bin = std::getenv("DUNKL_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "DUNKL_CLI_BIN must point at the command-line binary");
    return bin;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("eval-phi reproduces cosh at k = 0") {
    RunResult r = run("eval-phi --k 0 --lambda 1 --x 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1.543080634815244") != std::string::npos);
    CHECK(r.output.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
    RunResult a = run("truncated-report --n 2");
    RunResult b = run("truncated-report --n 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());

    RunResult c = run("eval-psi --k 0.75 --lambda 1.2 --x 0.9");
    RunResult d = run("eval-psi --k 0.75 --lambda 1.2 --x 0.9");
    CHECK(c.output == d.output);
}

TEST_CASE("exit codes distinguish usage, check and numerical failures") {
    CHECK(run("truncated-report --n 3").exit_code == 0);
    CHECK(run("eval-phi --k -0.5 --lambda 1 --x 0.5").exit_code == 3);
    CHECK(run("eval-phi --k -1.5 --lambda 1 --x 0.5").exit_code == 3);
    CHECK(run("eval-phi --k notanumber").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("eval-phi --format yaml").exit_code == 2);
}

TEST_CASE("csv curve output") {
    RunResult r = run("eval-psi --k 0.5 --lambda 0.7 --x 1.5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("x,psi_re,psi_im\n", 0) == 0);
    CHECK(count_lines(r.output) == 202);
}

TEST_CASE("transform agrees with its closed form and emits quadrature metadata") {
    RunResult r = run("transform --k 1 --lambda 0.8 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);
    CHECK(r.output.find("\"rule\"") != std::string::npos);
}

TEST_CASE("verify-master at the reference point") {
    RunResult r = run("verify-master --k 1 --lambda 0.3 --mu 0.5 --alpha 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("master-nonsym") != std::string::npos);
    CHECK(r.output.find("master-sym") != std::string::npos);
    CHECK(r.output.find("\"pass\": false") == std::string::npos);
}

TEST_CASE("relative output paths land in the directory from the environment") {
    char tmpl[] = "/tmp/dunkl_cli_XXXXXX";
    char* dir = mkdtemp(tmpl);
    REQUIRE(dir != nullptr);
    std::string d(dir);
    RunResult r = run("eval-phi --k 0 --lambda 1 --x 0.5 --out report.json",
                      "DUNKL_OUT_DIR=" + d + " ");
    CHECK(r.exit_code == 0);
    std::ifstream f(d + "/report.json");
    CHECK(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    CHECK(os.str().find("1.543080634815244") != std::string::npos);
    std::remove((d + "/report.json").c_str());
    rmdir(dir);
}
