#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("pgrank_cli_test." + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const fs::path errfile = scratch_dir() / "stderr.txt";
    const std::string cmd =
        std::string(PGRANK_CLI_PATH) + " " + args + " 2>" + errfile.string();
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int st = ::pclose(pipe);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.err = slurp(errfile);
    return r;
}

}  // namespace

TEST_CASE("rank of one block") {
    const RunResult r = run("rank -n 2 -q 3 --form conic --block A11");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "8\n");
    CHECK(r.err.empty());
}

TEST_CASE("rank accepts block names in any case") {
    CHECK(run("rank -n 2 -q 3 --form conic --block a11").out == "8\n");
    CHECK(run("rank -n 2 -q 3 --form conic --block b33").out == "4\n");
}

TEST_CASE("rank sweep emits csv") {
    const RunResult r = run("rank -n 2 --form conic --block A11 --qs 3,5,7,9,11");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q,rank_A11\n3,8\n5,24\n7,48\n9,80\n11,120\n");
}

TEST_CASE("even field orders are usage errors") {
    const RunResult r = run("rank -n 2 -q 4 --block full");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error:", 0) == 0);
}

TEST_CASE("points listing") {
    const RunResult text = run("points -n 1 -q 3");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "0 1  nonsquare\n1 0  square\n1 1  isotropic\n1 2  isotropic\n");
    const RunResult csv = run("points -n 1 -q 3 --format csv");
    CHECK(csv.out == "x0,x1,class\n0,1,nonsquare\n1,0,square\n1,1,isotropic\n1,2,isotropic\n");
}

TEST_CASE("matrix printing and saving") {
    const RunResult r = run("matrix -n 1 -q 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "gf2 4 4\n0100\n1000\n0010\n0001\n");

    const fs::path out = scratch_dir() / "b23.gf2";
    const RunResult save =
        run("matrix -n 2 -q 5 --form conic --block B23 -o " + out.string());
    CHECK(save.exit_code == 0);
    REQUIRE(fs::exists(out));
    const std::string body = slurp(out);
    REQUIRE(body.rfind("gf2 10 6\n", 0) == 0);
    CHECK(body.find('1', 9) == std::string::npos);  // all-zero block past the header
    CHECK_FALSE(fs::exists(out.string() + ".tmp"));
}

TEST_CASE("verify subcommand") {
    const RunResult r = run("verify --qmax 7 --nmax 2 --no-meta");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"expected\":12") != std::string::npos);
    CHECK(r.out.find("\"fail\":0") != std::string::npos);
    CHECK(r.out.back() == '\n');

    const RunResult again = run("verify --qmax 7 --nmax 2 --no-meta");
    CHECK(again.out == r.out);

    const RunResult text = run("verify --qs 3 --nmax 1 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("full-rank") != std::string::npos);
}

TEST_CASE("strict mode fails on the broken series reading") {
    const RunResult r = run("verify --suite conjecture --qs 3 --nmax 5 --strict --no-meta");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"status\":\"fail\"") != std::string::npos);
}

TEST_CASE("verify writes reports atomically") {
    const fs::path out = scratch_dir() / "report.json";
    const RunResult r = run("verify --qs 3 --nmax 1 -o " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    REQUIRE(fs::exists(out));
    CHECK(slurp(out).rfind("{\"checks\":", 0) == 0);
    CHECK_FALSE(fs::exists(out.string() + ".tmp"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("verify --suite bogus --qs 3").exit_code == 2);
    CHECK(run("verify --qs 3 --qmax 7").exit_code == 2);
    CHECK(run("rank -n 2 -q 3 --alpha 0").exit_code == 2);
    CHECK(run("rank -n 2 -q 3 --block A13").exit_code == 2);
    CHECK(run("rank -n 2 -q 3 -p 3").exit_code == 2);
    CHECK(run("rank -n 2 -q 3 --frobnicate").exit_code == 2);
    CHECK(run("points -n 1 -q 3 --format yaml").exit_code == 2);
    CHECK(run("verify --qmax 2").exit_code == 2);
}

TEST_CASE("help and version exit 0") {
    CHECK(run("--version").exit_code == 0);
    const RunResult help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("extension field alpha as a coefficient tuple") {
    const RunResult r = run("rank -n 1 -q 9 --alpha 1,1 --block A11");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "10\n");
    const RunResult named = run("rank -n 1 -q 9 --alpha nonsquare --block A11");
    CHECK(named.out == "10\n");
}

TEST_CASE("bench prints one summary line") {
    const RunResult r = run("bench --size 64 --reps 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("size=64 seed=1 reps=1 rank=", 0) == 0);
    CHECK(r.out.find("seconds=") != std::string::npos);
}
