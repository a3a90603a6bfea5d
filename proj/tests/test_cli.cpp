#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// CLI integration: run the installed binary and check output + exit codes.
// LATWALK_CLI is injected by the build.

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(LATWALK_CLI) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

struct TempCacheDir {
    std::filesystem::path dir;
    TempCacheDir() {
        dir = std::filesystem::temp_directory_path() /
              ("latwalk-cli-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempCacheDir() { std::filesystem::remove_all(dir); }
    std::string flag() const { return " --cache-dir " + dir.string(); }
};

}  // namespace

TEST_CASE("count polygon emits the expected CSV") {
    TempCacheDir cache;
    auto r = run("count polygon -g Z2 -n 6 -o csv" + cache.flag());
    CHECK(r.status == 0);
    CHECK(r.out.find("n,count\n") == 0);
    CHECK(r.out.find("4,4\n") != std::string::npos);
    CHECK(r.out.find("6,12\n") != std::string::npos);
}

TEST_CASE("tree polygons are all zero with exit 0") {
    TempCacheDir cache;
    auto r = run("count polygon -g T3 -n 10 -o csv" + cache.flag());
    CHECK(r.status == 0);
    CHECK(r.out.find("10,0\n") != std::string::npos);
}

TEST_CASE("verify square-ghf exits 0 on a valid pair and 2 on the rung swap") {
    TempCacheDir cache;
    auto good = run("verify square-ghf -g hex -H fig1 -r 4 -o json" + cache.flag());
    CHECK(good.status == 0);
    CHECK(good.out.find("\"passed\": true") != std::string::npos);

    auto bad = run("verify square-ghf -g L2 --rho rungswap -o json" + cache.flag());
    CHECK(bad.status == 2);
    CHECK(bad.out.find("finite_fixed_set") != std::string::npos);
}

TEST_CASE("usage and config errors exit 1") {
    TempCacheDir cache;
    CHECK(run("count saw -g NoSuchGraph -n 3" + cache.flag()).status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("count saw -g Z2 -n 14 --budget 10" + cache.flag()).status == 1);  // budget exhausted
}

TEST_CASE("warm cache reproduces the report byte for byte") {
    TempCacheDir cache;
    const std::string cmd = "count saw -g Z2 -n 8 -o json" + cache.flag();
    auto cold = run(cmd);
    auto warm = run(cmd);
    CHECK(cold.status == 0);
    CHECK(warm.status == 0);
    CHECK(cold.out == warm.out);
    // and the cache file actually exists
    CHECK(std::filesystem::exists(cache.dir / "counts.jsonl"));
}

TEST_CASE("worker count does not change the emitted counts") {
    TempCacheDir c1, c8;
    auto w1 = run("count saw -g Z2 -n 9 -w 1 -o csv" + c1.flag());
    auto w8 = run("count saw -g Z2 -n 9 -w 8 -o csv" + c8.flag());
    CHECK(w1.status == 0);
    CHECK(w1.out == w8.out);
}

TEST_CASE("construct polygon emits a closed assembly as JSON") {
    TempCacheDir cache;
    auto r = run("construct polygon -g Z2 -n 1 -N 1 -k 3 -o json" + cache.flag());
    CHECK(r.status == 0);
    CHECK(r.out.find("\"polygon\"") != std::string::npos);
    CHECK(r.out.find("\"plot\"") != std::string::npos);
}

TEST_CASE("the cache dir environment variable is honored") {
    TempCacheDir cache;
    const std::string cmd = "env LATWALK_CACHE_DIR=" + cache.dir.string() + " " +
                            std::string(LATWALK_CLI) + " count saw -g Z1 -n 4 >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(std::filesystem::exists(cache.dir / "counts.jsonl"));
}
