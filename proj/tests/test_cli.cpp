#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "subprocess.hpp"

using namespace psl::testutil;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("psl-cli-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("embeddings subcommand reports the factorization") {
    auto res = run_command(cli_path() + " --format json embeddings --p 5");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["roots"] == json::array({2, 3}));
    CHECK(j["phi"] == "X^2 + 1");
    CHECK(j["phi_mod_p"] == "(X - 2)(X - 3)");

    auto res7 = run_command(cli_path() + " embeddings --p 7");
    CHECK(res7.exit_code == 0);
    CHECK(res7.output.find("(X - 3)(X - 5)") != std::string::npos);
    CHECK(res7.output.find("roots: 3 5") != std::string::npos);
}

TEST_CASE("usage errors exit with code 64") {
    CHECK(run_command(cli_path() + " embeddings --p 4 2>/dev/null").exit_code == 64);
    CHECK(run_command(cli_path() + " theorem2 --p 4 --chi 4:1 --sigma 1 2>/dev/null").exit_code == 64);
    CHECK(run_command(cli_path() + " no-such-command 2>/dev/null").exit_code == 64);
    CHECK(run_command(cli_path() + " theorem2 --bogus-flag 2>/dev/null").exit_code == 64);
}

TEST_CASE("lvalue subcommand emits canonical encodings") {
    auto res = run_command(cli_path() + " lvalue --bernoulli 12");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["bernoulli"] == "-691/2730");

    auto res2 = run_command(cli_path() + " lvalue --chi 5:1 --k 1");
    json j2 = json::parse(res2.output);
    CHECK(j2["gen_bernoulli"] == "[-3/5, -1/5]");
    CHECK(j2["l_neg"] == "[3/5, 1/5]");

    auto res3 = run_command(cli_path() + " lvalue --cohen-h 3 3");
    CHECK(json::parse(res3.output)["cohen_h"] == "-2/9");
}

TEST_CASE("theorem2 run writes a deterministic report and caches help") {
    TempDir tmp;
    std::string out1 = (tmp.path / "r1.json").string();
    std::string out2 = (tmp.path / "r2.json").string();
    std::string out3 = (tmp.path / "r3.json").string();
    std::string cache = (tmp.path / "cache").string();
    std::string base = cli_path() + " --trunc 2 --prec 8 theorem2 --p 5 --chi 5:1 --sigma 1 --mmax 2";

    auto r1 = run_command(base + " --out " + out1);
    CHECK(r1.exit_code == 0);
    // cold cache run
    auto r2 = run_command(cli_path() + " --cache-dir " + cache +
                          " --trunc 2 --prec 8 theorem2 --p 5 --chi 5:1 --sigma 1 --mmax 2 --out " +
                          out2);
    CHECK(r2.exit_code == 0);
    CHECK(std::filesystem::exists(cache + "/values.json"));
    // warm cache run
    auto r3 = run_command(cli_path() + " --cache-dir " + cache +
                          " --trunc 2 --prec 8 theorem2 --p 5 --chi 5:1 --sigma 1 --mmax 2 --out " +
                          out3);
    CHECK(r3.exit_code == 0);

    std::string a = slurp(out1), b = slurp(out2), c = slurp(out3);
    CHECK(a == b); // no cache vs cold cache
    CHECK(b == c); // cold vs warm cache
    json j = json::parse(a);
    CHECK(j["pass"] == true);
}

TEST_CASE("lemma2 subcommand") {
    auto res = run_command(cli_path() + " --format json lemma2 --p 5 --a 3 --mmax 2");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["pass"] == true);
    CHECK(j["rows"][0]["l_m"] == 60);

    // a divisible by p breaks v_p(l_m) = 1; the check reports FAIL, exit 2
    auto fail = run_command(cli_path() + " --format json lemma2 --p 5 --a 5 --mmax 2");
    CHECK(fail.exit_code == 2);
    json jf = json::parse(fail.output);
    CHECK(jf["pass"] == false);
    CHECK(jf["rows"][0]["vp_l"] == 2);
}

TEST_CASE("series subcommands round trip through files") {
    TempDir tmp;
    std::string phi = (tmp.path / "phi.json").string();
    // hecke-eisenstein into a file, then reuse it: smoke the wire format
    auto r = run_command(cli_path() + " jacobi-eisenstein --k 4 --n 4 --out " + phi);
    CHECK(r.exit_code == 0);
    json j = json::parse(slurp(phi));
    CHECK(j["trunc"] == 4);
    bool found = false;
    for (const auto& row : j["coeffs"])
        if (row[0] == 1 && row[1] == 1) {
            CHECK(row[2] == "56/1");
            found = true;
        }
    CHECK(found);
}
