#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "diagasym_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("stdout_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(DIAGASYM_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json without_meta(const std::string& text) {
    json j = json::parse(text);
    j.erase("meta");
    return j;
}

}  // namespace

TEST_CASE("series command writes the documented cache format") {
    fs::path cache = scratch_dir() / "cache_a";
    fs::create_directories(cache);
    RunResult r = run_cli("series --d 3 --n-max 20 --cache-dir " + cache.string());
    CHECK(r.exit_code == 0);

    std::ifstream in(cache / "series_d3.txt");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "diagasym-series v1 d=3 n_max=20");
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) ++lines;
    }
    CHECK(lines == 21);

    // idempotent: a second run reuses the cache
    RunResult r2 = run_cli("series --d 3 --n-max 20 --cache-dir " + cache.string());
    CHECK(r2.exit_code == 0);
    CHECK(r2.stdout_text.find("cached") != std::string::npos);

    // smaller request served from the same file
    RunResult r3 = run_cli("series --d 3 --n-max 10 --cache-dir " + cache.string());
    CHECK(r3.exit_code == 0);
    CHECK(r3.stdout_text.find("cached") != std::string::npos);
}

TEST_CASE("series values match the d=2 closed form") {
    fs::path cache = scratch_dir() / "cache_b";
    fs::create_directories(cache);
    RunResult r = run_cli("series --d 2 --n-max 10 --cache-dir " + cache.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(cache / "series_d2.txt");
    std::string line;
    std::getline(in, line);  // header
    for (int n = 0; n <= 10; ++n) {
        REQUIRE(std::getline(in, line));
        CHECK(line == std::to_string(n));
    }
}

TEST_CASE("cache soundness: mismatched header is not trusted") {
    fs::path cache = scratch_dir() / "cache_c";
    fs::create_directories(cache);
    // plant a d=2 file under the d=3 name: must be ignored and regenerated
    {
        std::ofstream out(cache / "series_d3.txt");
        out << "diagasym-series v1 d=2 n_max=3\n0\n1\n2\n3\n";
    }
    RunResult r = run_cli("series --d 3 --n-max 3 --cache-dir " + cache.string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("computed") != std::string::npos);
    std::string content = slurp(cache / "series_d3.txt");
    CHECK(content.rfind("diagasym-series v1 d=3 n_max=3", 0) == 0);
}

TEST_CASE("verify succeeds for d=3 and reports the exact quantities") {
    fs::path out = scratch_dir() / "verify3.json";
    RunResult r = run_cli("verify --d 3 --out " + out.string());
    CHECK(r.exit_code == 0);
    json doc = json::parse(slurp(out));
    CHECK(doc["q"] == "1/3");
    CHECK(doc["det_g"] == "1/3");
    CHECK(doc["dH"] == "-3/16");
    CHECK(doc["s_at_c"] == "0");
    CHECK(doc["L0"] == "4/3");
    // 2/(pi sqrt 3) = 0.3675525969...
    CHECK(doc["asymptotic_form"]["constant_float"].get<std::string>().rfind("3.675525969", 0) == 0);
    CHECK(doc["asymptotic_form"]["growth"] == "8");
}

TEST_CASE("verify reports are byte-identical across runs apart from meta") {
    fs::path out1 = scratch_dir() / "det1.json";
    fs::path out2 = scratch_dir() / "det2.json";
    CHECK(run_cli("verify --d 4 --seed 11 --out " + out1.string()).exit_code == 0);
    CHECK(run_cli("verify --d 4 --seed 11 --out " + out2.string()).exit_code == 0);
    CHECK(without_meta(slurp(out1)).dump() == without_meta(slurp(out2)).dump());
    // and the non-meta content is genuinely nonempty
    CHECK(without_meta(slurp(out1)).size() > 5);
}

TEST_CASE("verify rejects d=2 with a domain message and exit 2") {
    RunResult r = run_cli("verify --d 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("oracle command agrees on a small box") {
    RunResult r = run_cli("oracle --d 3 --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("agrees") != std::string::npos);
}

TEST_CASE("ratio command emits CSV") {
    fs::path cache = scratch_dir() / "cache_d";
    fs::create_directories(cache);
    fs::path out = scratch_dir() / "ratio.csv";
    RunResult r = run_cli("ratio --d 3 --n-max 40 --cache-dir " + cache.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,ratio,richardson");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 40);
}

TEST_CASE("analyze on a short d=3 series produces a partial report with explicit nulls") {
    fs::path cache = scratch_dir() / "cache_e";
    fs::create_directories(cache);
    fs::path out = scratch_dir() / "analyze3.json";
    RunResult r = run_cli("analyze --d 3 --n-max 40 --cache-dir " + cache.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    json doc = json::parse(slurp(out));
    // 41 terms cannot support the order-6 guess at the required margin
    CHECK(doc["recurrence"].is_null());
    CHECK(doc["growth_candidates"].is_null());
    // but the approximant family already resolves the dominant singularity
    REQUIRE(doc["clusters"].is_array());
    bool found_eighth = false;
    for (const auto& c : doc["clusters"]) {
        if (c["spurious"].get<bool>()) continue;
        double re = std::stod(c["re"].get<std::string>());
        if (std::abs(re - 0.125) < 1e-6 && c["n_supporting"].get<int>() >= 5) found_eighth = true;
    }
    CHECK(found_eighth);
    CHECK(doc["subdominance"].is_object());
}

TEST_CASE("analyze reports are byte-identical across runs apart from meta") {
    fs::path cache = scratch_dir() / "cache_f";
    fs::create_directories(cache);
    fs::path out1 = scratch_dir() / "an1.json";
    fs::path out2 = scratch_dir() / "an2.json";
    std::string common = "analyze --d 2 --n-max 30 --seed 3 --cache-dir " + cache.string() + " --out ";
    CHECK(run_cli(common + out1.string()).exit_code == 0);
    CHECK(run_cli(common + out2.string()).exit_code == 0);
    CHECK(without_meta(slurp(out1)).dump() == without_meta(slurp(out2)).dump());
    json doc = without_meta(slurp(out1));
    CHECK(doc["recurrence"]["order"] == 1);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("series --d 1 --n-max 5").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}
