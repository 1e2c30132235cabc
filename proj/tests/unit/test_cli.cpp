// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dirac/cli.hpp"
#include "dirac/common.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dirac;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("dirac_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(p));
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

int run(const std::string& cmd, const json& cfg, const fs::path& out) {
    std::ostringstream log;
    return cli::run_command(cmd, cfg, out, 1, log);
}

}  // namespace

TEST_CASE("classify") {
    const fs::path out = fresh_dir("classify");
    CHECK(run("classify", json{{"bc", "periodic"}}, out) == cli::kOk);
    const json j = json::parse(slurp(out / "classify.json"));
    CHECK(j.at("class") == "PeriodicType");
    CHECK(run("classify", json{{"bc", {{"a", 1}, {"b", 0}, {"c", 0}, {"d", 1}}}}, out) == cli::kOk);
    CHECK(json::parse(slurp(out / "classify.json")).at("class") == "StrictlyRegular");
    CHECK(run("classify", json{{"bc", {{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}}}}, out) == cli::kOk);
    CHECK(json::parse(slurp(out / "classify.json")).at("class") == "NotRegular");
}

TEST_CASE("free spectrum output lists the lattice") {
    const fs::path out = fresh_dir("spectrum");
    CHECK(run("spectrum", json{{"bc", "periodic"}, {"M", 16}}, out) == cli::kOk);
    const auto rows = read_csv(out / "spectrum.csv");
    REQUIRE(rows.size() == 1 + 34);
    CHECK(rows[0][0] == "re");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double re = std::stod(rows[i][0]), im = std::stod(rows[i][1]);
        CHECK(std::abs(re - double(-16 + 2 * int((i - 1) / 2))) < 1e-12);
        CHECK(std::abs(im) < 1e-12);
    }
    CHECK(json::parse(slurp(out / "spectrum.json")).at("localization").at("ok") == true);
}

TEST_CASE("outputs are deterministic") {
    const json cfg{{"bc", {{"a", {0.3, 0.1}}, {"b", -0.5}, {"c", 0.7}, {"d", {0.0, 0.4}}}},
                   {"M", 24},
                   {"potential", {{"P", {{"kind", "step"}, {"x0", 1.0}, {"left", 0.5}, {"right", 0.0}}},
                                  {"Q", {{"kind", "constant"}, {"value", 0.2}}}}}};
    const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
    const int ra = run("spectrum", cfg, a), rb = run("spectrum", cfg, b);
    CHECK(ra == rb);
    CHECK(slurp(a / "spectrum.csv") == slurp(b / "spectrum.csv"));
    CHECK(slurp(a / "spectrum.json") == slurp(b / "spectrum.json"));
}

TEST_CASE("configuration errors") {
    const fs::path out = fresh_dir("errors");
    CHECK_THROWS_AS(run("classify", json{{"bc", {{"a", 1}}}}, out), ConfigError);
    CHECK_THROWS_AS(run("classify", json{{"bc", "sideways"}}, out), ConfigError);
    CHECK_THROWS_AS(run("spectrum", json{{"bc", "periodic"}, {"M", 7}}, out), ConfigError);
    CHECK_THROWS_AS(run("nonsense", json::object(), out), ConfigError);
    CHECK_THROWS_AS(run("spectrum", json{{"bc", "periodic"}, {"M", "many"}}, out), ConfigError);
}

TEST_CASE("main maps failures to exit codes") {
    const fs::path dir = fresh_dir("main");
    const fs::path good = dir / "good.json", bad = dir / "bad.json", broken = dir / "broken.json";
    std::ofstream(good) << R"({"bc": "antiperiodic"})";
    std::ofstream(bad) << R"({"bc": {"a": 1}})";
    std::ofstream(broken) << "{ not json";
    auto call = [&](std::vector<std::string> args) {
        std::vector<char*> argv;
        for (auto& s : args) argv.push_back(s.data());
        return cli::main(static_cast<int>(argv.size()), argv.data());
    };
    const std::string out = dir.string();
    CHECK(call({"dirac-spectra", "classify", "--config", good.string(), "--out", out}) == 0);
    CHECK(call({"dirac-spectra", "classify", "--config", bad.string(), "--out", out}) == 1);
    CHECK(call({"dirac-spectra", "classify", "--config", broken.string(), "--out", out}) == 1);
    CHECK(call({"dirac-spectra", "classify", "--config", (dir / "missing.json").string(), "--out", out}) == 1);
    CHECK(call({"dirac-spectra", "frobnicate", "--config", good.string()}) == 1);
}
