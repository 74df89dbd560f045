#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyrad/cli.hpp"
#include "polyrad/serialization.hpp"
#include "support.hpp"

using namespace polyrad;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Compares against tests/golden/<name>; POLYRAD_UPDATE_GOLDEN=1 rewrites the file.
void check_golden(const std::string& name, const std::string& actual) {
    const std::filesystem::path path = std::filesystem::path(POLYRAD_GOLDEN_DIR) / name;
    if (std::getenv("POLYRAD_UPDATE_GOLDEN")) {
        std::ofstream(path, std::ios::binary) << actual;
        return;
    }
    REQUIRE_MESSAGE(std::filesystem::exists(path), "missing golden file " << path);
    CHECK(slurp(path) == actual);
}

const std::string kUnitDisk = R"({"domain": {"shape": "disk", "center": [0, 0], "radius": 1}, "point": [0, 0]})";

}  // namespace

TEST_CASE("bound") {
    const Result plain = run({"bound", "--m", "5", "--gamma", "1"});
    CHECK(plain.code == cli::kExitOk);
    check_golden("bound_5_1.txt", plain.out);
    const Result json = run({"bound", "--m", "8", "--gamma", "2", "--format", "json"});
    CHECK(json.code == cli::kExitOk);
    check_golden("bound_8_2.json", json.out);
    CHECK(parse_json(json.out)["in_hypothesis"] == true);

    const Result lax = run({"bound", "--m", "5", "--gamma", "0", "--lax"});
    CHECK(lax.code == cli::kExitOk);
    CHECK(lax.out.find("bound: 0.32768") != std::string::npos);
}

TEST_CASE("radius") {
    const Result r = run({"radius", "--json", kUnitDisk});
    CHECK(r.code == cli::kExitOk);
    check_golden("radius_unit_disk.txt", r.out);

    const Result wos = run({"radius", "--json", kUnitDisk, "--method", "wos", "--walks", "500", "--format", "json"});
    CHECK(wos.code == cli::kExitOk);
    const Json j = parse_json(wos.out);
    CHECK(j["method"] == "monte_carlo");
    CHECK(std::abs(j["radius"].get<double>() - 1.0) <= 1e-3);
    CHECK(j["seed"] == kDefaultSeed);
}

TEST_CASE("lgamma") {
    const Result one = run({"lgamma", "--gamma", "1", "--json", R"({"points": [[1, 0], [0, 2]]})", "--format", "json"});
    CHECK(one.code == cli::kExitOk);
    check_golden("lgamma_one_two_i.json", one.out);
    CHECK(parse_json(one.out)["l_gamma"].get<double>() ==
          doctest::Approx(reference::kLGammaOneTwoI).epsilon(1e-13));

    const Json columns = poly_ray_system_to_json(PolyRaySystem::roots_of_unity(5, 2));
    const Result poly = run({"lgamma", "--gamma", "0.5", "--json", columns.dump()});
    CHECK(poly.code == cli::kExitOk);
    CHECK(poly.out.find("l_gamma[2]: 1") != std::string::npos);
}

TEST_CASE("verify") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "polyrad_cli_test";
    std::filesystem::create_directories(dir);
    const std::filesystem::path input = dir / "disk.json";
    std::ofstream(input) << configuration_to_json(testing::disk_configuration(5, 2, 0.4, 0.5, 1.0)).dump(2);

    const Result ok = run({"verify", "-i", input.string()});
    CHECK(ok.code == cli::kExitOk);
    check_golden("verify_disk.txt", ok.out);

    const std::filesystem::path output = dir / "report.json";
    const Result to_file = run({"verify", "-i", input.string(), "--format", "json", "-o", output.string()});
    CHECK(to_file.code == cli::kExitOk);
    CHECK(to_file.out.empty());
    CHECK(parse_json(slurp(output))["holds"] == true);

    // strict mode refuses m = 4, the exploratory mode reports it
    const std::string four = configuration_to_json(testing::disk_configuration(4, 1, 0.4, 0.5, 1.0)).dump();
    const Result strict = run({"verify", "--json", four});
    CHECK(strict.code == cli::kExitFailure);
    CHECK(strict.err.find("m >= 5") != std::string::npos);
    const Result lax = run({"verify", "--json", four, "--exploratory", "--format", "json"});
    CHECK(parse_json(lax.out)["hypotheses_ok"] == false);
}

TEST_CASE("sweep") {
    const std::vector<std::string> args{"sweep", "--m", "6", "--n", "2", "--gamma", "1", "--trials", "100", "--seed", "7"};
    const Result first = run(args);
    const Result second = run(args);
    CHECK(first.code == cli::kExitOk);
    CHECK(first.out == second.out);
    CHECK(first.out.rfind(std::string(kSweepCsvHeader) + "\n", 0) == 0);
    check_golden("sweep_6_2_1_seed7.csv", first.out);

    const Result lines = run({"sweep", "--m", "5", "--gamma", "1", "--trials", "3", "--format", "jsonl"});
    CHECK(lines.code == cli::kExitOk);
    CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 3);

    const Result wos = run({"sweep", "--m", "5", "--gamma", "1", "--trials", "2", "--method", "wos", "--walks", "500",
                            "--threads", "2", "--format", "json"});
    CHECK(wos.code == cli::kExitOk);
    CHECK(parse_json(wos.out)["reports"].size() == 2);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kExitIo);
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({"bound", "--m", "5"}).code == cli::kExitIo);
    CHECK(run({"bound", "--m", "5", "--gamma", "1", "--format", "csv"}).code == cli::kExitIo);
    CHECK(run({"bound", "--m", "4", "--gamma", "1"}).code == cli::kExitFailure);
    CHECK(run({"radius", "--json", "{bad"}).code == cli::kExitIo);
    CHECK(run({"radius", "-i", "/nonexistent/input.json"}).code == cli::kExitIo);
    CHECK(run({"radius", "--json", kUnitDisk, "-i", "x.json"}).code == cli::kExitIo);
    const Result outside =
        run({"radius", "--json", R"({"domain": {"shape": "disk", "center": [0, 0], "radius": 1}, "point": [2, 0]})"});
    CHECK(outside.code == cli::kExitFailure);
    CHECK(outside.err.rfind("error: ", 0) == 0);
}
