#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

// End-to-end runs of the installed binary; the build injects its location.
#ifndef NILORB_CLI_PATH
#error "NILORB_CLI_PATH must point at the CLI binary"
#endif

namespace {

using Json = nlohmann::json;

struct RunResult {
    int exitCode = -1;
    std::string out;
};

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("nilorb-cli-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(NILORB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Every invocation below points the cache at a throwaway directory so test
// runs cannot see each other's files.
std::string cached(const TempDir& tmp, const std::string& args) {
    return args + " --cache-dir " + tmp.path.string();
}

}  // namespace

TEST_CASE("orbits list renders the full G2 catalog with its flag columns") {
    TempDir tmp;
    auto r = run(cached(tmp, "orbits list --type G2 --format json"));
    REQUIRE(r.exitCode == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["orbits"].size() == 5);
    int extreme = 0, lonely = 0;
    for (const auto& o : j["orbits"]) {
        if (o["extreme"].get<bool>() && o["dim"].get<long long>() > 0) ++extreme;
        if (o["lonely"].get<bool>()) ++lonely;
    }
    CHECK(extreme == 3);
    CHECK(lonely == 2);
}

TEST_CASE("orbit info answers a single classical label") {
    TempDir tmp;
    auto r = run(cached(tmp, "orbit info --type C --rank 2 --partition 2,2 --format json"));
    REQUIRE(r.exitCode == 0);
    Json j = Json::parse(r.out);
    CHECK(j["orbit"]["dim"].get<long long>() == 6);
    CHECK(j["orbit"]["dMin"].get<long long>() == 2);
    CHECK(j["orbit"]["dMax"].get<long long>() == 3);
    CHECK_FALSE(j["orbit"]["extreme"].get<bool>());
}

TEST_CASE("ideal counting and classification") {
    TempDir tmp;
    auto r = run(cached(tmp, "ideals --type F4 --format json"));
    REQUIRE(r.exitCode == 0);
    CHECK(Json::parse(r.out)["count"].get<uint64_t>() == 105);

    auto c = run(cached(tmp, "ideals --type A2 --classify --format json"));
    REQUIRE(c.exitCode == 0);
    Json j = Json::parse(c.out);
    REQUIRE(j["classes"].size() == 3);
    std::vector<int> sizes;
    for (const auto& cls : j["classes"]) sizes.push_back(int(cls["idealCount"].get<uint64_t>()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 3});
}

TEST_CASE("the so10 classification pins the singleton intermediate class") {
    TempDir tmp;
    auto r = run(cached(tmp, "ideals --type D5 --classify --format json"));
    REQUIRE(r.exitCode == 0);
    Json j = Json::parse(r.out);
    bool found = false;
    for (const auto& cls : j["classes"]) {
        const auto& l = cls["orbit"]["label"];
        if (!l.contains("partition")) continue;
        if (l["partition"] != Json::array({5, 2, 2, 1})) continue;
        found = true;
        CHECK(cls["idealCount"].get<uint64_t>() == 1);
        CHECK(cls["dims"] == Json::array({13}));
    }
    CHECK(found);
}

TEST_CASE("oversized catalogs are refused, counting stays within reach") {
    TempDir tmp;
    auto refused = run(cached(tmp, "ideals --type E7"));
    CHECK(refused.exitCode == 2);
    auto counted = run(cached(tmp, "ideals --type E7 --allow-large --format json"));
    REQUIRE(counted.exitCode == 0);
    CHECK(Json::parse(counted.out)["count"].get<uint64_t>() == 4160);
    auto classified = run(cached(tmp, "ideals --type E7 --allow-large --classify"));
    CHECK(classified.exitCode == 2);
    auto catalog = run(cached(tmp, "orbits list --type E8"));
    CHECK(catalog.exitCode == 2);
}

TEST_CASE("verify: a clean suite exits 0") {
    TempDir tmp;
    auto r = run(cached(tmp, "verify --suite chevalley --max-rank 4"));
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("chevalley") != std::string::npos);
}

TEST_CASE("verify: the conjectures suite is clean through rank 3") {
    TempDir tmp;
    auto r = run(cached(tmp, "verify --suite conjectures --max-rank 3"));
    CHECK(r.exitCode == 0);
}

TEST_CASE("verify: rank 4 surfaces the sp8 minimal-dimension finding") {
    // The class of (4,2,2) in sp8 owns an inclusion-minimal ideal above its
    // minimum dimension; the suite must fail and name the orbit.
    TempDir tmp;
    auto r = run(cached(tmp, "verify --suite conjectures --max-rank 4"));
    CHECK(r.exitCode == 1);
    CHECK(r.out.find("(4,2,2)") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    TempDir tmp;
    CHECK(run(cached(tmp, "orbits list")).exitCode == 2);                      // missing --type
    CHECK(run(cached(tmp, "orbits list --type Q7")).exitCode == 2);            // no such family
    CHECK(run(cached(tmp, "orbit info --type A --rank 2")).exitCode == 2);     // no label
    CHECK(run(cached(tmp, "orbit info --type A --rank 2 --partition 4")).exitCode == 2);
    CHECK(run(cached(tmp, "orbit info --type G2 --partition 2,1")).exitCode == 2);
    CHECK(run(cached(tmp, "verify --suite nosuchsuite")).exitCode == 2);
    CHECK(run(cached(tmp, "ideals --type A2 --format yaml")).exitCode == 2);
}

TEST_CASE("cold, warm, and uncached runs render byte-identical output") {
    TempDir tmp;
    std::string cmd = cached(tmp, "orbits list --type B3 --format json");
    auto cold = run(cmd);
    REQUIRE(cold.exitCode == 0);
    auto warm = run(cmd);
    REQUIRE(warm.exitCode == 0);
    auto uncached = run(cmd + " --no-cache");
    REQUIRE(uncached.exitCode == 0);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == uncached.out);
    CHECK(std::filesystem::exists(tmp.path / "orbits-B3.v1.json"));
}

TEST_CASE("global flags are accepted after the subcommand") {
    TempDir tmp;
    auto r = run(cached(tmp, "orbits list --type A2 --seed 9 --jobs 2 --format csv"));
    REQUIRE(r.exitCode == 0);
    CHECK(r.out.find("type,rank,partition") == 0);  // csv header line
}
