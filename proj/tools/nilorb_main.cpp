// nilorb: nilpotent orbit catalogs, ad-nilpotent ideal classifications, and
// the verification suites, behind a small reproducible CLI.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// assertion (genericity protocol or signature collision breakdown).

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilorb/cache.hpp"
#include "nilorb/report.hpp"
#include "nilorb/suites.hpp"

namespace {

using namespace nilorb;

struct GlobalOpts {
    std::string format = "table";
    bool noCache = false;
    std::string cacheDir;
    uint64_t seed = 1;
    int jobs = 1;
};

CacheConfig cacheConfig(const GlobalOpts& g) {
    CacheConfig cfg;
    cfg.dir = g.cacheDir;
    cfg.enabled = !g.noCache;
    return cfg;
}

void emit(const Json& payload, const GlobalOpts& g) {
    if (g.format == "json")
        std::cout << renderJson(payload);
    else if (g.format == "csv")
        std::cout << renderCsv(payload);
    else
        std::cout << renderTable(payload);
}

SimpleType parseType(const std::string& typeText, int rank) {
    if (typeText.empty()) throw UsageError("--type is required");
    return SimpleType::parse(typeText, rank);
}

// The E7 and E8 orbit catalogs are out of this tool's reach (the diagram
// enumeration alone is days of exact linear algebra), so every command that
// needs one refuses them up front.
void rejectCatalogType(SimpleType t) {
    if (t.family == Family::E && t.rank >= 7)
        throw UsageError("the " + t.name() +
                         " orbit catalog is not supported; ideal counting works with "
                         "--allow-large");
}

Json orbitsPayloadCached(const CacheConfig& cache, SimpleType t, uint64_t seed, int jobs) {
    if (auto hit = cacheLoad(cache, "orbits", t, seed)) return *hit;
    auto ctx = TypeContext::get(t);
    Json payload = orbitsPayload(*ctx, seed, jobs);
    cacheStore(cache, "orbits", t, seed, payload);
    return payload;
}

OrbitLabel labelFromFlags(SimpleType t, const std::vector<int>& partition,
                          const std::string& familyText, const std::vector<int>& wdd) {
    OrbitLabel label{t, {}, VeryEvenFamily::None, {}, ""};
    if (t.isClassical()) {
        if (partition.empty())
            throw UsageError("classical types are labeled by --partition a,b,c");
        if (!wdd.empty()) throw UsageError("--wdd labels exceptional types only");
        label.partition = partition;
        std::sort(label.partition.rbegin(), label.partition.rend());
        if (familyText == "I") label.family = VeryEvenFamily::I;
        if (familyText == "II") label.family = VeryEvenFamily::II;
    } else {
        if (wdd.empty())
            throw UsageError("exceptional types are labeled by --wdd l1,l2,...");
        if (!partition.empty() || !familyText.empty())
            throw UsageError("--partition/--family label classical types only");
        if (int(wdd.size()) != t.rank)
            throw UsageError("--wdd needs one label per simple root (" +
                             std::to_string(t.rank) + " for " + t.name() + ")");
        label.wdd = wdd;
    }
    return label;
}

int run(int argc, char** argv) {
    CLI::App app{"Nilpotent orbits and ad-nilpotent ideals in simple Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-cache", g.noCache, "Bypass the on-disk payload cache");
    app.add_option("--cache-dir", g.cacheDir,
                   "Cache directory (default: ORBITS_CACHE_DIR, else ~/.cache/nilorb)");
    app.add_option("--seed", g.seed, "Base seed for the genericity protocol")
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads for classifications")
        ->check(CLI::Range(1, 512))
        ->capture_default_str();

    std::string typeText;
    int rank = 0;

    auto* orbits = app.add_subcommand("orbits", "Orbit catalog commands");
    orbits->require_subcommand(1);
    orbits->fallthrough();
    auto* orbitsList = orbits->add_subcommand("list", "List the orbits of one simple type");
    orbitsList->fallthrough();
    orbitsList->add_option("--type", typeText, "Simple type, e.g. G2 or C")->required();
    orbitsList->add_option("--rank", rank, "Rank when --type is a bare family letter");

    std::vector<int> partitionFlag;
    std::string familyText;
    std::vector<int> wddFlag;
    auto* orbit = app.add_subcommand("orbit", "Single-orbit commands");
    orbit->require_subcommand(1);
    orbit->fallthrough();
    auto* orbitInfo = orbit->add_subcommand("info", "Report one orbit's row");
    orbitInfo->fallthrough();
    orbitInfo->add_option("--type", typeText, "Simple type, e.g. D5")->required();
    orbitInfo->add_option("--rank", rank, "Rank when --type is a bare family letter");
    orbitInfo->add_option("--partition", partitionFlag, "Jordan partition (classical types)")
        ->delimiter(',');
    orbitInfo->add_option("--family", familyText, "Very even family tag (type D)")
        ->check(CLI::IsMember({"I", "II"}));
    orbitInfo->add_option("--wdd", wddFlag, "Weighted Dynkin diagram (exceptional types)")
        ->delimiter(',');

    bool classify = false;
    bool allowLarge = false;
    auto* ideals = app.add_subcommand("ideals", "Count or classify the ad-nilpotent ideals");
    ideals->fallthrough();
    ideals->add_option("--type", typeText, "Simple type, e.g. F4")->required();
    ideals->add_option("--rank", rank, "Rank when --type is a bare family letter");
    ideals->add_flag("--classify", classify, "Group the ideals by associated orbit");
    ideals->add_flag("--allow-large", allowLarge, "Admit E7/E8 ideal counting");

    std::string suite = "all";
    int maxRank = 5;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->fallthrough();
    verify->add_option("--suite", suite, "Suite name, or all")->capture_default_str();
    verify->add_option("--max-rank", maxRank, "Classical rank cap")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    verify->add_flag("--allow-large", allowLarge, "Include the E6 catalog checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CacheConfig cache = cacheConfig(g);

    if (orbitsList->parsed()) {
        SimpleType t = parseType(typeText, rank);
        rejectCatalogType(t);
        emit(orbitsPayloadCached(cache, t, g.seed, g.jobs), g);
        return 0;
    }

    if (orbitInfo->parsed()) {
        SimpleType t = parseType(typeText, rank);
        rejectCatalogType(t);
        OrbitLabel label = labelFromFlags(t, partitionFlag, familyText, wddFlag);
        Json all = orbitsPayloadCached(cache, t, g.seed, g.jobs);
        emit(orbitInfoFromPayload(all, label), g);
        return 0;
    }

    if (ideals->parsed()) {
        SimpleType t = parseType(typeText, rank);
        if (t.family == Family::E && t.rank >= 7) {
            if (!allowLarge)
                throw UsageError(t.name() + " ideal counting needs --allow-large");
            if (classify)
                throw UsageError("the " + t.name() +
                                 " ideal classification is out of this tool's reach");
        }
        Json payload;
        if (classify) {
            if (auto hit = cacheLoad(cache, "ideals", t, g.seed)) {
                payload = *hit;
            } else {
                auto ctx = TypeContext::get(t);
                payload = idealsPayload(*ctx, g.seed, g.jobs, true);
                cacheStore(cache, "ideals", t, g.seed, payload);
            }
        } else {
            auto ctx = TypeContext::get(t);
            payload = idealsPayload(*ctx, g.seed, g.jobs, false);
        }
        emit(payload, g);
        return 0;
    }

    // verify
    SuiteOptions opt;
    opt.maxRank = maxRank;
    opt.seed = g.seed;
    opt.jobs = g.jobs;
    opt.allowLarge = allowLarge;
    std::vector<SuiteResult> results;
    if (suite == "all") {
        for (const auto& name : suiteNames()) results.push_back(runSuite(name, opt));
    } else {
        results.push_back(runSuite(suite, opt));
    }
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed();
    emit(suitesPayload(results), g);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
