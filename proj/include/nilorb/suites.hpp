#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilorb/orbits.hpp"

namespace nilorb {

struct SuiteOptions {
    int maxRank = 5;  // cap on the classical families
    uint64_t seed = 1;
    int jobs = 1;
    // Admit the E6 catalog and classification where a suite offers them;
    // everything E7/E8-sized stays excluded regardless.
    bool allowLarge = false;
};

struct SuiteCheck {
    bool ok = false;
    std::string text;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// chevalley, wdd, richardson, extreme, lonely, dmin, anomalies, conjectures.
const std::vector<std::string>& suiteNames();

// The enumerated simple types A1..A5, B2..B4, C2..C4, D4, D5, G2, F4,
// filtered to rank <= maxRank.
std::vector<SimpleType> defaultTypes(int maxRank);

// Throws std::invalid_argument for an unknown suite name.
SuiteResult runSuite(const std::string& name, const SuiteOptions& opt);

// Closed-form classification of the extreme orbits of a type, zero orbit
// included.  Classical families follow the partition lists; types with a
// fundamental highest root get {0, minimal, intermediate, principal}.
std::vector<OrbitLabel> extremeReferenceList(const TypeContext& ctx, uint64_t seed);

// Closed-form classification of the lonely orbits (nonzero ones).
std::vector<OrbitLabel> lonelyReferenceList(const TypeContext& ctx, uint64_t seed);

}  // namespace nilorb
