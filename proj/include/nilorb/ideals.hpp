#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/orbits.hpp"

namespace nilorb {

constexpr int kMaxPositiveRoots = 128;
using RootSet = std::bitset<kMaxPositiveRoots>;

// An ad-nilpotent ideal of the Borel: an upward closed set of positive
// roots.  generators lists its minimal members, ascending by root index.
struct AdNilpotentIdeal {
    RootSet members;
    std::vector<int> generators;
    int dim = 0;
};

// All upper ideals of the root poset, by depth-first scan over roots in
// descending canonical order (a root may enter only once its upper covers
// are in).  Deterministic order, starting from the empty ideal.
std::vector<AdNilpotentIdeal> enumerateIdeals(const RootSystem& rs);

// Independent count by scanning all subsets of the positive roots; only for
// systems with at most 24 of them.
uint64_t bruteForceIdealCount(const RootSystem& rs);

// Product formula over the exponents e_i with Coxeter number h:
// prod (e_i + h + 1)/(e_i + 1).
uint64_t catalanIdealCount(const RootSystem& rs);

// Validates upward closure and fills in generators and dimension.
AdNilpotentIdeal makeIdeal(const RootSystem& rs, const RootSet& members);

// Roots of weight >= 2 under the orbit's labeling; upward closed because the
// labeling is dominant.
AdNilpotentIdeal dynkinIdeal(const RootSystem& rs, const GradingData& grading);

// [u,u]: the roots of height >= 2.
AdNilpotentIdeal commutatorIdeal(const RootSystem& rs);

// Orbit through a generic element of the ideal's span: the unique dense one.
// Three independent samples must agree; otherwise widen to seven and take
// the unique label of maximal dimension.
OrbitLabel associatedOrbit(const TypeContext& ctx, const AdNilpotentIdeal& ideal, uint64_t seed);

struct IdealClass {
    OrbitLabel orbit;
    std::vector<int> idealIdx;  // positions in ClassificationReport::ideals
    long long dMinObserved = 0;
    long long dMax = 0;
    int dynkinIdealIdx = -1;            // position in ideals
    std::vector<int> maximal, minimal;  // positions in ideals
    bool hasseConnected = false;
};

struct ClassificationReport {
    SimpleType type;
    uint64_t seed = 0;
    std::vector<AdNilpotentIdeal> ideals;
    std::vector<IdealClass> classes;  // catalog entry order; all nonempty
};

ClassificationReport classify(const TypeContext& ctx, uint64_t seed, int jobs = 1);

// Process-wide memoized classification; the first call for a type pins the
// run (content is seed-independent by the certificate protocol).
const ClassificationReport& cachedClassification(SimpleType t, uint64_t seed, int jobs = 1);

// Singleton class; asserts the lone member is the ideal of the labeling.
bool isLonely(const ClassificationReport& rep, const IdealClass& cls);

struct DminVerdict {
    OrbitLabel orbit;
    long long observed = 0;
    long long formula = 0;
    bool ok = false;
};

// Smallest ideal dimension in each class against dim B - dim B(G_e).
std::vector<DminVerdict> checkDminFormula(const TypeContext& ctx, const ClassificationReport& rep,
                                          uint64_t seed);

struct ConjectureFindings {
    struct AdditivityCheck {
        OrbitLabel orbit;
        bool witnessed = false;
        SimpleSubset cut;  // a witnessing Levi cut when found
        std::vector<OrbitLabel> inner;
    };
    // One entry per non-rigid orbit: some induction with
    // dMax(O) = sum dMax(inner) + dim(nilradical).
    std::vector<AdditivityCheck> dmaxAdditivity;
    std::vector<OrbitLabel> hasseDisconnected;
    std::vector<OrbitLabel> minimalDimMismatch;

    bool clean() const {
        for (const auto& c : dmaxAdditivity)
            if (!c.witnessed) return false;
        return hasseDisconnected.empty() && minimalDimMismatch.empty();
    }
};

ConjectureFindings checkConjectures(const TypeContext& ctx, const ClassificationReport& rep,
                                    uint64_t seed, int jobs = 1);

// Simple roots contained in the ideal, as a Levi cut; empty -> nullopt.  An
// ideal avoids every simple root exactly when it sits inside [u,u].
std::optional<SimpleSubset> detectInducedViaSimpleRoots(const RootSystem& rs,
                                                        const AdNilpotentIdeal& ideal);

}  // namespace nilorb
