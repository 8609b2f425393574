#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/chevalley.hpp"
#include "nilorb/partitions.hpp"
#include "nilorb/realization.hpp"

namespace nilorb {

// Labels over the simple roots; a diagram of a nilpotent orbit has entries in
// {0,1,2}.
using WeightedDynkinDiagram = std::vector<int>;

enum class VeryEvenFamily { None, I, II };

// Classical orbits carry a Jordan partition (plus a family tag when the
// partition is very even in type D); exceptional orbits are labeled by their
// weighted Dynkin diagram.  The name is a decorative annotation and never
// participates in equality.
struct OrbitLabel {
    SimpleType type;
    Partition partition;
    VeryEvenFamily family = VeryEvenFamily::None;
    WeightedDynkinDiagram wdd;  // exceptional types only
    std::string name;

    bool operator==(const OrbitLabel& o) const {
        return partition == o.partition && family == o.family && wdd == o.wdd;
    }
    bool operator!=(const OrbitLabel& o) const { return !(*this == o); }
    bool operator<(const OrbitLabel& o) const {
        if (partition != o.partition) return partition < o.partition;
        if (family != o.family) return int(family) < int(o.family);
        return wdd < o.wdd;
    }
    std::string text() const;
};

struct GradingData {
    WeightedDynkinDiagram wdd;
    std::map<int, int> dimByDegree;  // every degree with a nonzero piece
    long long orbitDim = 0;
    long long dDy = 0;
    std::vector<int> dynkinRoots;  // root indices with weight >= 2
    bool isEven = false;

    int dimAtDegree(int i) const {
        auto it = dimByDegree.find(i);
        return it == dimByDegree.end() ? 0 : it->second;
    }
};

// Conjugation invariants used to recognize an orbit from a raw element.
// Classical identification runs on definingRanks (Jordan type in the defining
// representation); adjointRanks are computed only where they are needed, for
// the exceptional catalogs.
struct OrbitSignature {
    std::vector<int> adjointRanks;  // ranks of (ad e)^k, k >= 1, until zero (exclusive)
    int centralizerDim = 0;
    std::vector<int> definingRanks;
};

struct OrbitEntry {
    OrbitLabel label;
    GradingData grading;
    long long dim = 0;
    OrbitSignature signature;
    // dim(W(e) cap span(e_1..e_n)) mod 2 for very even D labels, -1 otherwise.
    int veryEvenParity = -1;
    // Set when another entry shares the adjoint-rank signature; such entries
    // are told apart by the reductive data of the sl2 triple.
    bool flaggedCollision = false;
    int tripleCentDim = -1;
    int tripleCentRank = -1;
};

class TypeContext;

class OrbitCatalog {
public:
    SimpleType type() const { return type_; }
    const std::vector<OrbitEntry>& entries() const { return entries_; }
    const OrbitEntry& entry(const OrbitLabel& label) const;
    int entryIndex(const OrbitLabel& label) const;  // -1 when absent
    const OrbitEntry& zeroEntry() const;
    const OrbitEntry& principalEntry() const;
    // Cover pairs (lowerIdx, upperIdx) of the closure order; classical only.
    const std::vector<std::pair<int, int>>& closureCovers() const { return covers_; }

private:
    friend class TypeContext;
    SimpleType type_;
    std::vector<OrbitEntry> entries_;
    std::vector<std::pair<int, int>> covers_;
};

// One connected component of the Dynkin subdiagram on Pi \ S, typed and
// mapped back into the ambient diagram: component simple i corresponds to
// ambient simple simpleMap[i].
struct LeviComponent {
    SimpleType type;
    std::vector<int> simpleMap;
};

// Shared per-type state: root system, structure constants, matrix realization
// (classical), the orbit catalog, and memoized induction data.  Contexts are
// process-wide and immutable once built; building is lazy and thread-safe.
class TypeContext {
public:
    static std::shared_ptr<TypeContext> get(SimpleType t);

    const SimpleType type;
    const RootSystem& rs() const { return rs_; }
    const StructureConstants& sc() const { return sc_; }
    std::shared_ptr<const MatrixRealization> realization() const;

    // Built once per process with the seed of the first request; the content
    // is seed-independent by the genericity protocol.
    const OrbitCatalog& catalog(uint64_t seed) const;

    // Dense orbit in G.p{S}^nil; memoized per subset.
    OrbitLabel richardson(const SimpleSubset& S, uint64_t seed) const;

    // Entry indices reachable as induce(S, inner) over nonempty S, plus the
    // witnessing pairs per entry.
    struct InductionWitness {
        SimpleSubset cut;
        std::vector<OrbitLabel> inner;  // one per Levi component
    };
    const std::vector<std::vector<InductionWitness>>& inductionWitnesses(uint64_t seed) const;
    bool isRigid(const OrbitLabel& label, uint64_t seed) const;

private:
    explicit TypeContext(SimpleType t);
    RootSystem rs_;
    StructureConstants sc_;
    mutable std::mutex mu_;
    mutable std::unique_ptr<OrbitCatalog> catalog_;
    mutable std::map<std::vector<int>, OrbitLabel> richardsonMemo_;
    mutable std::unique_ptr<std::vector<std::vector<InductionWitness>>> witnesses_;

    void buildCatalog(uint64_t seed) const;
};

// Dominant-chamber recipe: concatenate the h-eigenvalue strings of the parts,
// sort, read off the simple-root labels for the type; the family swaps the
// fork labels for very even D partitions.
WeightedDynkinDiagram wddFromPartition(SimpleType t, const Partition& p,
                                       VeryEvenFamily family = VeryEvenFamily::None);

// All valid diagrams, by scanning {0,1,2}^rank: a labeling is kept exactly
// when a generic element of g(h;2) completes to an sl2 triple through the
// labeling's Cartan element.  Accepted samples must also pass the density
// and dimension-consistency certificates; a sample in the dense degree-0
// orbit that fails to complete rules the labeling out.
std::vector<WeightedDynkinDiagram> enumerateWdds(const StructureConstants& sc, uint64_t seed);

GradingData gradingData(const RootSystem& rs, const WeightedDynkinDiagram& wdd);

// Conjugate a Cartan labeling into the dominant chamber by simple
// reflections.
std::vector<long long> dominantize(const RootSystem& rs, std::vector<long long> labels);

// Closure (dominance) order for classical labels of one type; very even
// labels with the same partition compare equal-family only.
bool closureLeq(const OrbitLabel& a, const OrbitLabel& b);

// dim(W(e) cap span(e_1..e_n)) mod 2 in the defining representation, where
// W(e) = sum_j (im e^j cap ker e^j).  For a very even Jordan type, W(e) is a
// maximal isotropic subspace varying equivariantly with e, so this parity
// separates the two SO-orbits sharing the partition.
int veryEvenParity(const TypeContext& ctx, const Elem& e);

// Generic certified representative: element e of g(h;2) with [g(h;0), e] all
// of g(h;2), which pins e to the dense orbit of the grading (resampled up to
// 7 times, then hard error).
Elem orbitRepresentative(const TypeContext& ctx, const GradingData& grading, uint64_t seed);

OrbitLabel identifyOrbit(const TypeContext& ctx, const Elem& e, uint64_t seed);

// Connected components of the diagram on Pi \ S; hard error if a component
// does not match any simple type (cannot happen for subdiagrams of simple
// diagrams).
std::vector<LeviComponent> componentsOfLevi(const RootSystem& rs, const SimpleSubset& S);

// Orbit induced from the Levi l{S}: inner carries one orbit label per
// component of componentsOfLevi (component order).  The dimension formula
// dim = sum dim(inner) + 2 |nilradical| is asserted.
OrbitLabel induce(const TypeContext& ctx, const SimpleSubset& S,
                  const std::vector<OrbitLabel>& inner, uint64_t seed);

// All S (including the empty set) whose Richardson orbit is the label; empty
// iff the label is not Richardson.
std::vector<SimpleSubset> polarisations(const TypeContext& ctx, const OrbitLabel& label,
                                        uint64_t seed);

// Diagram of the minimal nonzero orbit: pairing of the simple roots against
// the highest coroot.
WeightedDynkinDiagram minimalOrbitWdd(const RootSystem& rs);

// Dominant diagram of the orbit through a principal nilpotent of the Levi on
// Pi \ {beta}.  Solves for the Levi-principal Cartan element and dominantizes
// its labels; no catalog is needed, so this works at any rank.
WeightedDynkinDiagram wddOfLeviPrincipal(const RootSystem& rs, int beta);

// Ambient index of a component root given in component simple-root
// coordinates.
int ambientRootIndex(const RootSystem& rs, const LeviComponent& comp,
                     const std::vector<int>& compCoords);

std::string formatWdd(const WeightedDynkinDiagram& wdd);

}  // namespace nilorb
