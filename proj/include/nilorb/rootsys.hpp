#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilorb/types.hpp"

namespace nilorb {

// One positive root, stored as integer coordinates over the simple roots in
// Bourbaki numbering.  halfNorm is (gamma,gamma)/2 in the normalization where
// short simple roots have halfNorm 1 (so 1 everywhere in simply laced types,
// {1,2} in B/C/F4, {1,3} in G2).
struct Root {
    std::vector<int> coords;
    int height = 0;
    int halfNorm = 1;
    bool isLong = true;
};

// Positive roots of a simple root system together with the root poset
// (gamma <= mu iff mu - gamma has nonnegative coordinates).  Positive roots
// are listed in the canonical order: by height, then lexicographically by
// coordinates.  All downstream code (bitsets, structure constants, JSON
// output) indexes roots by position in this order.
class RootSystem {
public:
    explicit RootSystem(SimpleType type);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int numPositive() const { return int(roots_.size()); }
    // Dimension of the ambient simple Lie algebra: 2 |Delta^+| + rank.
    int algebraDim() const { return 2 * numPositive() + rank(); }
    int dimBorel() const { return numPositive() + rank(); }

    const Root& root(int idx) const { return roots_.at(idx); }
    const std::vector<Root>& positiveRoots() const { return roots_; }
    int highestRootIndex() const { return highest_; }

    // Cartan matrix in the convention cartan[i][j] = <alpha_j, alpha_i^vee>.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    // halfNorm of the i-th simple root.
    int simpleHalfNorm(int i) const { return simpleD_.at(i); }

    // <gamma, alpha_i^vee> for a positive root index.
    int pairing(int rootIdx, int i) const { return pairing_.at(rootIdx).at(i); }

    // Index of the positive root with these coordinates, if it is one.
    std::optional<int> indexOf(const std::vector<int>& coords) const;
    // Position of the simple root alpha_i in the canonical order.
    int simpleRootIndex(int i) const {
        std::vector<int> e(rank(), 0);
        e.at(i) = 1;
        return indexOf(e).value();
    }
    // Is v (any sign pattern) a root?  Positive roots and their negatives.
    bool isRoot(const std::vector<int>& coords) const;

    // Root poset.  rootLeq: gamma <= mu coordinatewise.
    bool rootLeq(int gammaIdx, int muIdx) const;
    // Upper/lower covers in the poset (differences by one simple root).
    const std::vector<int>& coversUp(int idx) const { return coverUp_.at(idx); }
    const std::vector<int>& coversDown(int idx) const { return coverDown_.at(idx); }

    // Roots of the nilradical of the standard parabolic p{S}: positive roots
    // with a positive coefficient at some alpha_s, s in S.  Sorted indices.
    std::vector<int> nilradicalRoots(const SimpleSubset& S) const;
    // Positive roots supported entirely on Pi \ S (the Levi's positive roots).
    std::vector<int> leviRoots(const SimpleSubset& S) const;

    // Weight of a root under the cocharacter with alpha_i |-> labels[i]:
    // sum_i coords_i * labels_i.
    int cocharacterWeight(int rootIdx, const std::vector<int>& labels) const;

    // Symmetrized form value (gamma, mu) in the normalization above.
    long long form(const std::vector<int>& a, const std::vector<int>& b) const;

    std::string formatRoot(int idx) const;

private:
    SimpleType type_;
    std::vector<Root> roots_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> simpleD_;
    std::vector<std::vector<int>> pairing_;
    std::vector<std::vector<int>> coverUp_, coverDown_;
    std::unordered_map<std::string, int> index_;
    int highest_ = -1;

    static std::string key(const std::vector<int>& coords);
    void build();
};

// Number of positive roots per type, used as a construction cross-check.
int expectedPositiveRoots(SimpleType t);

}  // namespace nilorb
