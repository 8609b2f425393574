#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "nilorb/linalg.hpp"
#include "nilorb/rootsys.hpp"

namespace nilorb {

// Element of the Lie algebra, sparse over the Chevalley basis.  Basis layout
// for m = |Delta^+|, n = rank:  index g in [0,m) is x_gamma, m+g is y_gamma,
// 2m+i is h_i = alpha_i^vee.
struct Elem {
    std::map<int, Rat> c;

    bool isZero() const { return c.empty(); }
    void add(int idx, const Rat& v) {
        if (v == 0) return;
        auto [it, fresh] = c.emplace(idx, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) c.erase(it);
        }
    }
    Elem& operator+=(const Elem& o) {
        for (auto& [i, v] : o.c) add(i, v);
        return *this;
    }
    Elem scaled(const Rat& f) const {
        Elem out;
        if (f == 0) return out;
        for (auto& [i, v] : c) out.c.emplace(i, v * f);
        return out;
    }
    bool operator==(const Elem& o) const { return c == o.c; }
};

// Integral structure constants of the simple Lie algebra over a root system,
// fixed by the extraspecial-pair convention: positive roots carry the
// canonical (height, lex) order; for each non-simple xi the pair
// (beta, xi - beta) with beta minimal is assigned N = +(p+1); every other
// constant follows from the Jacobi identity and the Chevalley involution.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs);

    const RootSystem& rootSystem() const { return *rs_; }
    int dim() const { return rs_->algebraDim(); }
    int numPositive() const { return rs_->numPositive(); }

    int xIndex(int rootIdx) const { return rootIdx; }
    int yIndex(int rootIdx) const { return numPositive() + rootIdx; }
    int hIndex(int i) const { return 2 * numPositive() + i; }

    // N_{gamma,delta} for positive roots with gamma+delta a positive root.
    long long structureN(int gammaIdx, int deltaIdx) const;

    // Coordinates of the coroot gamma^vee over the h_i.
    const std::vector<int>& corootCoords(int rootIdx) const { return coroot_.at(rootIdx); }

    // Bracket of two basis elements; small and exact by construction.
    Elem bracketBasis(int i, int j) const;
    Elem bracket(const Elem& a, const Elem& b) const;

    // x_gamma, y_gamma, h_i and spans as elements.
    Elem x(int rootIdx) const;
    Elem y(int rootIdx) const;
    Elem h(int i) const;

    // The Cartan element with alpha_i(h) = labels[i]; rational coordinates.
    Elem cartanForLabels(const std::vector<int>& labels) const;

    // Matrix of ad(e) on the full basis (columns indexed by basis, entries
    // rational in general; integral whenever e has integral coordinates).
    RatMat adMatrix(const Elem& e) const;

    // Matrix whose columns are [span_k, e] expressed in the full basis.
    RatMat bracketMatrix(const std::vector<Elem>& span, const Elem& e) const;

    // Centralizer of e inside span(span): a reduced basis.
    std::vector<Elem> centralizerIn(const std::vector<Elem>& span, const Elem& e) const;

    std::vector<Rat> coords(const Elem& e) const;

private:
    const RootSystem* rs_;
    // Key (gamma<<16)|delta for positive-pair constants, gamma < delta in
    // canonical order.
    std::unordered_map<uint32_t, long long> nPlus_;
    std::vector<std::vector<int>> coroot_;

    long long pString(int gammaIdx, int deltaIdx) const;  // max k: delta - k gamma in Delta
    void buildConstants();
    // Coefficient and target of [x_a, y_b]: 0 -> zero, 1 -> x_{a-b},
    // 2 -> y_{b-a}, 3 -> coroot of a (a == b).
    struct Mixed {
        int kind = 0;
        int target = -1;
        long long coeff = 0;
    };
    Mixed mixedXY(int aIdx, int bIdx) const;
};

// Deterministic seeded sampling: coefficients uniform in {1,...,1009}.
Elem genericElement(const StructureConstants& sc, const std::vector<int>& rootIdxs,
                    uint64_t seed);
Elem genericElement(const std::vector<Elem>& span, uint64_t seed);

uint64_t splitmix64(uint64_t x);
uint64_t deriveSeed(uint64_t base, uint64_t salt);
uint64_t deriveSeed(uint64_t base, const std::string& tag, uint64_t salt = 0);

// Genericity protocol for rank-like quantities: evaluate for 3 independently
// seeded samples and take the maximum; on disagreement take 4 more samples,
// which must all reproduce the maximum, otherwise hard error.
int genericMax(const std::function<int(uint64_t)>& quantity, uint64_t seed);

// Jordan type of the image of e in the defining representation of a classical
// type: ranks of powers until zero.  Declared here, implemented with the
// matrix realization.
std::vector<int> definingRankSequence(const StructureConstants& sc, const Elem& e);

}  // namespace nilorb
