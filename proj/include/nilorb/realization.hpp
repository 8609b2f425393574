#pragma once

#include <memory>

#include "nilorb/chevalley.hpp"

namespace nilorb {

// Faithful matrix model of a classical type in its defining representation,
// preserving the antidiagonal symmetric (B/D) or antisymmetric (C) form.
// Simple generators are fixed explicitly; higher root vectors come from the
// same extraspecial recursion that fixes the structure constants, so the map
// is a Lie algebra homomorphism by construction (and checked in tests).
class MatrixRealization {
public:
    // Shared per-type instance; building one is cheap but callers identify
    // many elements against the same realization.
    static std::shared_ptr<const MatrixRealization> get(const StructureConstants& sc);

    int matrixDim() const { return dimN_; }
    const RatMat& image(int basisIdx) const { return img_.at(basisIdx); }
    RatMat map(const Elem& e) const;

    // Commutator [a,b] = ab - ba.
    static RatMat comm(const RatMat& a, const RatMat& b);

    // True when image(bracketBasis(i,j)) == [image(i), image(j)] for all
    // basis pairs.
    bool bracketPreserving() const;

private:
    MatrixRealization(const StructureConstants& sc);

    const StructureConstants* sc_;
    int dimN_ = 0;
    std::vector<RatMat> img_;
};

// Ranks of e^1, e^2, ... in the defining representation, stopping at the
// first zero power (exclusive).  Nilpotency is the caller's concern: a
// non-nilpotent image raises InternalError after matrixDim() powers.
std::vector<int> definingRankSequence(const MatrixRealization& real, const Elem& e);

}  // namespace nilorb
