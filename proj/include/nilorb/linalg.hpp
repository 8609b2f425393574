#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace nilorb {

using Int = mpz_class;
using Rat = mpq_class;

// Dense matrices, row-major.  Sizes stay small (at most the adjoint dimension,
// 248 for E8) but entries grow: Bareiss pivots are k-by-k minors.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Rat& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

IntMat toInt(const RatMat& m);  // clears denominators row by row
RatMat matMul(const RatMat& x, const RatMat& y);
IntMat matMul(const IntMat& x, const IntMat& y);

// Rank by fraction-free (Bareiss) elimination over the integers.  This is the
// primary exact rank routine.
int rankBareiss(IntMat m);

// Rank by plain rational Gauss elimination with a reversed column sweep;
// deliberately a different elimination order, used to cross-check rankBareiss.
int rankRationalReversed(const IntMat& m);

int rankExact(const RatMat& m);
int rankExact(const IntMat& m);

// Nullspace basis of m (as column-coefficient vectors), exact.
std::vector<std::vector<Rat>> kernelBasis(const RatMat& m);

// One solution of m x = b if consistent.
std::optional<std::vector<Rat>> solve(const RatMat& m, const std::vector<Rat>& b);

// Row-reduce a list of vectors, dropping dependents.  Returns a basis of the
// span (in reduced row echelon form).
std::vector<std::vector<Rat>> rowBasis(std::vector<std::vector<Rat>> rows);

// Dimension of the intersection of span(a) and span(b), rows of equal width.
int intersectionDim(const std::vector<std::vector<Rat>>& a,
                    const std::vector<std::vector<Rat>>& b);

// Basis of span(a) cap span(b), in reduced row echelon form.
std::vector<std::vector<Rat>> intersectionBasis(const std::vector<std::vector<Rat>>& a,
                                                const std::vector<std::vector<Rat>>& b);

}  // namespace nilorb
