#pragma once

#include <cstdint>
#include <utility>

#include "nilorb/orbits.hpp"

namespace nilorb {

struct Sl2Triple {
    Elem e, h, f;
};

// Exact centralizer data of an orbit, computed from a certified generic
// representative.  All fields are forced by the grading together with the
// reductive rank:
//   dimGe    = dimGeRed + dimGeU          (centralizer of e)
//   dimGeU   = dim g(h;1) + dim g(h;2)    (nilradical of the centralizer)
//   dimBGe   = (dimGeRed + rkGe)/2 + dimGeU
//   dMin     = dim B - dimBGe
struct CentralizerData {
    OrbitLabel orbit;
    int dimGe = 0;
    int dimGeRed = 0;
    int rkGe = 0;
    int dimGeU = 0;
    int dimBGe = 0;
    long long dMin = 0;
};

// Completes a nilpotent e to an sl2 triple (e, h, f) with [h,e] = 2e,
// [e,f] = h, [h,f] = -2f by solving (ad e)^2 u = -2e and then a linear system
// for f.  Throws std::invalid_argument when e is zero or not nilpotent.
Sl2Triple sl2Through(const StructureConstants& sc, const Elem& e);

// (dimension, rank) of z(e) cap z(h) cap z(f), the reductive part of the
// centralizer of e.  The rank is certified by a generic-element protocol.
std::pair<int, int> reductiveCentralizerOfTriple(const StructureConstants& sc,
                                                 const Sl2Triple& t, uint64_t seed);

// Catalog-free form, usable at any rank; `label` is carried through into the
// result.
CentralizerData centralizerDataForGrading(const TypeContext& ctx, const OrbitLabel& label,
                                          const GradingData& grading, uint64_t seed);

CentralizerData centralizerData(const TypeContext& ctx, const OrbitEntry& entry, uint64_t seed);

// Whether the weight-2 root spaces of the orbit's grading meet every Borel
// subalgebra they can, i.e. the weight-2 roots are linearly independent.
// Two further equivalent criteria (dim g(h;2) + rk G_e = rank, and the
// derived group of G(h;0) acting trivially on g(h;2)) are evaluated and must
// concur, otherwise a hard error is raised.
bool isExtreme(const TypeContext& ctx, const OrbitEntry& entry, uint64_t seed);

// The orbit through a principal nilpotent of the Levi on Pi minus the simple
// root not orthogonal to the highest root.  Requires the highest root to be a
// fundamental weight (true for B_n n>=3, D_n, G2, F4, E6, E7, E8); throws
// std::invalid_argument otherwise.  Asserts rk G_e = 1.  Works catalog-free
// for exceptional types, so E7 and E8 are cheap.
OrbitLabel intermediateOrbit(const TypeContext& ctx, uint64_t seed);

}  // namespace nilorb
