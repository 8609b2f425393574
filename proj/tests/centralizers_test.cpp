#include "doctest.h"
#include "nilorb/centralizers.hpp"

using namespace nilorb;

namespace {
constexpr uint64_t kSeed = 1;
}

TEST_CASE("sl2 completion satisfies the triple relations") {
    for (auto t : {SimpleType(Family::A, 3), SimpleType(Family::G, 2), SimpleType(Family::C, 3)}) {
        auto ctx = TypeContext::get(t);
        const auto& sc = ctx->sc();
        Elem e = sc.x(ctx->rs().highestRootIndex());
        Sl2Triple tr = sl2Through(sc, e);
        CHECK(tr.e == e);
        CHECK(sc.bracket(tr.h, tr.e) == tr.e.scaled(Rat(2)));
        CHECK(sc.bracket(tr.h, tr.f) == tr.f.scaled(Rat(-2)));
        CHECK(sc.bracket(tr.e, tr.f) == tr.h);
    }
    RootSystem rs(SimpleType(Family::A, 2));
    StructureConstants sc(rs);
    CHECK_THROWS_AS(sl2Through(sc, Elem{}), std::invalid_argument);
    CHECK_THROWS_AS(sl2Through(sc, sc.h(0)), std::invalid_argument);
}

TEST_CASE("centralizer data for the subregular sp4 orbit") {
    auto ctx = TypeContext::get(SimpleType(Family::C, 2));
    OrbitLabel l;
    l.type = ctx->type;
    l.partition = {2, 2};
    auto d = centralizerData(*ctx, ctx->catalog(kSeed).entry(l), kSeed);
    CHECK(d.dimGe == 4);
    CHECK(d.dimGeRed == 1);
    CHECK(d.rkGe == 1);
    CHECK(d.dimGeU == 3);
    CHECK(d.dimBGe == 4);
    CHECK(d.dMin == 2);
}

TEST_CASE("boundary orbits pin the spread of the Borel intersection") {
    for (auto t : {SimpleType(Family::B, 3), SimpleType(Family::D, 4), SimpleType(Family::G, 2)}) {
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(kSeed);
        // Zero orbit sits in every Borel.
        auto z = centralizerData(*ctx, cat.zeroEntry(), kSeed);
        CHECK(z.dMin == 0);
        CHECK(z.rkGe == ctx->rs().rank());
        // Principal: the full nilradical is the only ideal through it.
        auto p = centralizerData(*ctx, cat.principalEntry(), kSeed);
        CHECK(p.dMin == ctx->rs().numPositive());
        CHECK(p.rkGe == 0);
        CHECK(p.dimGe == ctx->rs().rank());
        // Minimal orbit: a single long-root line.
        const OrbitEntry* minimal = nullptr;
        for (const auto& entry : cat.entries())
            if (entry.dim > 0 && (!minimal || entry.dim < minimal->dim)) minimal = &entry;
        auto m = centralizerData(*ctx, *minimal, kSeed);
        CHECK(m.dMin == 1);
    }
}

TEST_CASE("extreme orbits of G2 are exactly zero, the two small ones, and principal") {
    auto ctx = TypeContext::get(SimpleType(Family::G, 2));
    const auto& cat = ctx->catalog(kSeed);
    int nExtreme = 0;
    for (const auto& entry : cat.entries()) {
        bool x = isExtreme(*ctx, entry, kSeed);
        if (x) ++nExtreme;
        if (entry.dim == 10) CHECK_FALSE(x);  // subregular fails independence
    }
    CHECK(nExtreme == 4);
}

TEST_CASE("the dense-orbit sp4 case is rich but not extreme") {
    auto ctx = TypeContext::get(SimpleType(Family::C, 2));
    OrbitLabel l;
    l.type = ctx->type;
    l.partition = {2, 2};
    CHECK_FALSE(isExtreme(*ctx, ctx->catalog(kSeed).entry(l), kSeed));
    l.partition = {2, 1, 1};
    CHECK(isExtreme(*ctx, ctx->catalog(kSeed).entry(l), kSeed));
    l.partition = {4};
    CHECK(isExtreme(*ctx, ctx->catalog(kSeed).entry(l), kSeed));
}

TEST_CASE("intermediate orbit where the highest root is a fundamental weight") {
    auto d4 = TypeContext::get(SimpleType(Family::D, 4));
    OrbitLabel imd = intermediateOrbit(*d4, kSeed);
    CHECK(imd.partition == Partition{3, 2, 2, 1});

    auto g2 = TypeContext::get(SimpleType(Family::G, 2));
    OrbitLabel g2imd = intermediateOrbit(*g2, kSeed);
    CHECK(g2->catalog(kSeed).entry(g2imd).dim == 8);

    // Types whose highest root is not a fundamental weight are rejected.
    auto a3 = TypeContext::get(SimpleType(Family::A, 3));
    CHECK_THROWS_AS(intermediateOrbit(*a3, kSeed), std::invalid_argument);
    auto b2 = TypeContext::get(SimpleType(Family::B, 2));
    CHECK_THROWS_AS(intermediateOrbit(*b2, kSeed), std::invalid_argument);
}

TEST_CASE("reductive centralizer of the minimal so8 triple is a semisimple rank-3 piece") {
    // z(e,h,f) for the minimal orbit of so8 is sl2 x sl2 x sl2, dim 9 rank 3.
    auto ctx = TypeContext::get(SimpleType(Family::D, 4));
    const auto& sc = ctx->sc();
    Elem e = sc.x(ctx->rs().highestRootIndex());
    auto [dim, rank] = reductiveCentralizerOfTriple(sc, sl2Through(sc, e), kSeed);
    CHECK(dim == 9);
    CHECK(rank == 3);
}
