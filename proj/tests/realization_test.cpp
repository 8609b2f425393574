#include "doctest.h"
#include "nilorb/partitions.hpp"
#include "nilorb/realization.hpp"

using namespace nilorb;

TEST_CASE("defining representations preserve the bracket") {
    for (auto t : {SimpleType(Family::A, 2), SimpleType(Family::B, 2), SimpleType(Family::C, 2),
                   SimpleType(Family::B, 3), SimpleType(Family::C, 3), SimpleType(Family::D, 4),
                   SimpleType(Family::A, 4)}) {
        RootSystem rs(t);
        StructureConstants sc(rs);
        auto real = MatrixRealization::get(sc);
        CHECK_MESSAGE(real->bracketPreserving(), t.name());
        CHECK(real->matrixDim() == t.definingDim());
    }
}

TEST_CASE("realization instances are shared per type") {
    RootSystem rs(SimpleType(Family::B, 3));
    StructureConstants sc(rs);
    auto a = MatrixRealization::get(sc);
    auto b = MatrixRealization::get(sc);
    CHECK(a.get() == b.get());
}

TEST_CASE("highest-root vector has the minimal Jordan type") {
    // Rank one in the linear and symplectic cases, rank two orthogonally.
    for (auto t : {SimpleType(Family::A, 3), SimpleType(Family::C, 3)}) {
        RootSystem rs(t);
        StructureConstants sc(rs);
        auto seq = definingRankSequence(sc, sc.x(rs.highestRootIndex()));
        CHECK_MESSAGE(seq == std::vector<int>{1}, t.name());
    }
    for (auto t : {SimpleType(Family::B, 3), SimpleType(Family::D, 4)}) {
        RootSystem rs(t);
        StructureConstants sc(rs);
        auto seq = definingRankSequence(sc, sc.x(rs.highestRootIndex()));
        CHECK_MESSAGE(seq == std::vector<int>{2}, t.name());
        Partition expect(size_t(t.definingDim()) - 2, 1);
        expect[0] = expect[1] = 2;
        CHECK(partitionFromRankSequence(t.definingDim(), seq) == expect);
    }
}

TEST_CASE("regular nilpotent fills the full rank ladder in sl4") {
    RootSystem rs(SimpleType(Family::A, 3));
    StructureConstants sc(rs);
    Elem e;
    for (int i = 0; i < rs.rank(); ++i) e += sc.x(rs.simpleRootIndex(i));
    auto seq = definingRankSequence(sc, e);
    CHECK(seq == std::vector<int>{3, 2, 1});
}

TEST_CASE("Cartan images are traceless diagonal matrices") {
    RootSystem rs(SimpleType(Family::C, 2));
    StructureConstants sc(rs);
    auto real = MatrixRealization::get(sc);
    for (int i = 0; i < rs.rank(); ++i) {
        RatMat m = real->map(sc.h(i));
        Rat trace(0);
        for (int r = 0; r < real->matrixDim(); ++r) {
            trace += m.at(r, r);
            for (int c = 0; c < real->matrixDim(); ++c)
                if (r != c) CHECK(m.at(r, c) == 0);
        }
        CHECK(trace == 0);
    }
}
