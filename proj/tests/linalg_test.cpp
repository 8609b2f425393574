#include <random>

#include "doctest.h"
#include "nilorb/linalg.hpp"

using namespace nilorb;

namespace {

// Plain textbook rational elimination, written here so the library's two
// rank routines are checked against a third, independent implementation.
int referenceRank(const IntMat& m) {
    RatMat a(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a.at(r, c) = Rat(m.at(r, c));
    int rank = 0;
    for (int col = 0; col < a.cols && rank < a.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(rank, c), a.at(pivot, c));
        for (int r = rank + 1; r < a.rows; ++r) {
            if (a.at(r, col) == 0) continue;
            Rat f = a.at(r, col) / a.at(rank, col);
            for (int c = col; c < a.cols; ++c) a.at(r, c) -= f * a.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

IntMat randomMatrix(int rows, int cols, int targetRank, std::mt19937_64& rng) {
    // Product of random rows x cols factors through a targetRank-dim space.
    std::uniform_int_distribution<int> d(-4, 4);
    IntMat left(rows, targetRank), right(targetRank, cols);
    for (auto& v : left.a) v = d(rng);
    for (auto& v : right.a) v = d(rng);
    return matMul(left, right);
}

}  // namespace

TEST_CASE("both rank routines agree with a reference elimination on random matrices") {
    std::mt19937_64 rng(20260816);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + int(rng() % 8);
        int cols = 1 + int(rng() % 8);
        int target = int(rng() % (std::min(rows, cols) + 1));
        IntMat m = randomMatrix(rows, cols, target, rng);
        int expect = referenceRank(m);
        CHECK(rankBareiss(m) == expect);
        CHECK(rankRationalReversed(m) == expect);
        CHECK(rankExact(m) == expect);
        CHECK(expect <= target);
    }
}

TEST_CASE("rank sees through large entries that overflow doubles") {
    IntMat m(2, 2);
    Int big = 1;
    for (int i = 0; i < 40; ++i) big *= 10;
    m.at(0, 0) = big;
    m.at(0, 1) = big - 1;
    m.at(1, 0) = big + 1;
    m.at(1, 1) = big;
    // det = big^2 - (big^2 - 1) = 1.
    CHECK(rankBareiss(m) == 2);
    CHECK(rankRationalReversed(m) == 2);
}

TEST_CASE("solve returns an exact solution and rejects inconsistent systems") {
    RatMat a(3, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    a.at(2, 0) = 5;
    a.at(2, 1) = 6;
    std::vector<Rat> b = {Rat(5), Rat(11), Rat(17)};  // x = (1, 2)
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    for (int r = 0; r < a.rows; ++r) {
        Rat acc = 0;
        for (int c = 0; c < a.cols; ++c) acc += a.at(r, c) * (*x)[c];
        CHECK(acc == b[r]);
    }
    b[2] = Rat(18);
    CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("kernel vectors annihilate the matrix and fill the nullity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 2 + int(rng() % 5);
        int cols = 2 + int(rng() % 5);
        int target = int(rng() % (std::min(rows, cols) + 1));
        IntMat mi = randomMatrix(rows, cols, target, rng);
        RatMat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = Rat(mi.at(r, c));
        auto ker = kernelBasis(m);
        CHECK(int(ker.size()) == cols - rankExact(mi));
        for (const auto& v : ker)
            for (int r = 0; r < rows; ++r) {
                Rat acc = 0;
                for (int c = 0; c < cols; ++c) acc += m.at(r, c) * v[c];
                CHECK(acc == 0);
            }
        CHECK(rowBasis(ker).size() == ker.size());
    }
}

TEST_CASE("span intersection has the expected dimension and sits in both spans") {
    auto vec = [](std::initializer_list<int> vals) {
        std::vector<Rat> v;
        for (int x : vals) v.push_back(Rat(x));
        return v;
    };
    std::vector<std::vector<Rat>> a = {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})};
    std::vector<std::vector<Rat>> b = {vec({0, 1, 0, 0}), vec({0, 0, 1, 0})};
    CHECK(intersectionDim(a, b) == 1);
    auto basis = intersectionBasis(a, b);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == vec({0, 1, 0, 0}));

    std::vector<std::vector<Rat>> c = {vec({1, 1, 0, 0}), vec({0, 0, 1, 1})};
    std::vector<std::vector<Rat>> d = {vec({1, 1, 1, 1})};
    CHECK(intersectionDim(c, d) == 1);
    // A full-dimensional overlap.
    CHECK(intersectionDim(a, a) == 2);
}

TEST_CASE("integer conversion clears denominators without changing the rank") {
    RatMat m(2, 3);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 1) = Rat(1, 3);
    m.at(0, 2) = Rat(1, 6);
    m.at(1, 0) = Rat(3);
    m.at(1, 1) = Rat(2);
    m.at(1, 2) = Rat(2);
    IntMat mi = toInt(m);
    CHECK(rankExact(m) == rankExact(mi));
    CHECK(rankExact(mi) == 2);
    // Proportional rows stay proportional after clearing denominators.
    m.at(1, 2) = Rat(1);
    CHECK(rankExact(toInt(m)) == 1);
}
