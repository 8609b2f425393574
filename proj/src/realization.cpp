#include "nilorb/realization.hpp"

#include <mutex>
#include <unordered_map>

namespace nilorb {

namespace {

RatMat zero(int n) { return RatMat(n, n); }

bool isZeroMat(const RatMat& m) {
    for (const auto& v : m.a)
        if (v != 0) return false;
    return true;
}

RatMat scaledMat(const RatMat& m, const Rat& f) {
    RatMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i] * f;
    return out;
}

}  // namespace

RatMat MatrixRealization::comm(const RatMat& a, const RatMat& b) {
    RatMat ab = matMul(a, b);
    RatMat ba = matMul(b, a);
    for (size_t i = 0; i < ab.a.size(); ++i) ab.a[i] -= ba.a[i];
    return ab;
}

MatrixRealization::MatrixRealization(const StructureConstants& sc) : sc_(&sc) {
    const RootSystem& rs = sc.rootSystem();
    SimpleType t = rs.type();
    if (!t.isClassical())
        throw InternalError("defining matrix model requested for exceptional type");
    int n = t.rank;
    int N = t.definingDim();
    dimN_ = N;
    img_.assign(sc.dim(), zero(N));

    // Simple generators.  E(r,c) denotes the matrix unit.  The mirrored pairs
    // keep the antidiagonal form invariant; the last simple root is the only
    // one whose shape differs per family.
    auto E = [&](RatMat& m, int r, int c, long v) { m.at(r, c) += v; };
    for (int k = 0; k < n; ++k) {
        int xi = sc.xIndex(rs.simpleRootIndex(k));
        int yi = sc.yIndex(rs.simpleRootIndex(k));
        RatMat x = zero(N), y = zero(N);
        bool mirrored = (t.family != Family::A) && (k + 1 < n);
        if (t.family == Family::A || mirrored) {
            E(x, k, k + 1, 1);
            E(y, k + 1, k, 1);
            if (mirrored) {
                E(x, N - k - 2, N - k - 1, -1);
                E(y, N - k - 1, N - k - 2, -1);
            }
        } else if (t.family == Family::C) {
            E(x, n - 1, n, 1);
            E(y, n, n - 1, 1);
        } else if (t.family == Family::B) {
            E(x, n - 1, n, 1);
            E(x, n, n + 1, -1);
            E(y, n, n - 1, 2);
            E(y, n + 1, n, -2);
        } else {  // D
            E(x, n - 2, n, 1);
            E(x, n - 1, n + 1, -1);
            E(y, n, n - 2, 1);
            E(y, n + 1, n - 1, -1);
        }
        img_[xi] = std::move(x);
        img_[yi] = std::move(y);
        img_[sc.hIndex(k)] = comm(img_[xi], img_[yi]);
    }

    // Higher root vectors by the extraspecial recursion.
    int m = sc.numPositive();
    for (int xiRoot = 0; xiRoot < m; ++xiRoot) {
        if (rs.root(xiRoot).height < 2) continue;
        int beta = -1, eta = -1;
        for (int g = 0; g < xiRoot; ++g) {
            std::vector<int> diff = rs.root(xiRoot).coords;
            for (int i = 0; i < n; ++i) diff[i] -= rs.root(g).coords[i];
            if (auto d = rs.indexOf(diff)) {
                beta = g;
                eta = *d;
                break;
            }
        }
        if (beta < 0) throw InternalError("no extraspecial decomposition");
        Rat inv(1, long(sc.structureN(beta, eta)));
        img_[sc.xIndex(xiRoot)] =
            scaledMat(comm(img_[sc.xIndex(beta)], img_[sc.xIndex(eta)]), inv);
        img_[sc.yIndex(xiRoot)] =
            scaledMat(comm(img_[sc.yIndex(beta)], img_[sc.yIndex(eta)]), -inv);
    }
}

std::shared_ptr<const MatrixRealization> MatrixRealization::get(const StructureConstants& sc) {
    static std::mutex mu;
    static std::unordered_map<std::string, std::shared_ptr<const MatrixRealization>> cache;
    std::string key = sc.rootSystem().type().name();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto made = std::shared_ptr<const MatrixRealization>(new MatrixRealization(sc));
    cache.emplace(key, made);
    return made;
}

RatMat MatrixRealization::map(const Elem& e) const {
    RatMat out = zero(dimN_);
    for (auto& [i, v] : e.c) {
        const RatMat& b = img_.at(i);
        for (size_t k = 0; k < out.a.size(); ++k) out.a[k] += b.a[k] * v;
    }
    return out;
}

bool MatrixRealization::bracketPreserving() const {
    int d = sc_->dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            RatMat lhs = map(sc_->bracketBasis(i, j));
            RatMat rhs = comm(img_[i], img_[j]);
            for (size_t k = 0; k < lhs.a.size(); ++k)
                if (lhs.a[k] != rhs.a[k]) return false;
        }
    return true;
}

std::vector<int> definingRankSequence(const MatrixRealization& real, const Elem& e) {
    RatMat p = real.map(e);
    std::vector<int> ranks;
    RatMat cur = p;
    for (int k = 0; k < real.matrixDim(); ++k) {
        if (isZeroMat(cur)) return ranks;
        ranks.push_back(rankExact(cur));
        cur = matMul(cur, p);
    }
    if (!isZeroMat(cur)) throw InternalError("element is not nilpotent in the defining model");
    return ranks;
}

std::vector<int> definingRankSequence(const StructureConstants& sc, const Elem& e) {
    return definingRankSequence(*MatrixRealization::get(sc), e);
}

}  // namespace nilorb
