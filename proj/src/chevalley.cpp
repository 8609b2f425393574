#include "nilorb/chevalley.hpp"

#include <random>

namespace nilorb {

namespace {

std::vector<int> subtract(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

long long divChecked(long long num, long long den) {
    if (den == 0 || num % den != 0)
        throw InternalError("non-integral structure constant");
    return num / den;
}

}  // namespace

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(&rs) {
    buildConstants();
}

long long StructureConstants::pString(int gammaIdx, int deltaIdx) const {
    // max k with delta - k gamma a root
    const auto& g = rs_->root(gammaIdx).coords;
    std::vector<int> v = rs_->root(deltaIdx).coords;
    long long p = 0;
    for (;;) {
        v = subtract(v, g);
        if (!rs_->isRoot(v)) break;
        ++p;
    }
    return p;
}

void StructureConstants::buildConstants() {
    int m = rs_->numPositive();
    int n = rs_->rank();

    coroot_.resize(m);
    for (int r = 0; r < m; ++r) {
        const Root& g = rs_->root(r);
        std::vector<int> cv(n);
        for (int i = 0; i < n; ++i) {
            long long num = (long long)g.coords[i] * rs_->simpleHalfNorm(i);
            cv[i] = int(divChecked(num, g.halfNorm));
        }
        coroot_[r] = std::move(cv);
    }

    // Induction over xi by height.  The canonical order is by height, so the
    // index order works.  For each xi the extraspecial pair (beta, eta) gets
    // N = +(p+1); the other pairs follow from the Jacobi identity applied to
    // (x_gamma, x_delta, y_beta), which only involves constants of lower
    // height.
    auto setN = [&](int a, int b, long long v) {
        nPlus_[(uint32_t(a) << 16) | uint32_t(b)] = v;
    };
    for (int xi = 0; xi < m; ++xi) {
        if (rs_->root(xi).height < 2) continue;
        std::vector<std::pair<int, int>> pairs;
        int beta = -1, eta = -1;
        for (int g = 0; g < xi; ++g) {
            auto d = rs_->indexOf(subtract(rs_->root(xi).coords, rs_->root(g).coords));
            if (!d) continue;
            if (g < *d) pairs.emplace_back(g, *d);
            if (beta < 0) { beta = g; eta = *d; }
        }
        if (beta < 0 || beta >= eta)
            throw InternalError("no extraspecial decomposition");
        long long nBetaEta = pString(beta, eta) + 1;
        setN(beta, eta, nBetaEta);

        int dXi = rs_->root(xi).halfNorm;
        int dEta = rs_->root(eta).halfNorm;
        for (auto [g, d] : pairs) {
            if (g == beta) continue;
            long long t2 = 0, t3 = 0;
            {
                Mixed mx = mixedXY(d, beta);  // [x_delta, y_beta]
                if (mx.kind == 1)
                    t2 = mx.coeff * structureN(mx.target, g);
                else if (mx.kind == 2) {
                    Mixed inner = mixedXY(g, mx.target);  // [x_gamma, y_{beta-delta}]
                    if (inner.kind != 1) throw InternalError("mixed bracket shape");
                    t2 = mx.coeff * (-inner.coeff);
                }
            }
            {
                Mixed mx = mixedXY(g, beta);  // [x_gamma, y_beta]; term is -[...]
                if (mx.kind == 1)
                    t3 = -mx.coeff * structureN(mx.target, d);
                else if (mx.kind == 2) {
                    Mixed inner = mixedXY(d, mx.target);
                    if (inner.kind != 1) throw InternalError("mixed bracket shape");
                    t3 = -mx.coeff * (-inner.coeff);
                }
            }
            if (t2 == 0 && t3 == 0)
                throw InternalError("vanishing Jacobi data for special pair");
            long long v = divChecked((t2 + t3) * dXi, nBetaEta * dEta);
            if (std::abs(v) != pString(g, d) + 1)
                throw InternalError("structure constant does not match root string");
            setN(g, d, v);
        }
    }
}

long long StructureConstants::structureN(int gammaIdx, int deltaIdx) const {
    int a = gammaIdx, b = deltaIdx;
    long long sign = 1;
    if (a == b) return 0;
    if (a > b) { std::swap(a, b); sign = -1; }
    auto it = nPlus_.find((uint32_t(a) << 16) | uint32_t(b));
    if (it == nPlus_.end()) return 0;
    return sign * it->second;
}

StructureConstants::Mixed StructureConstants::mixedXY(int aIdx, int bIdx) const {
    Mixed out;
    if (aIdx == bIdx) {
        out.kind = 3;
        out.target = aIdx;
        out.coeff = 1;
        return out;
    }
    auto diff = subtract(rs_->root(aIdx).coords, rs_->root(bIdx).coords);
    if (auto cIdx = rs_->indexOf(diff)) {
        long long n = structureN(bIdx, *cIdx);  // b + c = a
        if (n == 0) throw InternalError("missing constant for mixed bracket");
        out.kind = 1;
        out.target = *cIdx;
        out.coeff = divChecked(-n * rs_->root(*cIdx).halfNorm, rs_->root(aIdx).halfNorm);
        return out;
    }
    for (auto& v : diff) v = -v;
    if (auto cIdx = rs_->indexOf(diff)) {
        long long n = structureN(aIdx, *cIdx);  // a + c = b
        if (n == 0) throw InternalError("missing constant for mixed bracket");
        out.kind = 2;
        out.target = *cIdx;
        out.coeff = divChecked(-n * rs_->root(*cIdx).halfNorm, rs_->root(bIdx).halfNorm);
        return out;
    }
    return out;
}

Elem StructureConstants::bracketBasis(int i, int j) const {
    int m = numPositive();
    Elem out;
    if (i == j) return out;
    bool swapped = false;
    if (i > j) { std::swap(i, j); swapped = true; }
    // Now classes are ordered: x (0..m), y (m..2m), h (2m..).
    auto emit = [&](int idx, long long v) {
        if (v != 0) out.add(idx, swapped ? Rat(long(-v)) : Rat(long(v)));
    };
    if (j >= 2 * m) {
        if (i >= 2 * m) return out;  // [h,h] = 0
        // [x_or_y, h] = -[h, x_or_y]
        int hi = j - 2 * m;
        if (i < m) emit(i, -rs_->pairing(i, hi));
        else emit(i, rs_->pairing(i - m, hi));
        return out;
    }
    if (i < m && j < m) {
        auto sum = rs_->root(i).coords;
        for (int k = 0; k < rs_->rank(); ++k) sum[k] += rs_->root(j).coords[k];
        if (auto t = rs_->indexOf(sum)) emit(*t, structureN(i, j));
        return out;
    }
    if (i >= m && j >= m) {
        int a = i - m, b = j - m;
        auto sum = rs_->root(a).coords;
        for (int k = 0; k < rs_->rank(); ++k) sum[k] += rs_->root(b).coords[k];
        if (auto t = rs_->indexOf(sum)) emit(m + *t, -structureN(a, b));
        return out;
    }
    // i is x_a, j is y_b
    int a = i, b = j - m;
    Mixed mx = mixedXY(a, b);
    switch (mx.kind) {
        case 0: break;
        case 1: emit(mx.target, mx.coeff); break;
        case 2: emit(m + mx.target, mx.coeff); break;
        case 3:
            for (int k = 0; k < rs_->rank(); ++k) emit(2 * m + k, coroot_[a][k]);
            break;
    }
    return out;
}

Elem StructureConstants::bracket(const Elem& a, const Elem& b) const {
    Elem out;
    for (auto& [i, va] : a.c)
        for (auto& [j, vb] : b.c) {
            Elem t = bracketBasis(i, j);
            Rat f = va * vb;
            for (auto& [k, vt] : t.c) out.add(k, vt * f);
        }
    return out;
}

Elem StructureConstants::x(int rootIdx) const {
    Elem e;
    e.add(xIndex(rootIdx), 1);
    return e;
}
Elem StructureConstants::y(int rootIdx) const {
    Elem e;
    e.add(yIndex(rootIdx), 1);
    return e;
}
Elem StructureConstants::h(int i) const {
    Elem e;
    e.add(hIndex(i), 1);
    return e;
}

Elem StructureConstants::cartanForLabels(const std::vector<int>& labels) const {
    int n = rs_->rank();
    if (int(labels.size()) != n) throw std::invalid_argument("bad label vector");
    // alpha_j(sum_i c_i h_i) = sum_i c_i <alpha_j, alpha_i^vee> = labels[j]
    RatMat mt(n, n);
    std::vector<Rat> rhs(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) mt.at(j, i) = rs_->cartan()[i][j];
        rhs[j] = labels[j];
    }
    auto sol = solve(mt, rhs);
    if (!sol) throw InternalError("Cartan matrix is singular");
    Elem e;
    for (int i = 0; i < n; ++i) e.add(hIndex(i), (*sol)[i]);
    return e;
}

std::vector<Rat> StructureConstants::coords(const Elem& e) const {
    std::vector<Rat> v(dim(), Rat(0));
    for (auto& [i, val] : e.c) v.at(i) = val;
    return v;
}

RatMat StructureConstants::adMatrix(const Elem& e) const {
    int d = dim();
    RatMat out(d, d);
    for (int j = 0; j < d; ++j) {
        Elem col;
        for (auto& [i, v] : e.c) {
            Elem t = bracketBasis(i, j);
            for (auto& [k, vt] : t.c) col.add(k, vt * v);
        }
        for (auto& [k, v] : col.c) out.at(k, j) = v;
    }
    return out;
}

RatMat StructureConstants::bracketMatrix(const std::vector<Elem>& span, const Elem& e) const {
    RatMat out(dim(), int(span.size()));
    for (size_t j = 0; j < span.size(); ++j) {
        Elem b = bracket(span[j], e);
        for (auto& [k, v] : b.c) out.at(k, int(j)) = v;
    }
    return out;
}

std::vector<Elem> StructureConstants::centralizerIn(const std::vector<Elem>& span,
                                                    const Elem& e) const {
    auto ker = kernelBasis(bracketMatrix(span, e));
    std::vector<Elem> out;
    for (auto& coeffs : ker) {
        Elem z;
        for (size_t j = 0; j < span.size(); ++j)
            if (coeffs[j] != 0) z += span[j].scaled(coeffs[j]);
        if (!z.isZero()) out.push_back(std::move(z));
    }
    return out;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t deriveSeed(uint64_t base, uint64_t salt) {
    return splitmix64(base ^ splitmix64(salt + 0x632be59bd9b4e019ULL));
}

uint64_t deriveSeed(uint64_t base, const std::string& tag, uint64_t salt) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char ch : tag) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return deriveSeed(deriveSeed(base, h), salt);
}

Elem genericElement(const StructureConstants& sc, const std::vector<int>& rootIdxs,
                    uint64_t seed) {
    if (rootIdxs.empty()) throw std::invalid_argument("generic element of empty span");
    std::mt19937_64 rng(seed);
    Elem e;
    for (int r : rootIdxs) e.add(sc.xIndex(r), Rat(1 + long(rng() % 1009)));
    return e;
}

Elem genericElement(const std::vector<Elem>& span, uint64_t seed) {
    if (span.empty()) throw std::invalid_argument("generic element of empty span");
    std::mt19937_64 rng(seed);
    Elem e;
    for (const Elem& b : span) e += b.scaled(Rat(1 + long(rng() % 1009)));
    return e;
}

int genericMax(const std::function<int(uint64_t)>& quantity, uint64_t seed) {
    int r0 = quantity(deriveSeed(seed, 0));
    int r1 = quantity(deriveSeed(seed, 1));
    int r2 = quantity(deriveSeed(seed, 2));
    if (r0 == r1 && r1 == r2) return r0;
    int best = std::max({r0, r1, r2});
    int extra[4];
    for (uint64_t k = 3; k < 7; ++k) {
        extra[k - 3] = quantity(deriveSeed(seed, k));
        best = std::max(best, extra[k - 3]);
    }
    for (int r : extra)
        if (r != best)
            throw InternalError("genericity protocol: persistent sample disagreement");
    return best;
}

}  // namespace nilorb
