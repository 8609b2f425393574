#include "nilorb/centralizers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilorb {

namespace {

Elem elemFromCoords(const std::vector<Rat>& v) {
    Elem e;
    for (size_t i = 0; i < v.size(); ++i) e.add(int(i), v[i]);
    return e;
}

std::vector<int> rootsOfWeight(const RootSystem& rs, const WeightedDynkinDiagram& wdd, int w) {
    std::vector<int> out;
    for (int r = 0; r < rs.numPositive(); ++r)
        if (rs.cocharacterWeight(r, wdd) == w) out.push_back(r);
    return out;
}

std::vector<Elem> zeroWeightSpan(const StructureConstants& sc, const WeightedDynkinDiagram& wdd) {
    const auto& rs = sc.rootSystem();
    std::vector<Elem> span;
    for (int r = 0; r < rs.numPositive(); ++r)
        if (rs.cocharacterWeight(r, wdd) == 0) {
            span.push_back(sc.x(r));
            span.push_back(sc.y(r));
        }
    for (int i = 0; i < rs.rank(); ++i) span.push_back(sc.h(i));
    return span;
}

const std::map<std::string, std::string>& leviNameTable() {
    static const std::map<std::string, std::string> t = {
        {"G2", "~A1"}, {"F4", "C3"}, {"E6", "A5"}, {"E7", "D6"}, {"E8", "E7"}};
    return t;
}

}  // namespace

Sl2Triple sl2Through(const StructureConstants& sc, const Elem& e) {
    if (e.isZero()) throw std::invalid_argument("zero element has no standard triple");
    int d = sc.dim();
    RatMat A = sc.adMatrix(e);
    RatMat A2 = matMul(A, A);
    auto ec = sc.coords(e);
    std::vector<Rat> rhs(ec.size());
    for (size_t i = 0; i < ec.size(); ++i) rhs[i] = Rat(-2) * ec[i];
    auto u = solve(A2, rhs);
    if (!u) throw std::invalid_argument("element is not nilpotent");
    Elem h = sc.bracket(e, elemFromCoords(*u));

    // f solves [e,f] = h together with [h,f] = -2f.
    RatMat H = sc.adMatrix(h);
    RatMat st(2 * d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            st.at(r, c) = A.at(r, c);
            st.at(d + r, c) = H.at(r, c) + (r == c ? Rat(2) : Rat(0));
        }
    auto hc = sc.coords(h);
    std::vector<Rat> rhs2(2 * d, Rat(0));
    for (int r = 0; r < d; ++r) rhs2[r] = hc[r];
    auto fz = solve(st, rhs2);
    if (!fz) throw std::invalid_argument("element is not nilpotent");
    Elem f = elemFromCoords(*fz);

    if (!(sc.bracket(h, e) == e.scaled(2))) throw InternalError("triple relation [h,e] = 2e failed");
    if (!(sc.bracket(e, f) == h)) throw InternalError("triple relation [e,f] = h failed");
    if (!(sc.bracket(h, f) == f.scaled(-2))) throw InternalError("triple relation [h,f] = -2f failed");
    return Sl2Triple{e, h, f};
}

std::pair<int, int> reductiveCentralizerOfTriple(const StructureConstants& sc, const Sl2Triple& t,
                                                 uint64_t seed) {
    std::vector<Elem> full;
    for (int i = 0; i < sc.dim(); ++i) {
        Elem b;
        b.add(i, Rat(1));
        full.push_back(std::move(b));
    }
    auto s = sc.centralizerIn(full, t.e);
    s = sc.centralizerIn(s, t.h);
    s = sc.centralizerIn(s, t.f);
    int dim = int(s.size());
    if (dim == 0) return {0, 0};
    // Rank of the reductive subalgebra s: corank of ad y on s for generic y.
    int corank = genericMax(
        [&](uint64_t sd) {
            Elem y = genericElement(s, sd);
            return rankExact(sc.bracketMatrix(s, y));
        },
        deriveSeed(seed, "triple-rank"));
    return {dim, dim - corank};
}

CentralizerData centralizerDataForGrading(const TypeContext& ctx, const OrbitLabel& label,
                                          const GradingData& grading, uint64_t seed) {
    const auto& sc = ctx.sc();
    const auto& rs = ctx.rs();
    CentralizerData d;
    d.orbit = label;
    int g1 = grading.dimAtDegree(1), g2 = grading.dimAtDegree(2);
    d.dimGeU = g1 + g2;
    d.dimGe = rs.algebraDim() - int(grading.orbitDim);

    Elem e = orbitRepresentative(ctx, grading, deriveSeed(seed, "cd"));
    auto g0span = zeroWeightSpan(sc, grading.wdd);
    auto s = sc.centralizerIn(g0span, e);
    d.dimGeRed = int(s.size());
    if (d.dimGe != d.dimGeRed + d.dimGeU)
        throw InternalError("centralizer of " + label.text() + " has inconsistent dimensions");
    if (s.empty()) {
        d.rkGe = 0;
    } else {
        int corank = genericMax(
            [&](uint64_t sd) {
                Elem y = genericElement(s, sd);
                return rankExact(sc.bracketMatrix(s, y));
            },
            deriveSeed(seed, "cd-rank"));
        d.rkGe = d.dimGeRed - corank;
    }
    if ((d.dimGeRed + d.rkGe) % 2 != 0)
        throw InternalError("reductive part with odd dimension-plus-rank");
    d.dimBGe = (d.dimGeRed + d.rkGe) / 2 + d.dimGeU;
    d.dMin = rs.dimBorel() - d.dimBGe;
    if (g2 + d.rkGe < rs.rank())
        throw InternalError("degree-2 piece plus reductive rank fell below the rank");
    return d;
}

CentralizerData centralizerData(const TypeContext& ctx, const OrbitEntry& entry, uint64_t seed) {
    return centralizerDataForGrading(ctx, entry.label, entry.grading, seed);
}

bool isExtreme(const TypeContext& ctx, const OrbitEntry& entry, uint64_t seed) {
    const auto& rs = ctx.rs();
    auto xs = rootsOfWeight(rs, entry.grading.wdd, 2);

    // Route 1: the degree-2 roots span their count.
    bool indep = true;
    if (!xs.empty()) {
        IntMat m(int(xs.size()), rs.rank());
        for (size_t r = 0; r < xs.size(); ++r)
            for (int c = 0; c < rs.rank(); ++c) m.at(int(r), c) = rs.root(xs[r]).coords[c];
        indep = rankExact(m) == int(xs.size());
    }

    // Route 2: dim g(h;2) + rk G_e = rank.
    auto cd = centralizerDataForGrading(ctx, entry.label, entry.grading, deriveSeed(seed, "ext"));
    bool viaRank = entry.grading.dimAtDegree(2) + cd.rkGe == rs.rank();

    // Route 3: the semisimple part of the degree-0 subalgebra acts trivially
    // on the degree-2 piece, i.e. gamma +- alpha is never a root for
    // weight-0 alpha and weight-2 gamma.
    bool trivial = true;
    auto zeros = rootsOfWeight(rs, entry.grading.wdd, 0);
    for (int a : zeros)
        for (int g : xs) {
            std::vector<int> sum = rs.root(g).coords, diff = rs.root(g).coords;
            for (int i = 0; i < rs.rank(); ++i) {
                sum[i] += rs.root(a).coords[i];
                diff[i] -= rs.root(a).coords[i];
            }
            if (rs.isRoot(sum) || rs.isRoot(diff)) trivial = false;
        }

    if (indep != viaRank || indep != trivial)
        throw InternalError("extreme criteria disagree at " + entry.label.text());
    return indep;
}

OrbitLabel intermediateOrbit(const TypeContext& ctx, uint64_t seed) {
    const auto& rs = ctx.rs();
    const auto& sc = ctx.sc();
    int hi = rs.highestRootIndex();
    int beta = -1, cnt = 0;
    for (int i = 0; i < rs.rank(); ++i)
        if (rs.pairing(hi, i) != 0) {
            ++cnt;
            beta = i;
        }
    if (cnt != 1 || rs.pairing(hi, beta) != 1)
        throw std::invalid_argument("highest root of " + ctx.type.name() +
                                    " is not a fundamental weight");
    auto wdd = wddOfLeviPrincipal(rs, beta);
    auto grading = gradingData(rs, wdd);

    OrbitLabel lab;
    if (ctx.type.isClassical()) {
        Elem e;
        for (int i = 0; i < rs.rank(); ++i)
            if (i != beta) e += sc.x(rs.simpleRootIndex(i));
        lab = identifyOrbit(ctx, e, deriveSeed(seed, "imd"));
        if (ctx.catalog(seed).entry(lab).grading.wdd != wdd)
            throw InternalError("intermediate orbit diagram mismatch");
    } else {
        lab = OrbitLabel{ctx.type, {}, VeryEvenFamily::None, wdd, ""};
        auto it = leviNameTable().find(ctx.type.name());
        if (it != leviNameTable().end()) lab.name = it->second;
    }

    auto cd = centralizerDataForGrading(ctx, lab, grading, deriveSeed(seed, "imd-cd"));
    if (cd.rkGe != 1) throw InternalError("intermediate orbit with reductive rank != 1");
    return lab;
}

}  // namespace nilorb
