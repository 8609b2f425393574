#include "nilorb/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nilorb/centralizers.hpp"
#include "nilorb/ideals.hpp"
#include "nilorb/realization.hpp"

namespace nilorb {

namespace {

struct Checker {
    SuiteResult res;

    explicit Checker(std::string name) { res.name = std::move(name); }

    void check(bool ok, const std::string& what) { res.checks.push_back({ok, what}); }
};

std::string num(long long v) { return std::to_string(v); }

OrbitLabel classicalLabel(SimpleType t, Partition p,
                          VeryEvenFamily fam = VeryEvenFamily::None) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    return OrbitLabel{t, std::move(p), fam, {}, ""};
}

OrbitLabel diagramLabel(SimpleType t, WeightedDynkinDiagram wdd) {
    return OrbitLabel{t, {}, VeryEvenFamily::None, std::move(wdd), ""};
}

std::string labelSetText(const std::set<OrbitLabel>& s) {
    std::string out;
    for (const auto& l : s) {
        if (!out.empty()) out += ", ";
        out += l.text();
    }
    return out.empty() ? "(none)" : out;
}

// Every type a suite iterates over, honoring maxRank and the E6 opt-in.
std::vector<SimpleType> suiteTypes(const SuiteOptions& opt) {
    auto types = defaultTypes(opt.maxRank);
    if (opt.allowLarge) types.push_back(SimpleType(Family::E, 6));
    return types;
}

// ---------------------------------------------------------------- chevalley

void jacobiFull(Checker& ck, const StructureConstants& sc) {
    int d = sc.dim();
    std::vector<Elem> basis(d);
    for (int i = 0; i < d; ++i) basis[i].add(i, 1);
    long long bad = 0;
    for (int i = 0; i < d && bad == 0; ++i)
        for (int j = 0; j < d && bad == 0; ++j)
            for (int k = 0; k < d; ++k) {
                Elem s = sc.bracket(basis[i], sc.bracketBasis(j, k));
                s += sc.bracket(basis[j], sc.bracket(basis[k], basis[i]));
                s += sc.bracket(basis[k], sc.bracketBasis(i, j));
                if (!s.isZero()) {
                    ++bad;
                    break;
                }
            }
    ck.check(bad == 0, sc.rootSystem().type().name() + ": Jacobi identity on all " +
                           num(1LL * d * d * d) + " basis triples");
}

void jacobiSampled(Checker& ck, const StructureConstants& sc, uint64_t seed, int count) {
    int d = sc.dim();
    std::vector<Elem> basis(d);
    for (int i = 0; i < d; ++i) basis[i].add(i, 1);
    uint64_t state = deriveSeed(seed, "jacobi-" + sc.rootSystem().type().name());
    long long bad = 0;
    for (int s = 0; s < count; ++s) {
        state = splitmix64(state);
        int i = int(state % d);
        state = splitmix64(state);
        int j = int(state % d);
        state = splitmix64(state);
        int k = int(state % d);
        Elem sum = sc.bracket(basis[i], sc.bracketBasis(j, k));
        sum += sc.bracket(basis[j], sc.bracket(basis[k], basis[i]));
        sum += sc.bracket(basis[k], sc.bracketBasis(i, j));
        if (!sum.isZero()) ++bad;
    }
    ck.check(bad == 0, sc.rootSystem().type().name() + ": Jacobi identity on " + num(count) +
                           " sampled basis triples");
}

void suiteChevalley(Checker& ck, const SuiteOptions& opt) {
    for (SimpleType t : defaultTypes(opt.maxRank)) {
        auto ctx = TypeContext::get(t);
        jacobiFull(ck, ctx->sc());
        if (t.isClassical())
            ck.check(ctx->realization()->bracketPreserving(),
                     t.name() + ": defining matrix realization preserves brackets");
    }
    const std::pair<SimpleType, int> ambient[] = {
        {SimpleType(Family::G, 2), 14},  {SimpleType(Family::F, 4), 52},
        {SimpleType(Family::E, 6), 78},  {SimpleType(Family::E, 7), 133},
        {SimpleType(Family::E, 8), 248},
    };
    for (auto& [t, dim] : ambient) {
        auto ctx = TypeContext::get(t);
        ck.check(ctx->rs().algebraDim() == dim,
                 t.name() + ": ambient dimension " + num(ctx->rs().algebraDim()) +
                     " (expected " + num(dim) + ")");
    }
    for (int r = 6; r <= 8; ++r) {
        auto ctx = TypeContext::get(SimpleType(Family::E, r));
        jacobiSampled(ck, ctx->sc(), opt.seed, 10000);
    }
}

// ---------------------------------------------------------------------- wdd

void suiteWdd(Checker& ck, const SuiteOptions& opt) {
    for (SimpleType t : defaultTypes(opt.maxRank)) {
        auto ctx = TypeContext::get(t);
        auto scanned = enumerateWdds(ctx->sc(), opt.seed);
        std::set<WeightedDynkinDiagram> got(scanned.begin(), scanned.end());
        ck.check(got.size() == scanned.size(), t.name() + ": scanned diagrams are distinct");
        if (t.isClassical()) {
            std::set<WeightedDynkinDiagram> expect;
            for (const auto& p : nilpotentPartitions(t)) {
                if (veryEven(t, p)) {
                    expect.insert(wddFromPartition(t, p, VeryEvenFamily::I));
                    expect.insert(wddFromPartition(t, p, VeryEvenFamily::II));
                } else {
                    expect.insert(wddFromPartition(t, p));
                }
            }
            ck.check(got == expect, t.name() + ": diagram scan matches the partition recipe (" +
                                        num(got.size()) + " diagrams)");
        } else {
            int expect = t.family == Family::G ? 5 : 16;
            ck.check(int(got.size()) == expect, t.name() + ": diagram scan finds " +
                                                    num(got.size()) + " orbits (expected " +
                                                    num(expect) + ")");
        }
        ck.check(ctx->catalog(opt.seed).entries().size() == got.size(),
                 t.name() + ": catalog has one entry per diagram");
    }
    if (opt.allowLarge) {
        auto ctx = TypeContext::get(SimpleType(Family::E, 6));
        auto scanned = enumerateWdds(ctx->sc(), opt.seed);
        ck.check(scanned.size() == 21, "E6: diagram scan finds " + num(scanned.size()) +
                                           " orbits (expected 21)");
    }

    // Ideal counts: recursive enumeration, the product formula, and (where
    // the subset space is small enough) a raw subset scan must agree.
    const std::map<std::string, uint64_t> frozen = {
        {"A1", 2},  {"A2", 5},  {"A3", 14}, {"A4", 42}, {"A5", 132},
        {"B2", 6},  {"B3", 20}, {"B4", 70}, {"C2", 6},  {"C3", 20},
        {"C4", 70}, {"D4", 50}, {"D5", 182}, {"G2", 8}, {"F4", 105},
    };
    for (SimpleType t : defaultTypes(opt.maxRank)) {
        const RootSystem& rs = TypeContext::get(t)->rs();
        uint64_t enumerated = enumerateIdeals(rs).size();
        uint64_t formula = catalanIdealCount(rs);
        bool ok = enumerated == formula;
        std::string what = t.name() + ": " + num(enumerated) + " ideals, product formula " +
                           num(formula);
        if (rs.numPositive() <= 24) {
            uint64_t brute = bruteForceIdealCount(rs);
            ok = ok && brute == enumerated;
            what += ", subset scan " + num(brute);
        }
        auto it = frozen.find(t.name());
        if (it != frozen.end()) {
            ok = ok && enumerated == it->second;
            what += ", expected " + num(it->second);
        }
        ck.check(ok, what);
    }
}

// --------------------------------------------------------------- richardson

RootSet rootSetOf(const std::vector<int>& idxs) {
    RootSet s;
    for (int i : idxs) s.set(i);
    return s;
}

void suiteRichardson(Checker& ck, const SuiteOptions& opt) {
    for (SimpleType t : suiteTypes(opt)) {
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        const RootSystem& rs = ctx->rs();

        std::vector<int> simpleIdx(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) simpleIdx[i] = rs.simpleRootIndex(i);

        bool boundOk = true, equalityOk = true, halfOk = true, polInClassOk = true;
        bool evenOk = true, rigidOk = true;
        for (size_t idx = 0; idx < rep.classes.size(); ++idx) {
            const IdealClass& cls = rep.classes[idx];
            const OrbitEntry& ent = cat.entries()[idx];
            long long half = ent.dim / 2;
            auto pols = polarisations(*ctx, ent.label, opt.seed);
            bool richardson = !pols.empty();

            if (cls.dMax > half) boundOk = false;
            if ((cls.dMax == half) != richardson) equalityOk = false;

            std::vector<RootSet> polSets;
            polSets.reserve(pols.size());
            for (const auto& S : pols) polSets.push_back(rootSetOf(rs.nilradicalRoots(S)));
            for (int i : cls.idealIdx) {
                const auto& ideal = rep.ideals[i];
                if (ideal.dim != half) continue;
                bool found = false;
                for (const auto& s : polSets)
                    if (s == ideal.members) {
                        found = true;
                        break;
                    }
                if (!found) halfOk = false;
            }
            // ... and conversely every polarisation nilradical is a class
            // member of dimension dim O / 2.
            for (const auto& s : polSets) {
                bool found = false;
                for (int i : cls.idealIdx)
                    if (rep.ideals[i].members == s) {
                        found = true;
                        break;
                    }
                if (!found) polInClassOk = false;
            }

            if (ent.grading.isEven) {
                // Even orbit: its grading's parabolic is a polarisation and
                // the weight >= 2 part is exactly that nilradical.
                SimpleSubset S;
                for (size_t i = 0; i < ent.grading.wdd.size(); ++i)
                    if (ent.grading.wdd[i] > 0) S.push_back(int(i));
                if (!S.empty()) {
                    if (ctx->richardson(S, opt.seed) != ent.label) evenOk = false;
                    if (rootSetOf(rs.nilradicalRoots(S)) != rootSetOf(ent.grading.dynkinRoots))
                        evenOk = false;
                }
            }

            bool anySimple = false;
            for (int i : cls.idealIdx)
                for (int s : simpleIdx)
                    if (rep.ideals[i].members.test(s)) anySimple = true;
            if (ctx->isRigid(ent.label, opt.seed) == anySimple) rigidOk = false;
        }
        ck.check(boundOk, t.name() + ": d_max <= dim O / 2 for every orbit");
        ck.check(equalityOk, t.name() + ": equality holds exactly at the Richardson orbits");
        ck.check(halfOk,
                 t.name() + ": every class element of dimension dim O / 2 is a polarisation nilradical");
        ck.check(polInClassOk,
                 t.name() + ": every polarisation nilradical shows up in its orbit's class");
        ck.check(evenOk, t.name() + ": even orbits are Richardson from their diagram support");
        ck.check(rigidOk, t.name() + ": rigid orbits are exactly the classes confined to [u,u]");
    }

    // Square-sum formula for the dual partition in sl_n, n <= 6.
    for (int n = 2; n <= std::min(6, opt.maxRank + 1); ++n) {
        SimpleType t(Family::A, n - 1);
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        bool ok = true;
        for (size_t idx = 0; idx < rep.classes.size(); ++idx) {
            Partition dual = dualPartition(cat.entries()[idx].label.partition);
            long long sq = 0;
            for (int d : dual) sq += 1LL * d * d;
            if (rep.classes[idx].dMax != (1LL * n * n - sq) / 2) ok = false;
        }
        ck.check(ok, "sl" + num(n) + ": d_max matches the dual-partition square-sum formula");
    }

    // sl6, (2,2,1,1): dimension 16, d_max 8, and a maximal class element of
    // dimension 5.
    if (opt.maxRank >= 5) {
        SimpleType t(Family::A, 5);
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        int idx = cat.entryIndex(classicalLabel(t, {2, 2, 1, 1}));
        bool ok = idx >= 0;
        if (ok) {
            const auto& cls = rep.classes[idx];
            ok = cat.entries()[idx].dim == 16 && cls.dMax == 8;
            bool maximal5 = false;
            for (int i : cls.maximal)
                if (rep.ideals[i].dim == 5) maximal5 = true;
            ok = ok && maximal5;
        }
        ck.check(ok, "sl6 (2,2,1,1): dim 16, d_max 8, and a maximal class element of dim 5");
    }
}

// ------------------------------------------------------------------ extreme

void suiteExtreme(Checker& ck, const SuiteOptions& opt) {
    for (SimpleType t : suiteTypes(opt)) {
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        std::set<OrbitLabel> got;
        for (const auto& ent : cat.entries())
            if (isExtreme(*ctx, ent, opt.seed)) got.insert(ent.label);
        auto ref = extremeReferenceList(*ctx, opt.seed);
        std::set<OrbitLabel> expect(ref.begin(), ref.end());
        ck.check(got.count(cat.zeroEntry().label) == 1, t.name() + ": the zero orbit is extreme");
        ck.check(got == expect,
                 t.name() + ": extreme orbits are exactly {" + labelSetText(expect) + "}");
    }

    // Intermediate-orbit grading rows; the E7/E8 rows need no catalog, so
    // they are part of the default run.
    struct Row {
        SimpleType t;
        long long dim;
        int g1, g2;
        long long dDy;
        const char* name;
    };
    const Row rows[] = {
        {SimpleType(Family::G, 2), 8, 2, 1, 3, "~A1"},
        {SimpleType(Family::F, 4), 42, 4, 3, 19, "C3"},
        {SimpleType(Family::E, 6), 64, 6, 5, 29, "A5"},
        {SimpleType(Family::E, 7), 118, 6, 6, 56, "D6"},
        {SimpleType(Family::E, 8), 232, 6, 7, 113, "E7"},
    };
    for (const Row& row : rows) {
        if (row.t.family != Family::E && row.t.rank > opt.maxRank) continue;
        auto ctx = TypeContext::get(row.t);
        OrbitLabel imd = intermediateOrbit(*ctx, opt.seed);
        GradingData g = gradingData(ctx->rs(), imd.wdd);
        CentralizerData cd = centralizerDataForGrading(*ctx, imd, g, opt.seed);
        bool ok = g.orbitDim == row.dim && g.dimAtDegree(1) == row.g1 &&
                  g.dimAtDegree(2) == row.g2 && g.dDy == row.dDy && cd.rkGe == 1 &&
                  imd.name == row.name;
        ck.check(ok, row.t.name() + " intermediate orbit " + imd.name + ": dim " +
                         num(g.orbitDim) + ", g(h;1) " + num(g.dimAtDegree(1)) + ", g(h;2) " +
                         num(g.dimAtDegree(2)) + ", rk G_e " + num(cd.rkGe) + ", d_Dy " +
                         num(g.dDy));
    }

    // Classical types with a fundamental highest root: the intermediate
    // orbit matches its closed-form partition.
    for (SimpleType t : defaultTypes(opt.maxRank)) {
        int n = t.rank;
        Partition expect;
        if (t.family == Family::B && n >= 3)
            expect = {2 * n - 3, 2, 2};
        else if (t.family == Family::D)
            expect = {2 * n - 5, 2, 2, 1};
        else
            continue;
        OrbitLabel imd = intermediateOrbit(*TypeContext::get(t), opt.seed);
        ck.check(imd == classicalLabel(t, expect),
                 t.name() + ": intermediate orbit is " + imd.text());
    }
}

// ------------------------------------------------------------------- lonely

void suiteLonely(Checker& ck, const SuiteOptions& opt) {
    for (SimpleType t : suiteTypes(opt)) {
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        // The zero orbit's class is the singleton {0}, a trivial loner the
        // classification lists exclude; comparisons skip it.
        std::set<OrbitLabel> got;
        for (size_t idx = 0; idx < rep.classes.size(); ++idx) {
            if (cat.entries()[idx].label == cat.zeroEntry().label) continue;
            if (isLonely(rep, rep.classes[idx])) got.insert(rep.classes[idx].orbit);
        }
        auto ref = lonelyReferenceList(*ctx, opt.seed);
        std::set<OrbitLabel> expect(ref.begin(), ref.end());
        ck.check(got == expect,
                 t.name() + ": lonely orbits are exactly {" + labelSetText(expect) + "}");
    }

    // Dynkin-ideal dimensions behind the symplectic classification:
    // d_Dy(O_m(n)) = (m-1)(2n-m+1)+1, with diagram (2...2 1 0...0).
    for (SimpleType t : defaultTypes(opt.maxRank)) {
        if (t.family != Family::C) continue;
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        int n = t.rank;
        bool ok = true;
        for (int m = 1; m <= n; ++m) {
            Partition p(1, 2 * m);
            p.resize(1 + 2 * n - 2 * m, 1);
            const OrbitEntry& ent = cat.entry(classicalLabel(t, p));
            if (ent.grading.dDy != 1LL * (m - 1) * (2 * n - m + 1) + 1) ok = false;
            WeightedDynkinDiagram expect(n, 0);
            for (int i = 0; i < m - 1; ++i) expect[i] = 2;
            if (m < n)
                expect[m - 1] = 1;
            else
                expect[n - 1] = 2;
            if (ent.grading.wdd != expect) ok = false;
        }
        ck.check(ok, t.name() + ": d_Dy(O_m) = (m-1)(2n-m+1)+1 with diagram (2..2,1,0..0)");
    }

    // d_Dy of the even-orthogonal intermediate orbit: n^2 - n - 7.
    for (SimpleType t : defaultTypes(opt.maxRank)) {
        if (t.family != Family::D) continue;
        auto ctx = TypeContext::get(t);
        int n = t.rank;
        OrbitLabel imd = intermediateOrbit(*ctx, opt.seed);
        const OrbitEntry& ent = ctx->catalog(opt.seed).entry(imd);
        ck.check(ent.grading.dDy == 1LL * n * n - n - 7,
                 t.name() + ": d_Dy of the intermediate orbit is " + num(ent.grading.dDy) +
                     " (n^2-n-7)");
    }

    // so10: [u,u] has dimension 15, d_Dy(O_imd) = 13, and no ideal inside
    // [u,u] of dimension 13..15 is associated with O_imd.
    if (opt.maxRank >= 5) {
        SimpleType t(Family::D, 5);
        auto ctx = TypeContext::get(t);
        const RootSystem& rs = ctx->rs();
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        OrbitLabel imd = intermediateOrbit(*ctx, opt.seed);
        const OrbitEntry& ent = ctx->catalog(opt.seed).entry(imd);
        AdNilpotentIdeal uu = commutatorIdeal(rs);
        bool ok = uu.dim == 15 && ent.grading.dDy == 13;
        for (size_t idx = 0; idx < rep.classes.size() && ok; ++idx) {
            if (rep.classes[idx].orbit != imd) continue;
            ok = rep.classes[idx].idealIdx.size() == 1;
        }
        for (const auto& cls : rep.classes) {
            if (cls.orbit != imd) continue;
            for (int i : cls.idealIdx) {
                const auto& ideal = rep.ideals[i];
                bool insideUu = (ideal.members & ~uu.members).none();
                if (insideUu && ideal.dim >= 13 && ideal.dim <= 15) ok = false;
            }
        }
        ck.check(ok, "D5: dim [u,u] = 15, d_Dy(O_imd) = 13, and the class of O_imd avoids [u,u]");
    }
}

// --------------------------------------------------------------------- dmin

void suiteDmin(Checker& ck, const SuiteOptions& opt) {
    for (SimpleType t : suiteTypes(opt)) {
        auto ctx = TypeContext::get(t);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        auto verdicts = checkDminFormula(*ctx, rep, opt.seed);
        bool ok = true;
        for (const auto& v : verdicts)
            if (!v.ok) ok = false;
        ck.check(ok, t.name() + ": d_min = dim B - dim B(G_e) for all " +
                         num((long long)(verdicts.size())) + " orbits");

        bool pinched = true;
        for (const auto& cls : rep.classes)
            if (cls.dMinObserved == cls.dMax && !isLonely(rep, cls)) pinched = false;
        ck.check(pinched, t.name() + ": every orbit with d_min = d_max is lonely");
    }
}

// ---------------------------------------------------------------- anomalies

void suiteAnomalies(Checker& ck, const SuiteOptions& opt) {
    if (opt.maxRank >= 4) {
        SimpleType t(Family::D, 4);
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        OrbitLabel imd = classicalLabel(t, {3, 2, 2, 1});
        int imdIdx = cat.entryIndex(imd);
        bool ok = imdIdx >= 0 && cat.entries()[imdIdx].dim == 16 &&
                  rep.classes[imdIdx].dMax == 5;
        ck.check(ok, "so8: O_(3,2,2,1) has dim 16 and d_max 5");

        std::set<OrbitLabel> boundary;
        for (auto [lo, hi] : cat.closureCovers())
            if (hi == imdIdx) boundary.insert(cat.entries()[lo].label);
        std::set<OrbitLabel> expect = {
            classicalLabel(t, {3, 1, 1, 1, 1, 1}),
            classicalLabel(t, {2, 2, 2, 2}, VeryEvenFamily::I),
            classicalLabel(t, {2, 2, 2, 2}, VeryEvenFamily::II),
        };
        ck.check(boundary == expect, "so8: the boundary of O_(3,2,2,1) has three components: " +
                                         labelSetText(boundary));

        bool rows = true;
        for (const auto& l : expect) {
            int idx = cat.entryIndex(l);
            if (idx < 0) {
                rows = false;
                continue;
            }
            const auto& ent = cat.entries()[idx];
            if (ent.dim != 12 || !ent.grading.isEven || rep.classes[idx].dMax != 6) rows = false;
            if (!closureLeq(ent.label, imd)) rows = false;
        }
        ck.check(rows, "so8: each boundary component is even of dim 12 with d_max 6 (> 5 above)");

        int a = cat.entryIndex(classicalLabel(t, {2, 2, 2, 2}, VeryEvenFamily::I));
        int b = cat.entryIndex(classicalLabel(t, {2, 2, 2, 2}, VeryEvenFamily::II));
        bool pair = a >= 0 && b >= 0 && a != b;
        if (pair) {
            const auto& ea = cat.entries()[a];
            const auto& eb = cat.entries()[b];
            pair = ea.grading.wdd != eb.grading.wdd &&
                   ea.veryEvenParity != eb.veryEvenParity && ea.dim == eb.dim &&
                   rep.classes[a].dMax == rep.classes[b].dMax &&
                   rep.classes[a].dMinObserved == rep.classes[b].dMinObserved &&
                   rep.classes[a].idealIdx.size() == rep.classes[b].idealIdx.size();
        }
        ck.check(pair, "so8: the two (2,2,2,2) orbits are distinct with identical statistics");
    }

    if (opt.maxRank >= 5) {
        SimpleType t(Family::D, 5);
        auto ctx = TypeContext::get(t);
        const auto& cat = ctx->catalog(opt.seed);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        OrbitLabel imd = classicalLabel(t, {5, 2, 2, 1});
        int imdIdx = cat.entryIndex(imd);

        std::set<OrbitLabel> boundary;
        for (auto [lo, hi] : cat.closureCovers())
            if (hi == imdIdx) boundary.insert(cat.entries()[lo].label);
        std::set<OrbitLabel> expect = {
            classicalLabel(t, {5, 1, 1, 1, 1, 1}),
            classicalLabel(t, {3, 3, 3, 1}),
        };
        ck.check(imdIdx >= 0 && boundary == expect,
                 "so10: the boundary of O_(5,2,2,1) has components (5,1^5) and (3,3,3,1)");

        int codim4 = cat.entryIndex(classicalLabel(t, {5, 1, 1, 1, 1, 1}));
        int codim2 = cat.entryIndex(classicalLabel(t, {3, 3, 3, 1}));
        bool ok = imdIdx >= 0 && codim4 >= 0 && codim2 >= 0;
        if (ok) {
            long long dimImd = cat.entries()[imdIdx].dim;
            ok = dimImd - cat.entries()[codim4].dim == 4 &&
                 dimImd - cat.entries()[codim2].dim == 2 && rep.classes[codim2].dMax == 15;
        }
        ck.check(ok, "so10: codimensions 4 and 2, and d_max(O_(3,3,3,1)) = 15 (n^2-n-5)");
    }
}

// -------------------------------------------------------------- conjectures

void suiteConjectures(Checker& ck, const SuiteOptions& opt) {
    for (SimpleType t : suiteTypes(opt)) {
        auto ctx = TypeContext::get(t);
        const auto& rep = cachedClassification(t, opt.seed, opt.jobs);
        ConjectureFindings f = checkConjectures(*ctx, rep, opt.seed, opt.jobs);
        // Failing lines carry the witness orbits so a finding is actionable.
        std::set<OrbitLabel> unwitnessed;
        for (const auto& c : f.dmaxAdditivity)
            if (!c.witnessed) unwitnessed.insert(c.orbit);
        ck.check(unwitnessed.empty(),
                 t.name() + ": d_max additivity witnessed for all " +
                     num((long long)(f.dmaxAdditivity.size())) + " induced orbits" +
                     (unwitnessed.empty() ? "" : "; missing: " + labelSetText(unwitnessed)));
        std::set<OrbitLabel> disconnected(f.hasseDisconnected.begin(), f.hasseDisconnected.end());
        ck.check(disconnected.empty(),
                 t.name() + ": every class is connected in the inclusion order" +
                     (disconnected.empty() ? "" : "; split: " + labelSetText(disconnected)));
        std::set<OrbitLabel> offMin(f.minimalDimMismatch.begin(), f.minimalDimMismatch.end());
        ck.check(offMin.empty(),
                 t.name() + ": minimal class elements all have dimension d_min" +
                     (offMin.empty() ? "" : "; found above the minimum in: " +
                                                labelSetText(offMin)));
    }
}

}  // namespace

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {
        "chevalley", "wdd", "richardson", "extreme",
        "lonely",    "dmin", "anomalies", "conjectures",
    };
    return names;
}

std::vector<SimpleType> defaultTypes(int maxRank) {
    if (maxRank < 1) throw std::invalid_argument("max rank must be at least 1");
    std::vector<SimpleType> all;
    for (int r = 1; r <= 5; ++r) all.push_back(SimpleType(Family::A, r));
    for (int r = 2; r <= 4; ++r) all.push_back(SimpleType(Family::B, r));
    for (int r = 2; r <= 4; ++r) all.push_back(SimpleType(Family::C, r));
    for (int r = 4; r <= 5; ++r) all.push_back(SimpleType(Family::D, r));
    all.push_back(SimpleType(Family::G, 2));
    all.push_back(SimpleType(Family::F, 4));
    std::vector<SimpleType> out;
    for (SimpleType t : all)
        if (t.rank <= maxRank) out.push_back(t);
    return out;
}

std::vector<OrbitLabel> extremeReferenceList(const TypeContext& ctx, uint64_t seed) {
    SimpleType t = ctx.type;
    int n = t.rank;
    std::set<OrbitLabel> out;
    switch (t.family) {
        case Family::A: {
            int N = n + 1;
            for (int m = 0; 2 * m <= N; ++m) {
                Partition p;
                if (m > 0) p.push_back(2 * m);
                p.resize(p.size() + N - 2 * m, 1);
                out.insert(classicalLabel(t, p));
            }
            if (N % 2 == 1) {
                for (int m = (N + 1) / 2; m < N; ++m)
                    out.insert(classicalLabel(t, {m, N - m}));
                out.insert(classicalLabel(t, {N}));
            }
            break;
        }
        case Family::C: {
            for (int m = 0; m <= n; ++m) {
                Partition p;
                if (m > 0) p.push_back(2 * m);
                p.resize(p.size() + 2 * n - 2 * m, 1);
                out.insert(classicalLabel(t, p));
            }
            break;
        }
        case Family::B: {
            Partition zero(2 * n + 1, 1);
            out.insert(classicalLabel(t, zero));
            Partition min = {2, 2};
            min.resize(2 + 2 * n - 3, 1);
            out.insert(classicalLabel(t, min));
            out.insert(classicalLabel(t, {2 * n - 3, 2, 2}));
            out.insert(classicalLabel(t, {2 * n + 1}));
            break;
        }
        case Family::D: {
            Partition zero(2 * n, 1);
            out.insert(classicalLabel(t, zero));
            Partition min = {2, 2};
            min.resize(2 + 2 * n - 4, 1);
            out.insert(classicalLabel(t, min));
            out.insert(classicalLabel(t, {2 * n - 5, 2, 2, 1}));
            out.insert(classicalLabel(t, {2 * n - 1, 1}));
            break;
        }
        default: {
            const RootSystem& rs = ctx.rs();
            out.insert(diagramLabel(t, WeightedDynkinDiagram(n, 0)));
            out.insert(diagramLabel(t, minimalOrbitWdd(rs)));
            OrbitLabel imd = intermediateOrbit(ctx, seed);
            out.insert(diagramLabel(t, imd.wdd));
            out.insert(diagramLabel(t, WeightedDynkinDiagram(n, 2)));
            break;
        }
    }
    return std::vector<OrbitLabel>(out.begin(), out.end());
}

std::vector<OrbitLabel> lonelyReferenceList(const TypeContext& ctx, uint64_t seed) {
    SimpleType t = ctx.type;
    int n = t.rank;
    std::set<OrbitLabel> out;
    switch (t.family) {
        case Family::A:
            out.insert(classicalLabel(t, {n + 1}));
            break;
        case Family::C:
            for (int m = 1; m <= n; ++m) {
                Partition p(1, 2 * m);
                p.resize(1 + 2 * n - 2 * m, 1);
                out.insert(classicalLabel(t, p));
            }
            break;
        case Family::B:
            if (n == 2) {
                // so5 matches the symplectic behaviour of its dual poset:
                // both nonzero extreme orbits stand alone.
                out.insert(classicalLabel(t, {2, 2, 1}));
                out.insert(classicalLabel(t, {5}));
            } else {
                out.insert(classicalLabel(t, {2 * n + 1}));
            }
            break;
        case Family::D:
            out.insert(classicalLabel(t, {2 * n - 1, 1}));
            out.insert(classicalLabel(t, {2 * n - 5, 2, 2, 1}));
            break;
        case Family::G:
        case Family::E: {
            out.insert(diagramLabel(t, WeightedDynkinDiagram(n, 2)));
            OrbitLabel imd = intermediateOrbit(ctx, seed);
            out.insert(diagramLabel(t, imd.wdd));
            break;
        }
        case Family::F:
            out.insert(diagramLabel(t, WeightedDynkinDiagram(n, 2)));
            break;
    }
    return std::vector<OrbitLabel>(out.begin(), out.end());
}

SuiteResult runSuite(const std::string& name, const SuiteOptions& opt) {
    Checker ck(name);
    if (name == "chevalley")
        suiteChevalley(ck, opt);
    else if (name == "wdd")
        suiteWdd(ck, opt);
    else if (name == "richardson")
        suiteRichardson(ck, opt);
    else if (name == "extreme")
        suiteExtreme(ck, opt);
    else if (name == "lonely")
        suiteLonely(ck, opt);
    else if (name == "dmin")
        suiteDmin(ck, opt);
    else if (name == "anomalies")
        suiteAnomalies(ck, opt);
    else if (name == "conjectures")
        suiteConjectures(ck, opt);
    else
        throw std::invalid_argument("unknown suite " + name);
    return ck.res;
}

}  // namespace nilorb
