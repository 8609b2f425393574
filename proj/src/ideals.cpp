#include "nilorb/ideals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "nilorb/centralizers.hpp"
#include "nilorb/parallel.hpp"

namespace nilorb {

std::vector<AdNilpotentIdeal> enumerateIdeals(const RootSystem& rs) {
    int m = rs.numPositive();
    if (m > kMaxPositiveRoots) throw std::invalid_argument("too many positive roots");
    std::vector<AdNilpotentIdeal> out;
    RootSet cur;
    // Descending canonical order: a root's upper covers are higher, so they
    // are already decided when the root is reached.
    std::function<void(int)> rec = [&](int pos) {
        if (pos < 0) {
            out.push_back(makeIdeal(rs, cur));
            return;
        }
        rec(pos - 1);
        bool allowed = true;
        for (int u : rs.coversUp(pos))
            if (!cur.test(size_t(u))) {
                allowed = false;
                break;
            }
        if (allowed) {
            cur.set(size_t(pos));
            rec(pos - 1);
            cur.reset(size_t(pos));
        }
    };
    rec(m - 1);
    return out;
}

uint64_t bruteForceIdealCount(const RootSystem& rs) {
    int m = rs.numPositive();
    if (m > 24) throw std::invalid_argument("subset scan limited to 24 positive roots");
    std::vector<uint32_t> up(size_t(m), 0);
    for (int r = 0; r < m; ++r)
        for (int u : rs.coversUp(r)) up[size_t(r)] |= 1u << u;
    uint64_t cnt = 0;
    uint32_t end = uint32_t(1) << m;
    for (uint32_t mask = 0;; ++mask) {
        bool ok = true;
        for (int r = 0; r < m && ok; ++r)
            if ((mask >> r) & 1u) ok = (mask & up[size_t(r)]) == up[size_t(r)];
        if (ok) ++cnt;
        if (mask == end - 1) break;
    }
    return cnt;
}

uint64_t catalanIdealCount(const RootSystem& rs) {
    int maxh = 0;
    for (const auto& r : rs.positiveRoots()) maxh = std::max(maxh, r.height);
    std::vector<int> cnt(size_t(maxh) + 1, 0);
    for (const auto& r : rs.positiveRoots()) cnt[size_t(r.height)]++;
    int n = rs.rank();
    // The multiset of root heights is dual to the exponents.
    std::vector<int> expo(size_t(n), 0);
    int total = 0;
    for (int i = 1; i <= n; ++i) {
        int e = 0;
        for (int k = 1; k <= maxh; ++k)
            if (cnt[size_t(k)] >= i) ++e;
        expo[size_t(i - 1)] = e;
        total += e;
    }
    if (total != rs.numPositive()) throw InternalError("exponents do not sum to the root count");
    int h = maxh + 1;  // Coxeter number
    Int num(1), den(1);
    for (int e : expo) {
        num *= e + h + 1;
        den *= e + 1;
    }
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw InternalError("ideal count product is not integral");
    if (!q.fits_ulong_p()) throw InternalError("ideal count overflows");
    return uint64_t(q.get_ui());
}

AdNilpotentIdeal makeIdeal(const RootSystem& rs, const RootSet& members) {
    int m = rs.numPositive();
    for (int r = m; r < kMaxPositiveRoots; ++r)
        if (members.test(size_t(r))) throw std::invalid_argument("bit beyond the root count");
    AdNilpotentIdeal out;
    out.members = members;
    for (int r = 0; r < m; ++r) {
        if (!members.test(size_t(r))) continue;
        ++out.dim;
        for (int u : rs.coversUp(r))
            if (!members.test(size_t(u))) throw std::invalid_argument("set is not upward closed");
        bool minimal = true;
        for (int dn : rs.coversDown(r))
            if (members.test(size_t(dn))) {
                minimal = false;
                break;
            }
        if (minimal) out.generators.push_back(r);
    }
    return out;
}

AdNilpotentIdeal dynkinIdeal(const RootSystem& rs, const GradingData& grading) {
    RootSet s;
    for (int idx : grading.dynkinRoots) s.set(size_t(idx));
    return makeIdeal(rs, s);
}

AdNilpotentIdeal commutatorIdeal(const RootSystem& rs) {
    RootSet s;
    for (int r = 0; r < rs.numPositive(); ++r)
        if (rs.root(r).height >= 2) s.set(size_t(r));
    return makeIdeal(rs, s);
}

OrbitLabel associatedOrbit(const TypeContext& ctx, const AdNilpotentIdeal& ideal, uint64_t seed) {
    const auto& cat = ctx.catalog(seed);
    if (ideal.dim == 0) return cat.zeroEntry().label;
    const auto& sc = ctx.sc();
    std::vector<int> idxs;
    for (int r = 0; r < ctx.rs().numPositive(); ++r)
        if (ideal.members.test(size_t(r))) idxs.push_back(r);
    auto sample = [&](int k) {
        Elem e = genericElement(sc, idxs, deriveSeed(seed, "assoc", k));
        return identifyOrbit(ctx, e, deriveSeed(seed, "assoc-id", k));
    };
    std::vector<OrbitLabel> labs;
    for (int k = 0; k < 3; ++k) labs.push_back(sample(k));
    if (labs[0] == labs[1] && labs[1] == labs[2]) return labs[0];
    for (int k = 3; k < 7; ++k) labs.push_back(sample(k));
    // Every sample lies in the closure of the dense orbit, so the unique
    // label of maximal dimension is the dense one.
    long long best = -1;
    OrbitLabel bestLab;
    bool tie = false;
    for (const auto& lab : labs) {
        long long d = cat.entry(lab).dim;
        if (d > best) {
            best = d;
            bestLab = lab;
            tie = false;
        } else if (d == best && !(lab == bestLab)) {
            tie = true;
        }
    }
    if (tie) throw InternalError("distinct maximal-dimension labels for one ideal");
    return bestLab;
}

ClassificationReport classify(const TypeContext& ctx, uint64_t seed, int jobs) {
    ClassificationReport rep;
    rep.type = ctx.type;
    rep.seed = seed;
    rep.ideals = enumerateIdeals(ctx.rs());
    const auto& cat = ctx.catalog(seed);
    const auto& entries = cat.entries();

    std::vector<int> orbitOf(rep.ideals.size(), -1);
    parallelFor(int(rep.ideals.size()), jobs, [&](int i) {
        OrbitLabel lab = associatedOrbit(ctx, rep.ideals[size_t(i)], deriveSeed(seed, uint64_t(i)));
        int idx = cat.entryIndex(lab);
        if (idx < 0) throw InternalError("associated orbit missing from catalog");
        orbitOf[size_t(i)] = idx;
    });

    rep.classes.resize(entries.size());
    for (size_t k = 0; k < entries.size(); ++k) rep.classes[k].orbit = entries[k].label;
    for (size_t i = 0; i < rep.ideals.size(); ++i)
        rep.classes[size_t(orbitOf[i])].idealIdx.push_back(int(i));

    for (size_t k = 0; k < rep.classes.size(); ++k) {
        auto& cls = rep.classes[k];
        if (cls.idealIdx.empty())
            throw InternalError("orbit " + cls.orbit.text() + " has an empty ideal class");
        cls.dMinObserved = rep.ideals[size_t(cls.idealIdx[0])].dim;
        cls.dMax = 0;
        for (int i : cls.idealIdx) {
            long long d = rep.ideals[size_t(i)].dim;
            cls.dMinObserved = std::min(cls.dMinObserved, d);
            cls.dMax = std::max(cls.dMax, d);
        }
        // The labeling's own ideal must sit in the class of its orbit.
        AdNilpotentIdeal dyn = dynkinIdeal(ctx.rs(), entries[k].grading);
        for (int i : cls.idealIdx)
            if (rep.ideals[size_t(i)].members == dyn.members) {
                cls.dynkinIdealIdx = i;
                break;
            }
        if (cls.dynkinIdealIdx < 0)
            throw InternalError("class of " + cls.orbit.text() + " is missing its canonical ideal");
        // Maximal and minimal members under inclusion.
        for (int a : cls.idealIdx) {
            bool isMax = true, isMin = true;
            for (int b : cls.idealIdx) {
                if (a == b) continue;
                const auto& A = rep.ideals[size_t(a)].members;
                const auto& B = rep.ideals[size_t(b)].members;
                if (A != B && (A & B) == A) isMax = false;
                if (A != B && (A & B) == B) isMin = false;
            }
            if (isMax) cls.maximal.push_back(a);
            if (isMin) cls.minimal.push_back(a);
        }
        // Connectivity of the class subposet: comparability components agree
        // with the components of its cover diagram.
        std::vector<int> parent(cls.idealIdx.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            return x;
        };
        for (size_t a = 0; a < cls.idealIdx.size(); ++a)
            for (size_t b = a + 1; b < cls.idealIdx.size(); ++b) {
                const auto& A = rep.ideals[size_t(cls.idealIdx[a])].members;
                const auto& B = rep.ideals[size_t(cls.idealIdx[b])].members;
                if ((A & B) == A || (A & B) == B) parent[size_t(find(int(a)))] = find(int(b));
            }
        int roots = 0;
        for (size_t a = 0; a < cls.idealIdx.size(); ++a)
            if (find(int(a)) == int(a)) ++roots;
        cls.hasseConnected = roots == 1;
    }
    return rep;
}

const ClassificationReport& cachedClassification(SimpleType t, uint64_t seed, int jobs) {
    t.validate();
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const ClassificationReport>> memo;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(t.name());
        if (it != memo.end()) return *it->second;
    }
    auto ctx = TypeContext::get(t);
    auto rep = std::make_shared<const ClassificationReport>(classify(*ctx, seed, jobs));
    std::lock_guard<std::mutex> lk(mu);
    auto [it, fresh] = memo.emplace(t.name(), std::move(rep));
    return *it->second;
}

bool isLonely(const ClassificationReport& rep, const IdealClass& cls) {
    if (cls.idealIdx.size() != 1) return false;
    if (cls.idealIdx[0] != cls.dynkinIdealIdx)
        throw InternalError("singleton class member is not the canonical ideal");
    (void)rep;
    return true;
}

std::vector<DminVerdict> checkDminFormula(const TypeContext& ctx, const ClassificationReport& rep,
                                          uint64_t seed) {
    const auto& cat = ctx.catalog(seed);
    std::vector<DminVerdict> out;
    for (size_t k = 0; k < rep.classes.size(); ++k) {
        const auto& cls = rep.classes[k];
        auto cd = centralizerData(ctx, cat.entries()[k], deriveSeed(seed, "dmin", k));
        DminVerdict v;
        v.orbit = cls.orbit;
        v.observed = cls.dMinObserved;
        v.formula = cd.dMin;
        v.ok = v.observed == v.formula;
        out.push_back(std::move(v));
    }
    return out;
}

ConjectureFindings checkConjectures(const TypeContext& ctx, const ClassificationReport& rep,
                                    uint64_t seed, int jobs) {
    ConjectureFindings f;
    for (const auto& cls : rep.classes) {
        if (!cls.hasseConnected) f.hasseDisconnected.push_back(cls.orbit);
        for (int m : cls.minimal)
            if (rep.ideals[size_t(m)].dim != cls.dMinObserved) {
                f.minimalDimMismatch.push_back(cls.orbit);
                break;
            }
    }
    const auto& wits = ctx.inductionWitnesses(seed);
    if (wits.size() != rep.classes.size()) throw InternalError("witness table size mismatch");
    for (size_t k = 0; k < rep.classes.size(); ++k) {
        if (wits[k].empty()) continue;  // rigid orbits carry no claim
        ConjectureFindings::AdditivityCheck rec;
        rec.orbit = rep.classes[k].orbit;
        long long target = rep.classes[k].dMax;
        for (const auto& w : wits[k]) {
            long long sum = long(ctx.rs().nilradicalRoots(w.cut).size());
            auto comps = componentsOfLevi(ctx.rs(), w.cut);
            if (comps.size() != w.inner.size()) throw InternalError("witness arity mismatch");
            for (size_t c = 0; c < comps.size(); ++c) {
                const auto& crep = cachedClassification(comps[c].type, seed, jobs);
                auto cctx = TypeContext::get(comps[c].type);
                int ei = cctx->catalog(seed).entryIndex(w.inner[c]);
                if (ei < 0) throw InternalError("witness inner orbit missing");
                sum += crep.classes[size_t(ei)].dMax;
            }
            if (sum == target) {
                rec.witnessed = true;
                rec.cut = w.cut;
                rec.inner = w.inner;
                break;
            }
        }
        f.dmaxAdditivity.push_back(std::move(rec));
    }
    return f;
}

std::optional<SimpleSubset> detectInducedViaSimpleRoots(const RootSystem& rs,
                                                        const AdNilpotentIdeal& ideal) {
    SimpleSubset S;
    for (int i = 0; i < rs.rank(); ++i)
        if (ideal.members.test(size_t(rs.simpleRootIndex(i)))) S.push_back(i);
    if (S.empty()) return std::nullopt;
    return S;
}

}  // namespace nilorb
