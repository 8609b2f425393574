#include "nilorb/rootsys.hpp"

#include <algorithm>
#include <sstream>

namespace nilorb {

namespace {

// Cartan matrix in Bourbaki numbering, convention C[i][j] = <alpha_j, alpha_i^vee>
// = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).  An off-diagonal entry of -2 or -3
// therefore sits in the row of the *shorter* root of the bond.
std::vector<std::vector<int>> cartanMatrix(SimpleType t) {
    int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c[n - 2][n - 1] = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case Family::E:
            edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5);
            edge(1, 3);  // branch node alpha_2 attaches to alpha_4
            if (n >= 7) edge(5, 6);
            if (n >= 8) edge(6, 7);
            break;
        case Family::F:
            edge(0, 1); edge(1, 2); edge(2, 3);
            c[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            break;
        case Family::G:
            edge(0, 1);
            c[0][1] = -3;  // alpha_1 short, alpha_2 long
            break;
    }
    return c;
}

std::vector<int> simpleHalfNorms(SimpleType t) {
    int n = t.rank;
    std::vector<int> d(n, 1);
    switch (t.family) {
        case Family::B: for (int i = 0; i + 1 < n; ++i) d[i] = 2; break;
        case Family::C: d[n - 1] = 2; break;
        case Family::F: d[0] = d[1] = 2; break;
        case Family::G: d[1] = 3; break;
        default: break;
    }
    return d;
}

}  // namespace

int expectedPositiveRoots(SimpleType t) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

std::string RootSystem::key(const std::vector<int>& coords) {
    std::string s;
    s.reserve(coords.size());
    for (int c : coords) s.push_back(char(c + 64));
    return s;
}

RootSystem::RootSystem(SimpleType type) : type_(type) { build(); }

void RootSystem::build() {
    int n = rank();
    cartan_ = cartanMatrix(type_);
    simpleD_ = simpleHalfNorms(type_);

    // Close the simple roots under root strings, level by level.  For a root
    // gamma and simple alpha_i, gamma + alpha_i is a root iff q > 0 where
    // q = p - <gamma, alpha_i^vee> and p counts how far the string continues
    // downward (gamma - alpha_i, gamma - 2 alpha_i, ... staying inside Delta).
    std::vector<std::vector<int>> current;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        current.push_back(e);
    }
    auto insert = [&](const std::vector<int>& v) {
        int idx = int(roots_.size());
        Root r;
        r.coords = v;
        r.height = 0;
        for (int c : v) r.height += c;
        roots_.push_back(std::move(r));
        index_.emplace(key(v), idx);
    };
    std::sort(current.begin(), current.end());
    for (auto& v : current) insert(v);

    while (!current.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : current) {
            for (int i = 0; i < n; ++i) {
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += cartan_[i][j] * g[j];
                int p = 0;
                std::vector<int> down = g;
                for (;;) {
                    down[i] -= 1;
                    bool nonneg = true, zero = true;
                    for (int c : down) {
                        if (c < 0) nonneg = false;
                        if (c != 0) zero = false;
                    }
                    if (zero || !nonneg || !index_.count(key(down))) break;
                    ++p;
                }
                if (p - pair > 0) {
                    std::vector<int> up = g;
                    up[i] += 1;
                    if (!index_.count(key(up)) &&
                        std::find(next.begin(), next.end(), up) == next.end())
                        next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        for (auto& v : next) insert(v);
        current = std::move(next);
    }

    if (int(roots_.size()) != expectedPositiveRoots(type_))
        throw InternalError("root closure produced wrong count for " + type_.name());

    // Heights are nondecreasing along the construction, and ties were sorted
    // lexicographically, so roots_ is already in canonical order.
    pairing_.assign(roots_.size(), std::vector<int>(n, 0));
    for (size_t r = 0; r < roots_.size(); ++r) {
        auto& g = roots_[r];
        long long norm = form(g.coords, g.coords);
        if (norm % 2 != 0) throw InternalError("odd root norm");
        g.halfNorm = int(norm / 2);
        for (int i = 0; i < n; ++i) {
            int s = 0;
            for (int j = 0; j < n; ++j) s += cartan_[i][j] * g.coords[j];
            pairing_[r][i] = s;
        }
    }
    int maxD = *std::max_element(simpleD_.begin(), simpleD_.end());
    for (auto& g : roots_) g.isLong = (g.halfNorm == maxD);

    // Highest root: the unique maximal element; with canonical order it is last.
    highest_ = int(roots_.size()) - 1;
    for (size_t r = 0; r + 1 < roots_.size(); ++r)
        if (!rootLeq(int(r), highest_))
            throw InternalError("highest root is not the poset maximum");

    // Hasse edges of the root poset are exactly the pairs differing by one
    // simple root: height grades the poset, so nothing fits strictly between.
    coverUp_.assign(roots_.size(), {});
    coverDown_.assign(roots_.size(), {});
    for (size_t r = 0; r < roots_.size(); ++r) {
        for (int i = 0; i < n; ++i) {
            if (roots_[r].coords[i] == 0) continue;
            std::vector<int> down = roots_[r].coords;
            down[i] -= 1;
            bool zero = std::all_of(down.begin(), down.end(), [](int c) { return c == 0; });
            if (zero) continue;
            auto it = index_.find(key(down));
            if (it != index_.end()) {
                coverDown_[r].push_back(it->second);
                coverUp_[it->second].push_back(int(r));
            }
        }
    }
}

std::optional<int> RootSystem::indexOf(const std::vector<int>& coords) const {
    auto it = index_.find(key(coords));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::isRoot(const std::vector<int>& coords) const {
    bool allNonPos = true, allNonNeg = true;
    for (int c : coords) {
        if (c > 0) allNonPos = false;
        if (c < 0) allNonNeg = false;
    }
    if (allNonNeg && !allNonPos) return indexOf(coords).has_value();
    if (allNonPos && !allNonNeg) {
        std::vector<int> neg(coords.size());
        for (size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
        return indexOf(neg).has_value();
    }
    return false;  // zero or mixed signs
}

bool RootSystem::rootLeq(int gammaIdx, int muIdx) const {
    const auto& a = roots_.at(gammaIdx).coords;
    const auto& b = roots_.at(muIdx).coords;
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] < a[i]) return false;
    return true;
}

std::vector<int> RootSystem::nilradicalRoots(const SimpleSubset& S) const {
    std::vector<int> out;
    for (int r = 0; r < numPositive(); ++r)
        for (int s : S)
            if (roots_[r].coords.at(s) > 0) {
                out.push_back(r);
                break;
            }
    return out;
}

std::vector<int> RootSystem::leviRoots(const SimpleSubset& S) const {
    std::vector<bool> inS(rank(), false);
    for (int s : S) inS.at(s) = true;
    std::vector<int> out;
    for (int r = 0; r < numPositive(); ++r) {
        bool ok = true;
        for (int i = 0; i < rank(); ++i)
            if (roots_[r].coords[i] > 0 && inS[i]) { ok = false; break; }
        if (ok) out.push_back(r);
    }
    return out;
}

int RootSystem::cocharacterWeight(int rootIdx, const std::vector<int>& labels) const {
    const auto& c = roots_.at(rootIdx).coords;
    if (labels.size() != c.size())
        throw std::invalid_argument("label vector has wrong length");
    int w = 0;
    for (size_t i = 0; i < c.size(); ++i) w += c[i] * labels[i];
    return w;
}

long long RootSystem::form(const std::vector<int>& a, const std::vector<int>& b) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            s += (long long)a[i] * b[j] * simpleD_[i] * cartan_[i][j];
    return s;
}

std::string RootSystem::formatRoot(int idx) const {
    std::ostringstream os;
    const auto& c = roots_.at(idx).coords;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

}  // namespace nilorb
