#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

// Thrown when a computation detects an internal inconsistency that no input
// should be able to produce (genericity-protocol breakdown, signature
// collision, structure-constant inconsistency, ...).  The CLI maps this to
// exit code 3.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed command-line usage.  CLI exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family : char {
    A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

// A simple Lie type in Bourbaki numbering.  Rank bounds keep each family's
// labelings distinct: B starts at 2, C at 2, D at 4, E in {6,7,8}, F4, G2.
struct SimpleType {
    Family family;
    int rank;

    // Inert A0 placeholder so structs carrying a type can be
    // default-initialized; every live instance comes from the validating
    // constructor or parse().
    SimpleType() : family(Family::A), rank(0) {}
    SimpleType(Family f, int r) : family(f), rank(r) { validate(); }

    void validate() const;

    bool isClassical() const {
        return family == Family::A || family == Family::B ||
               family == Family::C || family == Family::D;
    }

    // Dimension of the defining matrix realization (classical types only):
    // n for A_{n-1} handled as gl_n, 2n+1 for B_n, 2n for C_n and D_n.
    int definingDim() const;

    std::string name() const { return std::string(1, char(family)) + std::to_string(rank); }

    // Accepts "G2", "f4", "d5", ... and also bare family letters when the
    // rank is supplied separately.
    static SimpleType parse(const std::string& text, int rankOverride = 0);

    bool operator==(const SimpleType& o) const {
        return family == o.family && rank == o.rank;
    }
    bool operator!=(const SimpleType& o) const { return !(*this == o); }
};

inline void SimpleType::validate() const {
    auto fail = [&] {
        throw std::invalid_argument("invalid simple type " +
                                    std::string(1, char(family)) + std::to_string(rank));
    };
    switch (family) {
        case Family::A: if (rank < 1) fail(); break;
        case Family::B: if (rank < 2) fail(); break;
        case Family::C: if (rank < 2) fail(); break;
        case Family::D: if (rank < 4) fail(); break;
        case Family::E: if (rank < 6 || rank > 8) fail(); break;
        case Family::F: if (rank != 4) fail(); break;
        case Family::G: if (rank != 2) fail(); break;
        default: fail();
    }
}

inline int SimpleType::definingDim() const {
    switch (family) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank + 1;
        case Family::C: return 2 * rank;
        case Family::D: return 2 * rank;
        default:
            throw std::invalid_argument("no defining matrix realization for " + name());
    }
}

inline SimpleType SimpleType::parse(const std::string& text, int rankOverride) {
    if (text.empty()) throw std::invalid_argument("empty type string");
    char f = text[0];
    if (f >= 'a' && f <= 'g') f = char(f - 'a' + 'A');
    if (f < 'A' || f > 'G') throw std::invalid_argument("unknown family in type " + text);
    int r = rankOverride;
    if (text.size() > 1) {
        size_t pos = 1;
        int parsed = std::stoi(text.substr(1), &pos);
        if (pos + 1 != text.size()) throw std::invalid_argument("malformed type " + text);
        if (rankOverride && rankOverride != parsed)
            throw std::invalid_argument("conflicting ranks for type " + text);
        r = parsed;
    }
    if (r == 0) throw std::invalid_argument("missing rank for type " + text);
    return SimpleType(Family(f), r);
}

using SimpleSubset = std::vector<int>;  // 0-based simple-root indices, strictly increasing

}  // namespace nilorb
