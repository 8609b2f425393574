#include "nilorb/partitions.hpp"

#include <algorithm>
#include <map>

namespace nilorb {

bool isPartition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partitionSum(const Partition& p) {
    int s = 0;
    for (int v : p) s += v;
    return s;
}

Partition dualPartition(const Partition& p) {
    if (p.empty()) return {};
    Partition d(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++d[j];
    return d;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

namespace {

void enumerate(int total, int maxPart, Partition& cur, std::vector<Partition>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(total, maxPart); part >= 1; --part) {
        cur.push_back(part);
        enumerate(total - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> allPartitions(int total) {
    std::vector<Partition> out;
    Partition cur;
    enumerate(total, total, cur, out);
    return out;
}

bool validForType(SimpleType t, const Partition& p) {
    if (!isPartition(p)) return false;
    if (partitionSum(p) != t.definingDim()) return false;
    if (t.family == Family::A) return true;
    std::map<int, int> mult;
    for (int v : p) ++mult[v];
    for (auto [part, count] : mult) {
        bool even = part % 2 == 0;
        if (t.family == Family::C) {
            if (!even && count % 2 != 0) return false;
        } else {  // B or D
            if (even && count % 2 != 0) return false;
        }
    }
    return true;
}

std::vector<Partition> nilpotentPartitions(SimpleType t) {
    std::vector<Partition> out;
    for (auto& p : allPartitions(t.definingDim()))
        if (validForType(t, p)) out.push_back(p);
    return out;
}

bool veryEven(SimpleType t, const Partition& p) {
    if (t.family != Family::D) return false;
    for (int v : p)
        if (v % 2 != 0) return false;
    return true;
}

long long orbitDimFromPartition(SimpleType t, const Partition& p) {
    if (!validForType(t, p)) throw std::invalid_argument("partition invalid for type");
    long long sumDualSq = 0;
    for (int v : dualPartition(p)) sumDualSq += (long long)v * v;
    long long odd = 0;
    for (int v : p)
        if (v % 2 != 0) ++odd;
    long long N = t.definingDim();
    switch (t.family) {
        case Family::A: return N * N - sumDualSq;
        case Family::C: return N * (N + 1) / 2 - (sumDualSq + odd) / 2;
        case Family::B:
        case Family::D: return N * (N - 1) / 2 - (sumDualSq - odd) / 2;
        default: throw std::invalid_argument("no partition labels for exceptional type");
    }
}

Partition partitionFromRankSequence(int N, const std::vector<int>& ranks) {
    Partition dual;
    int prev = N;
    for (int r : ranks) {
        if (r <= 0 || r >= prev) throw InternalError("rank sequence not strictly decreasing");
        dual.push_back(prev - r);
        prev = r;
    }
    dual.push_back(prev);
    if (!isPartition(dual)) throw InternalError("rank sequence is not a Jordan profile");
    return dualPartition(dual);
}

std::string formatPartition(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    s += ")";
    return s;
}

}  // namespace nilorb
