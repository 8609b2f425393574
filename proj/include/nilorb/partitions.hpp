#pragma once

#include <string>
#include <vector>

#include "nilorb/types.hpp"

namespace nilorb {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool isPartition(const Partition& p);
int partitionSum(const Partition& p);
Partition dualPartition(const Partition& p);

// Dominance: a >= b (partial sums).  Both must have equal sum.
bool dominates(const Partition& a, const Partition& b);

// All partitions of total, largest part first within each, in descending
// lexicographic order of the list.
std::vector<Partition> allPartitions(int total);

// Jordan types realized by nilpotent elements in the defining representation:
// A_n any partition of n+1; B_n/D_n partitions of 2n+1/2n with even parts of
// even multiplicity; C_n partitions of 2n with odd parts of even multiplicity.
bool validForType(SimpleType t, const Partition& p);
std::vector<Partition> nilpotentPartitions(SimpleType t);

// D only: all parts even.  Such a partition labels two distinct orbits.
bool veryEven(SimpleType t, const Partition& p);

long long orbitDimFromPartition(SimpleType t, const Partition& p);

// Jordan type from the ranks of e, e^2, ... (zero power excluded), acting on
// an N-dimensional space.
Partition partitionFromRankSequence(int N, const std::vector<int>& ranks);

std::string formatPartition(const Partition& p);

}  // namespace nilorb
