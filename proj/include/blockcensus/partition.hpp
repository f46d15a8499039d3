#pragma once

#include "blockcensus/bigint.hpp"

#include <vector>

namespace blockcensus {

// A partition is stored as its parts in weakly decreasing order; all parts > 0.
// The empty vector is the empty partition.
using Partition = std::vector<int>;

// A beta-set: strictly increasing non-negative first-column hook lengths
// (i.e. lambda_i + (b - 1 - i) for a fixed number b of beads, sorted ascending).
using BetaSet = std::vector<int>;

bool is_valid_partition(const Partition& lam);
int partition_sum(const Partition& lam);

// All partitions of t, first part decreasing (lexicographically descending).
std::vector<Partition> partitions_of(int t);

// p(t) and the table p(0..tmax).
std::vector<BigCount> partition_count_table(int tmax);
BigCount partition_count(int t);

// Number of partitions of n in which no part is repeated p or more times.
BigCount count_pregular_partitions(int n, int p);

// Beta-set with exactly `beads` beads; requires beads >= len(lam).
BetaSet beta_set(const Partition& lam, int beads);
Partition partition_from_beta(BetaSet beta);

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // d runners, runner 0 first
    int weight = 0;                   // total beads moved = sum of quotient sizes
};

// d-core / d-quotient via the d-runner abacus. Requires d >= 1.
CoreQuotient core_quotient(const Partition& lam, int d);

inline bool is_d_core(const Partition& lam, int d) { return core_quotient(lam, d).weight == 0; }

}  // namespace blockcensus
