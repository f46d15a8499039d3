#pragma once

#include "blockcensus/bigint.hpp"
#include "blockcensus/partition.hpp"

#include <vector>

namespace blockcensus {

// k(s, t): number of s-tuples of partitions with total size t.
// Table form returns k(s, 0..tmax).
std::vector<BigCount> count_multipartitions_table(int s, int tmax);
BigCount count_multipartitions(int s, int t);

// All s-tuples of partitions with total size t, in the order induced by
// componentwise lexicographic-descending enumeration.
std::vector<std::vector<Partition>> multipartitions_of(int s, int t);

}  // namespace blockcensus
