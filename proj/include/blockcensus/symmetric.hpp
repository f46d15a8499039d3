#pragma once

#include "blockcensus/certificate.hpp"
#include "blockcensus/partition.hpp"

#include <vector>

namespace blockcensus {

// A p-block of S_n: its p-core and weight, with |core| + p * weight = n.
struct SymBlock {
    int n = 0;
    int p = 0;
    Partition core;
    int weight = 0;
};

// All p-blocks of S_n, ordered by decreasing weight, then by the descending
// lexicographic order of the core.
std::vector<SymBlock> enumerate_blocks_sym(int n, int p);

// Exact invariants for a p-block of S_n of weight w:
//   ell = k(p-1, w), s(B) >= w (equality p^0 at weight 0).
BoundCertificate sym_invariants(const SymBlock& b);

// Invariants for a block of A_n lying under the given S_n block.
// w = 0: exact count 1 (defect zero below a defect-zero block).
// p = 2: exact count k(1,w) for odd w, k(1,w) + k(1,w/2) for even w;
//        rank floor 0 for w = 1, 2 for w in {2,3}, w for w >= 4.
// p odd: upper bound k(p,w) - 1 for 0 < w < p, 2*k(p-1,w) for w >= p;
//        rank floor w.
BoundCertificate alt_invariants(const SymBlock& covering);

// Invariants for a weight-w spin p-block (p odd): with t = (p-1)/2 the exact
// count is k(t,w) for even w and 2*k(t,w) for odd w; rank floor w.
BoundCertificate spin_weight_check(int p, int w);

struct SymCensus {
    BigCount total_partitions;      // p(n)
    BigCount sum_k_p;               // sum over blocks of k(p, w_B)
    BigCount pregular;              // p-regular partition count of n
    BigCount sum_ell;               // sum over blocks of k(p-1, w_B)
    std::size_t num_blocks = 0;
    bool characters_ok = false;     // sum_k_p == total_partitions
    bool modular_ok = false;        // sum_ell == pregular
};

// Two independent census identities over the blocks of S_n at p.
SymCensus verify_sym_census(int n, int p);

}  // namespace blockcensus
