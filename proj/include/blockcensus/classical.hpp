#pragma once

#include "blockcensus/certificate.hpp"
#include "blockcensus/symbols.hpp"

#include <vector>

namespace blockcensus {

// A unipotent block of a classical group, assembled by grouping the rank-n
// symbols of the type by their hook/cohook core.
struct ClassicalBlock {
    LieType type = LieType::B;
    int n = 0;
    RemovalKind kind = RemovalKind::hook;
    int length = 1;
    Symbol core;
    int weight = 0;
    bool degenerate_core = false;
    int census = 0;         // symbols in the block, degenerate ones counted twice
    BigCount predicted;     // k(2L, w), or the G(2L, 2, w) character count for
                            // degenerate cores, or 1/2 at weight 0
    bool sizes_ok = false;  // census == predicted
};

// Group the unipotent symbols of the type by their core under removals of the
// given kind and length.  Blocks are ordered by decreasing weight, then core.
std::vector<ClassicalBlock> classical_blocks_by_length(LieType type, int n, RemovalKind kind,
                                                       int length);

// Same, with kind and length derived from (q, p): with d the multiplicative
// order of q mod p (p odd, not dividing q), d odd means hooks of length d and
// d even means cohooks of length d/2.
std::vector<ClassicalBlock> classical_unipotent_blocks(LieType type, int n, long long q, int p);

// Exact count / rank-floor certificate for one block: ell = number of
// unipotent characters in the block (weight 0: 1 per character), s >= weight.
BoundCertificate classical_block_certificate(const ClassicalBlock& b);

// Sectional 2-rank floor of the simple classical group: 2n for B_n and C_n,
// 2n - 1 for D_n and 2D_n.
int sectional_rank_2_classical(LieType type, int n);

struct ClassicalP2Check {
    LieType type = LieType::B;
    int n = 0;
    long long q = 0;
    bool count_exact = false;  // unipotent-class count exact vs upper bound
    BigCount class_count;
    BoundCertificate cert;     // ell_upper = multiplier * class_count
    Verdict verdict = Verdict::strict;
};

// p = 2, q odd: ell(B_0) is bounded by (number of unipotent classes) times 2
// for types B, C and times 4 for D, 2D; s >= sectional 2-rank floor.
ClassicalP2Check verify_classical_p2(LieType type, int n, long long q);

}  // namespace blockcensus
