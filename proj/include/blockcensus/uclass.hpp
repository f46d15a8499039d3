#pragma once

#include "blockcensus/bigint.hpp"
#include "blockcensus/partition.hpp"
#include "blockcensus/symbols.hpp"

#include <optional>
#include <vector>

namespace blockcensus {

// Parameter of a unipotent conjugacy class of an adjoint classical group in
// odd characteristic, in (alpha, beta) coordinates:
//   C: |alpha| + |beta| = n,        beta has distinct parts
//   B: 2|alpha| + |beta| = 2n + 1,  beta has distinct odd parts
//   D: 2|alpha| + |beta| = 2n,      beta has distinct odd parts
// The underlying Jordan type is alpha+alpha+2*beta (C) or alpha+alpha+beta (B, D).
// For D, beta empty with all alpha parts even marks the degenerate parameters,
// each standing for a pair of classes.
struct ClassParam {
    LieType type = LieType::C;
    int n = 0;
    Partition alpha;
    Partition beta;
    bool degenerate = false;
};

// All class parameters for the type (B, C or D only), deterministic order.
std::vector<ClassParam> enumerate_class_params(LieType type, int n);

// Exponent of the replayed per-parameter bound 2^e on the number of classes
// with this Jordan type:
//   C: number of distinct even values among the parts of alpha and beta
//   B, D: number of distinct odd values among the parts of alpha and beta
// (not meaningful for degenerate D parameters, which contribute exactly 2).
int split_exponent_upper(const ClassParam& p);

// Sum over parameters of 2^split_exponent_upper (degenerate D parameters
// contribute 2).  Defined for B, C, D.
BigCount count_classes_upper(LieType type, int n);

// Exact number of unipotent classes of the adjoint group, from component
// groups:
//   C: 2^(|E| - [beta nonempty]),  E = even parts of alpha united with doubled beta parts
//   B: 2^(K - 1),                  K = distinct odd values among alpha, beta parts
//   D: 2 if degenerate, else 2^(K - 1 - [beta nonempty])
// Supported: B and D for all n; C only for n <= 16 (beyond that the replayed
// per-parameter bounds no longer majorize the exact counts, so the pair of
// routes is not comparable and the exact route is withheld).  Unsupported
// inputs return nullopt.
std::optional<BigCount> count_classes_exact(LieType type, int n);

// Closed-form bound: 2^(n + floor(sqrt(n))) for C, 2^(n + floor(sqrt(2n+1)))
// for B, 2^(n + floor(sqrt(2n))) for D.
BigCount closed_form_class_bound(LieType type, int n);

// Sharper bound for D at even n: (2^n - 2^(n/2)) * 2^floor(sqrt(2n)) + 2^(n/2+1).
BigCount secondary_d_class_bound(int n);

}  // namespace blockcensus
