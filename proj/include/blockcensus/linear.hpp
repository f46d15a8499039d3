#pragma once

#include "blockcensus/bigint.hpp"
#include "blockcensus/certificate.hpp"
#include "blockcensus/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blockcensus {

// Multiplicative order of a modulo p (a is reduced mod p first; the residue
// must be nonzero).  p must be a prime >= 2.
int mult_order(long long a, int p);

// p'-part of |v|.
BigCount pprime_part(BigCount v, int p);

// Number of Frobenius-orbits of degree f on the p'-elements of the
// multiplicative group generated by the signed base:
//   (1/f) * sum over e | f of mu(f/e) * pprime_part(sq^e - 1).
// sq = q for the linear case, -q for the unitary case.
BigCount signed_orbit_count(long long sq, int f, int p);

// Same with no p'-restriction (all orbits); used for whole-group class counts.
BigCount signed_orbit_count_all(long long sq, int f);

// signed_orbit_count for the linear case (sq = q > 1).
BigCount count_irr_polys_pprime(long long q, int f, int p);

struct ShapeFactor {
    int f = 1;  // orbit degree
    int m = 1;  // multiplicity
    friend auto operator<=>(const ShapeFactor&, const ShapeFactor&) = default;
};

// Centralizer shape of a semisimple p'-element: one factor per chosen orbit,
// factors sorted descending by (f, m).  num_choices counts the semisimple
// elements (orbit selections) realizing the shape.
struct CentralizerShape {
    std::vector<ShapeFactor> factors;
    BigCount num_choices;
};

// All centralizer shapes for dimension n over the signed base, deterministic
// order.  Shapes whose degree has no available orbit are omitted.
std::vector<CentralizerShape> enumerate_shapes(int n, long long sq, int p);

struct GlUnipotentBlock {
    Partition core;  // d-core
    int weight = 0;
    BigCount ell;    // k(d, weight)
};

// Unipotent blocks of the dimension-n linear group at p, where d is the
// multiplicative order of q mod p: one block per d-core, ell = k(d, w).
// Identity: sum of ell over blocks = p(n).
std::vector<GlUnipotentBlock> gl_unipotent_blocks(int n, long long q, int p);

struct GlBlockRow {
    std::string group;  // "GL", "GU", "SL", "SU"
    int n = 0;
    long long q = 0;
    int p = 0;
    std::vector<ShapeFactor> shape;
    std::vector<int> d_list;          // aligned with shape
    std::vector<int> weights;         // aligned with shape; empty for shape-level rows
    std::vector<Partition> cores;     // aligned with shape; empty for shape-level rows
    BigCount num_classes;             // semisimple multiplicity of the shape
    BoundCertificate cert;
    Verdict verdict = Verdict::strict;
};

struct GlCensus {
    BigCount sum_blocks;  // route 1: sum over blocks of num_classes * ell
    BigCount sum_shapes;  // route 2: sum over shapes of num_classes * prod p(m_i)
    BigCount series;      // route 3: [x^n] prod over f of P(x^f)^{N(f)}
    bool ok = false;
    std::vector<GlBlockRow> rows;
};

// Full block census of GL_n(q) (unitary = false) or GU_n(q) (unitary = true)
// at the prime p (p not dividing q).  Every block row carries an exact count
// prod k(d_i, w_i) and rank floor sum(w_i); the census cross-checks the total
// against the p-regular class count computed two independent ways.
GlCensus gl_block_census(int n, long long q, int p, bool unitary);

// Number of conjugacy classes of the full group (no p'-restriction),
// via the generating-function route.  Sanity anchors: n = 2 gives q^2 - 1
// (linear) and (q+1)^2 (unitary).
BigCount count_all_classes(int n, long long q, bool unitary);

struct SlSuResult {
    bool inherited = false;  // true when p does not divide q -+ 1
    std::vector<GlBlockRow> rows;
};

// Certificates for SL_n(q) / SU_n(q) blocks.  When p does not divide
// q - 1 (resp. q + 1) the ambient census transfers factor by factor and the
// rows are the relabeled ambient rows.  Otherwise rows are per centralizer
// shape, with cyclic/quaternion defect resolutions where the shape admits
// them and honest bound-only rows where it does not.
SlSuResult sl_su_verify(int n, long long q, int p, bool unitary);

// All primes p not dividing q that divide prod |sq^i - 1| for i <= n
// (the part of the group order visible to the block theory here), found by
// factoring each torus order.  Primes above 2^31 - 1 are out of scope.
std::vector<int> valid_primes(int n, long long q, bool unitary);

}  // namespace blockcensus
