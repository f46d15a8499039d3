#include "blockcensus/symmetric.hpp"

#include "blockcensus/multipartition.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockcensus {

std::vector<SymBlock> enumerate_blocks_sym(int n, int p) {
    if (n < 0) throw std::invalid_argument("enumerate_blocks_sym: negative n");
    if (p < 2) throw std::invalid_argument("enumerate_blocks_sym: p must be >= 2");
    std::vector<SymBlock> blocks;
    for (int w = n / p; w >= 0; --w) {
        int m = n - p * w;
        for (auto& c : partitions_of(m)) {
            if (!is_d_core(c, p)) continue;
            SymBlock b;
            b.n = n;
            b.p = p;
            b.core = c;
            b.weight = w;
            blocks.push_back(std::move(b));
        }
    }
    return blocks;
}

BoundCertificate sym_invariants(const SymBlock& b) {
    if (b.weight < 0) throw std::invalid_argument("sym_invariants: negative weight");
    BoundCertificate c =
        exact_certificate(count_multipartitions(b.p - 1, b.weight), b.weight, "core-and-weight");
    return c;
}

BoundCertificate alt_invariants(const SymBlock& covering) {
    int w = covering.weight;
    int p = covering.p;
    if (w < 0) throw std::invalid_argument("alt_invariants: negative weight");
    if (w == 0) return exact_certificate(BigCount(1), 0, "defect-zero");
    if (p == 2) {
        BigCount ell = count_multipartitions(1, w);
        if (w % 2 == 0) ell += count_multipartitions(1, w / 2);
        int s = w >= 4 ? w : (w >= 2 ? 2 : 0);
        return exact_certificate(std::move(ell), s, "even-prime-splitting");
    }
    if (w < p) {
        return upper_certificate(count_multipartitions(p, w) - 1, w, "small-weight-restriction");
    }
    return upper_certificate(2 * count_multipartitions(p - 1, w), w, "restriction-doubling");
}

BoundCertificate spin_weight_check(int p, int w) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("spin_weight_check: p must be odd >= 3");
    if (w < 0) throw std::invalid_argument("spin_weight_check: negative weight");
    int t = (p - 1) / 2;
    BigCount ell = count_multipartitions(t, w);
    if (w % 2 == 1) ell *= 2;
    return exact_certificate(std::move(ell), w, "spin-core-and-weight");
}

SymCensus verify_sym_census(int n, int p) {
    SymCensus c;
    c.total_partitions = partition_count(n);
    c.pregular = count_pregular_partitions(n, p);
    c.sum_k_p = 0;
    c.sum_ell = 0;
    auto blocks = enumerate_blocks_sym(n, p);
    c.num_blocks = blocks.size();
    int wmax = n / p;
    auto kp = count_multipartitions_table(p, wmax);
    auto kp1 = count_multipartitions_table(p - 1, wmax);
    for (auto& b : blocks) {
        c.sum_k_p += kp[static_cast<std::size_t>(b.weight)];
        c.sum_ell += kp1[static_cast<std::size_t>(b.weight)];
    }
    c.characters_ok = c.sum_k_p == c.total_partitions;
    c.modular_ok = c.sum_ell == c.pregular;
    return c;
}

}  // namespace blockcensus
