#include "blockcensus/classical.hpp"

#include "blockcensus/bounds.hpp"
#include "blockcensus/linear.hpp"
#include "blockcensus/multipartition.hpp"
#include "blockcensus/uclass.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace blockcensus {

std::vector<ClassicalBlock> classical_blocks_by_length(LieType type, int n, RemovalKind kind,
                                                       int length) {
    if (length < 1) throw std::invalid_argument("classical_blocks_by_length: length must be >= 1");
    struct Agg {
        int weight = -1;
        int census = 0;
        bool degenerate_core = false;
    };
    std::map<Symbol, Agg> by_core;
    for (auto& entry : enumerate_unipotent_symbols(type, n)) {
        SymbolCore cw = symbol_core_weight(entry.sym, kind, length);
        Agg& a = by_core[cw.core];
        if (a.weight == -1) {
            a.weight = cw.weight;
            a.degenerate_core = cw.core.degenerate();
        } else if (a.weight != cw.weight) {
            throw std::logic_error("classical_blocks_by_length: mixed weights in one block");
        }
        a.census += entry.multiplicity;
    }

    std::vector<ClassicalBlock> blocks;
    for (auto& [core, agg] : by_core) {
        ClassicalBlock b;
        b.type = type;
        b.n = n;
        b.kind = kind;
        b.length = length;
        b.core = core;
        b.weight = agg.weight;
        b.degenerate_core = agg.degenerate_core;
        b.census = agg.census;
        if (b.weight == 0)
            b.predicted = b.degenerate_core ? 2 : 1;
        else if (b.degenerate_core)
            b.predicted = count_irr_g2d2w(length, b.weight);
        else
            b.predicted = count_multipartitions(2 * length, b.weight);
        b.sizes_ok = BigCount(b.census) == b.predicted;
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(), [](const ClassicalBlock& a, const ClassicalBlock& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return std::tie(a.core.x, a.core.y) < std::tie(b.core.x, b.core.y);
    });
    return blocks;
}

std::vector<ClassicalBlock> classical_unipotent_blocks(LieType type, int n, long long q, int p) {
    if (p == 2) throw std::invalid_argument("classical_unipotent_blocks: p must be odd");
    if (q % p == 0) throw std::invalid_argument("classical_unipotent_blocks: p divides q");
    int d = mult_order(q, p);
    RemovalKind kind = d % 2 == 1 ? RemovalKind::hook : RemovalKind::cohook;
    int length = d % 2 == 1 ? d : d / 2;
    return classical_blocks_by_length(type, n, kind, length);
}

BoundCertificate classical_block_certificate(const ClassicalBlock& b) {
    if (b.weight == 0) return exact_certificate(BigCount(1), 0, "defect-zero");
    return exact_certificate(b.predicted, b.weight,
                             b.degenerate_core ? "degenerate-core-block" : "core-and-weight");
}

int sectional_rank_2_classical(LieType type, int n) {
    if (n < 1) throw std::invalid_argument("sectional_rank_2_classical: rank must be >= 1");
    switch (type) {
        case LieType::B:
        case LieType::C: return 2 * n;
        case LieType::D:
        case LieType::TwistedD: return 2 * n - 1;
    }
    throw std::logic_error("sectional_rank_2_classical: bad type");
}

ClassicalP2Check verify_classical_p2(LieType type, int n, long long q) {
    if (q % 2 == 0) throw std::invalid_argument("verify_classical_p2: q must be odd");
    ClassicalP2Check chk;
    chk.type = type;
    chk.n = n;
    chk.q = q;

    LieType count_type = type == LieType::TwistedD ? LieType::D : type;
    std::optional<BigCount> exact = count_classes_exact(count_type, n);
    // The twisted group has no more unipotent classes than the split one, so
    // the split count only ever serves as an upper bound there.
    chk.count_exact = exact.has_value() && type != LieType::TwistedD;
    chk.class_count = exact ? *exact : count_classes_upper(count_type, n);

    int mult = (type == LieType::B || type == LieType::C) ? 2 : 4;
    chk.cert = upper_certificate(BigCount(mult) * chk.class_count,
                                 sectional_rank_2_classical(type, n),
                                 chk.count_exact ? "class-count-exact" : "class-count-upper");
    chk.verdict = classify(chk.cert, 2);
    return chk;
}

}  // namespace blockcensus
