#include "blockcensus/uclass.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace blockcensus {

namespace {

void distinct_parts_rec(int rem, int maxp, bool odd_only, Partition& cur,
                        std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    for (int f = std::min(rem, maxp); f >= 1; --f) {
        if (odd_only && f % 2 == 0) continue;
        cur.push_back(f);
        distinct_parts_rec(rem - f, f - 1, odd_only, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> distinct_partitions_of(int t, bool odd_only) {
    std::vector<Partition> out;
    Partition cur;
    distinct_parts_rec(t, t, odd_only, cur, out);
    return out;
}

bool all_even(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int v) { return v % 2 == 0; });
}

int isqrt_floor(int v) {
    int r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

int count_distinct_with_parity(const Partition& a, const Partition& b, int parity) {
    std::set<int> vals;
    for (int v : a)
        if (v % 2 == parity) vals.insert(v);
    for (int v : b)
        if (v % 2 == parity) vals.insert(v);
    return static_cast<int>(vals.size());
}

}  // namespace

std::vector<ClassParam> enumerate_class_params(LieType type, int n) {
    if (n < 1) throw std::invalid_argument("enumerate_class_params: rank must be >= 1");
    std::vector<ClassParam> out;
    if (type == LieType::C) {
        for (int a = n; a >= 0; --a) {
            auto alphas = partitions_of(a);
            auto betas = distinct_partitions_of(n - a, /*odd_only=*/false);
            for (auto& al : alphas)
                for (auto& be : betas) out.push_back({type, n, al, be, false});
        }
        return out;
    }
    if (type != LieType::B && type != LieType::D)
        throw std::invalid_argument("enumerate_class_params: parameters defined for B, C, D only");
    int total = type == LieType::B ? 2 * n + 1 : 2 * n;
    for (int a = total / 2; a >= 0; --a) {
        int bsum = total - 2 * a;
        auto betas = distinct_partitions_of(bsum, /*odd_only=*/true);
        if (betas.empty()) continue;
        auto alphas = partitions_of(a);
        for (auto& al : alphas)
            for (auto& be : betas) {
                bool degen = type == LieType::D && be.empty() && all_even(al);
                out.push_back({type, n, al, be, degen});
            }
    }
    return out;
}

int split_exponent_upper(const ClassParam& p) {
    int parity = p.type == LieType::C ? 0 : 1;
    return count_distinct_with_parity(p.alpha, p.beta, parity);
}

BigCount count_classes_upper(LieType type, int n) {
    BigCount total = 0;
    for (auto& p : enumerate_class_params(type, n)) {
        if (p.degenerate)
            total += 2;
        else
            total += pow_big(2, static_cast<unsigned>(split_exponent_upper(p)));
    }
    return total;
}

namespace {

BigCount exact_count_for(const ClassParam& p) {
    if (p.type == LieType::C) {
        std::set<int> evens;
        for (int v : p.alpha)
            if (v % 2 == 0) evens.insert(v);
        for (int v : p.beta) evens.insert(2 * v);
        int e = static_cast<int>(evens.size()) - (p.beta.empty() ? 0 : 1);
        return pow_big(2, static_cast<unsigned>(e));
    }
    int k = count_distinct_with_parity(p.alpha, p.beta, 1);
    if (p.type == LieType::B) return pow_big(2, static_cast<unsigned>(k - 1));
    if (p.degenerate) return 2;
    int e = k - 1 - (p.beta.empty() ? 0 : 1);
    return pow_big(2, static_cast<unsigned>(e));
}

}  // namespace

std::optional<BigCount> count_classes_exact(LieType type, int n) {
    if (type == LieType::TwistedD) return std::nullopt;
    if (type == LieType::C && n > 16) return std::nullopt;
    if (n < 1) return std::nullopt;
    BigCount total = 0;
    for (auto& p : enumerate_class_params(type, n)) total += exact_count_for(p);
    return total;
}

BigCount closed_form_class_bound(LieType type, int n) {
    switch (type) {
        case LieType::C: return pow_big(2, static_cast<unsigned>(n + isqrt_floor(n)));
        case LieType::B: return pow_big(2, static_cast<unsigned>(n + isqrt_floor(2 * n + 1)));
        case LieType::D: return pow_big(2, static_cast<unsigned>(n + isqrt_floor(2 * n)));
        default: throw std::invalid_argument("closed_form_class_bound: B, C, D only");
    }
}

BigCount secondary_d_class_bound(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("secondary_d_class_bound: even n >= 2 only");
    unsigned un = static_cast<unsigned>(n);
    BigCount main = (pow_big(2, un) - pow_big(2, un / 2)) *
                    pow_big(2, static_cast<unsigned>(isqrt_floor(2 * n)));
    return main + pow_big(2, un / 2 + 1);
}

}  // namespace blockcensus
