#include "blockcensus/multipartition.hpp"

#include <stdexcept>

namespace blockcensus {

std::vector<BigCount> count_multipartitions_table(int s, int tmax) {
    if (s < 0) throw std::invalid_argument("count_multipartitions_table: s must be >= 0");
    if (tmax < 0) throw std::invalid_argument("count_multipartitions_table: negative bound");
    std::vector<BigCount> p = partition_count_table(tmax);
    std::vector<BigCount> acc(static_cast<std::size_t>(tmax) + 1);
    acc[0] = 1;  // s = 0: only the empty tuple, only at t = 0
    for (int rep = 0; rep < s; ++rep) {
        std::vector<BigCount> nxt(static_cast<std::size_t>(tmax) + 1);
        for (int a = 0; a <= tmax; ++a) {
            if (acc[a] == 0) continue;
            for (int b = 0; a + b <= tmax; ++b) nxt[a + b] += acc[a] * p[b];
        }
        acc = std::move(nxt);
    }
    return acc;
}

BigCount count_multipartitions(int s, int t) {
    if (t < 0) return 0;
    return count_multipartitions_table(s, t)[static_cast<std::size_t>(t)];
}

namespace {

void rec(int s, int idx, int rem, std::vector<Partition>& cur,
         std::vector<std::vector<Partition>>& out) {
    if (idx == s) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    if (idx == s - 1) {
        for (auto& lam : partitions_of(rem)) {
            cur.push_back(lam);
            rec(s, idx + 1, 0, cur, out);
            cur.pop_back();
        }
        return;
    }
    for (int take = rem; take >= 0; --take) {
        for (auto& lam : partitions_of(take)) {
            cur.push_back(lam);
            rec(s, idx + 1, rem - take, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<Partition>> multipartitions_of(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("multipartitions_of: negative argument");
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    rec(s, 0, t, cur, out);
    return out;
}

}  // namespace blockcensus
