#include "blockcensus/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockcensus {

bool is_valid_partition(const Partition& lam) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] <= 0) return false;
        if (i > 0 && lam[i] > lam[i - 1]) return false;
    }
    return true;
}

int partition_sum(const Partition& lam) {
    int s = 0;
    for (int x : lam) s += x;
    return s;
}

namespace {

void partitions_rec(int rem, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    for (int f = std::min(rem, maxp); f >= 1; --f) {
        cur.push_back(f);
        partitions_rec(rem - f, f, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int t) {
    if (t < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(t, t, cur, out);
    return out;
}

std::vector<BigCount> partition_count_table(int tmax) {
    if (tmax < 0) throw std::invalid_argument("partition_count_table: negative bound");
    // Euler's recurrence with generalized pentagonal numbers.
    std::vector<BigCount> p(static_cast<std::size_t>(tmax) + 1);
    p[0] = 1;
    for (int n = 1; n <= tmax; ++n) {
        BigCount acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            BigCount term = 0;
            if (g1 <= n) term += p[n - g1];
            if (g2 <= n) term += p[n - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[n] = acc;
    }
    return p;
}

BigCount partition_count(int t) {
    if (t < 0) return 0;
    return partition_count_table(t)[static_cast<std::size_t>(t)];
}

BigCount count_pregular_partitions(int n, int p) {
    if (p < 2) throw std::invalid_argument("count_pregular_partitions: p must be >= 2");
    if (n < 0) return 0;
    // Product over part sizes j of (1 + x^j + ... + x^{j(p-1)}).
    std::vector<BigCount> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (int j = 1; j <= n; ++j) {
        std::vector<BigCount> nxt(dp);
        for (int rep = 1; rep <= p - 1; ++rep) {
            long long used = static_cast<long long>(j) * rep;
            if (used > n) break;
            for (int m = static_cast<int>(used); m <= n; ++m) nxt[m] += dp[m - used];
        }
        dp = std::move(nxt);
    }
    return dp[static_cast<std::size_t>(n)];
}

BetaSet beta_set(const Partition& lam, int beads) {
    if (!is_valid_partition(lam)) throw std::invalid_argument("beta_set: not a partition");
    if (beads < static_cast<int>(lam.size()))
        throw std::invalid_argument("beta_set: fewer beads than parts");
    BetaSet b;
    b.reserve(static_cast<std::size_t>(beads));
    for (int i = 0; i < beads; ++i) {
        int part = i < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i)] : 0;
        b.push_back(part + (beads - 1 - i));
    }
    std::sort(b.begin(), b.end());
    return b;
}

Partition partition_from_beta(BetaSet beta) {
    std::sort(beta.begin(), beta.end());
    for (std::size_t i = 1; i < beta.size(); ++i)
        if (beta[i] == beta[i - 1]) throw std::invalid_argument("partition_from_beta: repeated bead");
    Partition lam;
    int n = static_cast<int>(beta.size());
    for (int i = n - 1; i >= 0; --i) {
        int part = beta[static_cast<std::size_t>(i)] - i;
        if (part < 0) throw std::invalid_argument("partition_from_beta: negative bead");
        if (part > 0) lam.push_back(part);
    }
    return lam;
}

CoreQuotient core_quotient(const Partition& lam, int d) {
    if (d < 1) throw std::invalid_argument("core_quotient: d must be >= 1");
    if (!is_valid_partition(lam)) throw std::invalid_argument("core_quotient: not a partition");
    int len = std::max<int>(1, static_cast<int>(lam.size()));
    int beads = ((len + d - 1) / d) * d;  // multiple of d so runner lengths are equal
    BetaSet beta = beta_set(lam, beads);

    CoreQuotient cq;
    cq.quotient.resize(static_cast<std::size_t>(d));
    BetaSet core_beta;
    for (int r = 0; r < d; ++r) {
        std::vector<int> pos;
        for (int b : beta)
            if (b % d == r) pos.push_back(b / d);
        std::sort(pos.begin(), pos.end());
        // Pushing every bead on this runner to the bottom costs sum(pos_i - i) moves;
        // the displacement pattern is the runner's quotient partition.
        BetaSet qbeta;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            cq.weight += pos[i] - static_cast<int>(i);
            qbeta.push_back(pos[i]);
            core_beta.push_back(static_cast<int>(i) * d + r);
        }
        cq.quotient[static_cast<std::size_t>(r)] = partition_from_beta(qbeta);
    }
    cq.core = partition_from_beta(core_beta);
    return cq;
}

}  // namespace blockcensus
