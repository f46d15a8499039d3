#include "blockcensus/linear.hpp"

#include "blockcensus/multipartition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace blockcensus {

namespace {

bool is_prime_small(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int mobius(int m) {
    if (m < 1) throw std::invalid_argument("mobius: positive argument required");
    int result = 1;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            result = -result;
        }
    }
    if (m > 1) result = -result;
    return result;
}

// Falling factorial N (N-1) ... (N-r+1) / r!  == binomial(N, r) for BigCount N.
BigCount binomial_big(const BigCount& n, int r) {
    if (r < 0) return 0;
    BigCount num = 1;
    for (int i = 0; i < r; ++i) {
        BigCount term = n - i;
        if (term <= 0) return 0;
        num *= term;
    }
    for (int i = 2; i <= r; ++i) num /= i;
    return num;
}

// Truncated power-series helpers over BigCount, degree <= deg.
using Series = std::vector<BigCount>;

Series series_mul(const Series& a, const Series& b, int deg) {
    Series c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= deg; ++j)
            c[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return c;
}

Series series_pow(Series base, BigCount e, int deg) {
    Series r(static_cast<std::size_t>(deg) + 1);
    r[0] = 1;
    while (e > 0) {
        if ((e & 1) != 0) r = series_mul(r, base, deg);
        e >>= 1;
        if (e > 0) base = series_mul(base, base, deg);
    }
    return r;
}

}  // namespace

int mult_order(long long a, int p) {
    if (!is_prime_small(p)) throw std::invalid_argument("mult_order: p must be prime");
    long long r = ((a % p) + p) % p;
    if (r == 0) throw std::invalid_argument("mult_order: residue divisible by p");
    long long cur = r % p;
    for (int k = 1; k <= p; ++k) {
        if (cur == 1) return k;
        cur = (cur * r) % p;
    }
    throw std::logic_error("mult_order: no order found");
}

BigCount pprime_part(BigCount v, int p) {
    if (v < 0) v = -v;
    if (v == 0) throw std::invalid_argument("pprime_part: zero has no p'-part");
    while (v % p == 0) v /= p;
    return v;
}

namespace {

BigCount orbit_count_impl(long long sq, int f, int p, bool restrict_pprime) {
    if (f < 1) throw std::invalid_argument("orbit count: degree must be >= 1");
    BigCount total = 0;
    for (int e = 1; e <= f; ++e) {
        if (f % e != 0) continue;
        int mu = mobius(f / e);
        if (mu == 0) continue;
        BigCount val = pow_big(sq, static_cast<unsigned>(e)) - 1;
        if (val < 0) val = -val;
        if (restrict_pprime) val = pprime_part(val, p);
        total += mu * val;
    }
    if (total % f != 0) throw std::logic_error("orbit count: not divisible by degree");
    return total / f;
}

}  // namespace

BigCount signed_orbit_count(long long sq, int f, int p) {
    if (!is_prime_small(p)) throw std::invalid_argument("signed_orbit_count: p must be prime");
    return orbit_count_impl(sq, f, p, true);
}

BigCount signed_orbit_count_all(long long sq, int f) { return orbit_count_impl(sq, f, 2, false); }

BigCount count_irr_polys_pprime(long long q, int f, int p) {
    if (q < 2) throw std::invalid_argument("count_irr_polys_pprime: q must be >= 2");
    return signed_orbit_count(q, f, p);
}

namespace {

struct ProfileChoice {
    std::vector<int> profile;  // weakly decreasing multiplicities
    BigCount ways;
};

// All multiplicity profiles of total j drawn from `avail` distinct orbits,
// with the number of ways to realize each: binomial(avail, r) * r! / prod(rep!).
std::vector<ProfileChoice> profiles_for(int j, const BigCount& avail) {
    std::vector<ProfileChoice> out;
    for (auto& mu : partitions_of(j)) {
        int r = static_cast<int>(mu.size());
        if (avail < r) continue;
        BigCount ways = binomial_big(avail, r);
        // distinct assignments of the profile values to the r chosen orbits
        BigCount arrangements = 1;
        for (int i = 2; i <= r; ++i) arrangements *= i;
        std::size_t i = 0;
        while (i < mu.size()) {
            std::size_t jj = i;
            while (jj < mu.size() && mu[jj] == mu[i]) ++jj;
            for (std::size_t c = 2; c <= jj - i; ++c) arrangements /= static_cast<int>(c);
            i = jj;
        }
        ways *= arrangements;
        out.push_back({mu, std::move(ways)});
    }
    return out;
}

void shapes_rec(int f, int rem, long long sq, int p, std::vector<ShapeFactor>& cur,
                BigCount choices, std::vector<CentralizerShape>& out) {
    if (rem == 0) {
        CentralizerShape s;
        s.factors = cur;
        std::sort(s.factors.begin(), s.factors.end(),
                  [](const ShapeFactor& a, const ShapeFactor& b) {
                      return a.f != b.f ? a.f > b.f : a.m > b.m;
                  });
        s.num_choices = std::move(choices);
        out.push_back(std::move(s));
        return;
    }
    if (f > rem) return;
    BigCount avail = signed_orbit_count(sq, f, p);
    for (int j = rem / f; j >= 0; --j) {
        if (j == 0) {
            shapes_rec(f + 1, rem, sq, p, cur, choices, out);
            continue;
        }
        if (avail == 0) continue;
        for (auto& pc : profiles_for(j, avail)) {
            std::size_t before = cur.size();
            for (int m : pc.profile) cur.push_back({f, m});
            shapes_rec(f + 1, rem - f * j, sq, p, cur, choices * pc.ways, out);
            cur.resize(before);
        }
    }
}

}  // namespace

std::vector<CentralizerShape> enumerate_shapes(int n, long long sq, int p) {
    if (n < 1) throw std::invalid_argument("enumerate_shapes: dimension must be >= 1");
    std::vector<CentralizerShape> out;
    std::vector<ShapeFactor> cur;
    shapes_rec(1, n, sq, p, cur, BigCount(1), out);
    return out;
}

std::vector<GlUnipotentBlock> gl_unipotent_blocks(int n, long long q, int p) {
    int d = mult_order(q, p);
    std::vector<GlUnipotentBlock> out;
    for (int w = n / d; w >= 0; --w) {
        int m = n - d * w;
        BigCount ell = count_multipartitions(d, w);
        for (auto& c : partitions_of(m)) {
            if (!is_d_core(c, d)) continue;
            out.push_back({c, w, ell});
        }
    }
    return out;
}

namespace {

int order_of_power(long long sq, int f, int p) {
    long long base = ((sq % p) + p) % p;
    long long cur = 1;
    for (int i = 0; i < f; ++i) cur = (cur * base) % p;
    return mult_order(cur, p);
}

}  // namespace

GlCensus gl_block_census(int n, long long q, int p, bool unitary) {
    if (q < 2) throw std::invalid_argument("gl_block_census: q must be >= 2");
    if (!is_prime_small(p) || q % p == 0)
        throw std::invalid_argument("gl_block_census: p must be a prime not dividing q");
    long long sq = unitary ? -q : q;
    const std::string group = unitary ? "GU" : "GL";

    GlCensus census;
    census.sum_blocks = 0;
    census.sum_shapes = 0;

    auto ptable = partition_count_table(n);

    for (auto& shape : enumerate_shapes(n, sq, p)) {
        // route 2 contribution
        BigCount prod_p = 1;
        for (auto& fac : shape.factors) prod_p *= ptable[static_cast<std::size_t>(fac.m)];
        census.sum_shapes += shape.num_choices * prod_p;

        // per-factor unipotent blocks, then the cartesian product
        std::vector<int> d_list;
        std::vector<std::vector<GlUnipotentBlock>> per_factor;
        for (auto& fac : shape.factors) {
            int d = order_of_power(sq, fac.f, p);
            d_list.push_back(d);
            std::vector<GlUnipotentBlock> blocks;
            for (int w = fac.m / d; w >= 0; --w) {
                BigCount ell = count_multipartitions(d, w);
                for (auto& c : partitions_of(fac.m - d * w))
                    if (is_d_core(c, d)) blocks.push_back({c, w, ell});
            }
            per_factor.push_back(std::move(blocks));
        }

        std::vector<std::size_t> idx(shape.factors.size(), 0);
        while (true) {
            GlBlockRow row;
            row.group = group;
            row.n = n;
            row.q = q;
            row.p = p;
            row.shape = shape.factors;
            row.d_list = d_list;
            row.num_classes = shape.num_choices;
            BigCount ell = 1;
            int s = 0;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                const GlUnipotentBlock& b = per_factor[i][idx[i]];
                row.weights.push_back(b.weight);
                row.cores.push_back(b.core);
                ell *= b.ell;
                s += b.weight;
            }
            row.cert = exact_certificate(ell, s, "factorwise-core-and-weight");
            row.verdict = classify(row.cert, p);
            census.sum_blocks += shape.num_choices * ell;
            census.rows.push_back(std::move(row));

            // advance the mixed-radix index
            bool done = false;
            std::size_t k = idx.size();
            while (true) {
                if (k == 0) {
                    done = true;
                    break;
                }
                --k;
                if (++idx[k] < per_factor[k].size()) break;
                idx[k] = 0;
            }
            if (done) break;
        }
    }

    // route 3: [x^n] prod over f of P(x^f)^{N(f)}
    Series acc(static_cast<std::size_t>(n) + 1);
    acc[0] = 1;
    for (int f = 1; f <= n; ++f) {
        BigCount nf = signed_orbit_count(sq, f, p);
        if (nf == 0) continue;
        Series pf(static_cast<std::size_t>(n) + 1);
        for (int j = 0; f * j <= n; ++j)
            pf[static_cast<std::size_t>(f * j)] = ptable[static_cast<std::size_t>(j)];
        acc = series_mul(acc, series_pow(pf, nf, n), n);
    }
    census.series = acc[static_cast<std::size_t>(n)];

    census.ok = census.sum_blocks == census.sum_shapes && census.sum_shapes == census.series;
    return census;
}

BigCount count_all_classes(int n, long long q, bool unitary) {
    long long sq = unitary ? -q : q;
    auto ptable = partition_count_table(n);
    Series acc(static_cast<std::size_t>(n) + 1);
    acc[0] = 1;
    for (int f = 1; f <= n; ++f) {
        BigCount nf = signed_orbit_count_all(sq, f);
        if (nf == 0) continue;
        Series pf(static_cast<std::size_t>(n) + 1);
        for (int j = 0; f * j <= n; ++j)
            pf[static_cast<std::size_t>(f * j)] = ptable[static_cast<std::size_t>(j)];
        acc = series_mul(acc, series_pow(pf, nf, n), n);
    }
    return acc[static_cast<std::size_t>(n)];
}

SlSuResult sl_su_verify(int n, long long q, int p, bool unitary) {
    if (n < 2) throw std::invalid_argument("sl_su_verify: dimension must be >= 2");
    long long sq = unitary ? -q : q;
    const std::string group = unitary ? "SU" : "SL";
    SlSuResult res;
    long long edge = unitary ? q + 1 : q - 1;
    if (edge % p != 0) {
        // p'-index kernel: the ambient census transfers block by block.
        GlCensus census = gl_block_census(n, q, p, unitary);
        if (!census.ok) throw std::logic_error("sl_su_verify: ambient census failed");
        res.inherited = true;
        for (auto& row : census.rows) {
            row.group = group;
            row.cert.trace.push_back("inherited-from-ambient-census");
            res.rows.push_back(std::move(row));
        }
        return res;
    }

    // p divides q -+ 1: every orbit degree has d_i = 1 and the determinant
    // kernel genuinely changes block invariants; certify shape by shape.
    auto ptable = partition_count_table(n);
    for (auto& shape : enumerate_shapes(n, sq, p)) {
        GlBlockRow row;
        row.group = group;
        row.n = n;
        row.q = q;
        row.p = p;
        row.shape = shape.factors;
        row.num_classes = shape.num_choices;
        for (auto& fac : shape.factors) {
            int d = order_of_power(sq, fac.f, p);
            if (d != 1) throw std::logic_error("sl_su_verify: unexpected nontrivial order");
            row.d_list.push_back(d);
        }

        const std::size_t r = shape.factors.size();
        if (r == 1 && shape.factors[0].m == 1) {
            // Single orbit of multiplicity one: the centralizer is a torus and
            // its norm-one part is cyclic; the defect order is the p-part of
            // |sq^f - 1| / |sq - 1|.
            int f = shape.factors[0].f;
            BigCount num = pow_big(sq, static_cast<unsigned>(f)) - 1;
            if (num < 0) num = -num;
            BigCount den = sq - 1 < 0 ? BigCount(1 - sq) : BigCount(sq - 1);
            if (num % den != 0) throw std::logic_error("sl_su_verify: norm index not integral");
            BigCount rel = num / den;
            BigCount ppart = rel / pprime_part(rel, p);
            if (ppart == 1) {
                row.cert = exact_certificate(BigCount(1), 0, "defect-zero-after-restriction");
            } else {
                row.cert = upper_certificate(BigCount(p - 1), 1, "cyclic-defect");
            }
        } else if (r == 1 && shape.factors[0].m == 2 && p == 2) {
            row.cert = exact_certificate(BigCount(3), 2, "quaternion-defect");
        } else if (r == 1 && shape.factors[0].m == 2 && p == 3) {
            row.cert = upper_certificate(BigCount(2), 1, "cyclic-sylow-restriction");
        } else {
            BigCount ell = n;
            int s = -1;
            bool quaternion = false;
            for (auto& fac : shape.factors) {
                if (fac.m == 2 && p == 2) {
                    ell *= 3;
                    quaternion = true;
                } else {
                    ell *= ptable[static_cast<std::size_t>(fac.m)];
                }
                s += fac.m;
            }
            row.cert = upper_certificate(std::move(ell), s, "determinant-restriction");
            if (quaternion) row.cert.trace.push_back("quaternion-factor");
        }
        row.verdict = classify(row.cert, p);
        if (row.verdict == Verdict::bound_only) row.cert.trace.push_back("inconclusive");
        res.rows.push_back(std::move(row));
    }
    return res;
}

std::vector<int> valid_primes(int n, long long q, bool unitary) {
    long long sq = unitary ? -q : q;
    std::set<int> primes;
    for (int i = 1; i <= n; ++i) {
        BigCount val = pow_big(sq, static_cast<unsigned>(i)) - 1;
        if (val < 0) val = -val;
        for (int d = 2; BigCount(d) * d <= val && d <= 1000000; ++d) {
            while (val % d == 0) {
                if (q % d != 0) primes.insert(d);
                val /= d;
            }
        }
        // Any leftover cofactor is prime for the magnitudes in scope
        // (a composite one would have had a factor below the trial bound).
        if (val > 1 && val <= std::numeric_limits<int>::max()) {
            int p = static_cast<int>(val);
            if (q % p != 0) primes.insert(p);
        }
    }
    return {primes.begin(), primes.end()};
}

}  // namespace blockcensus
