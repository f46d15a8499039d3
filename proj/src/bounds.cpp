#include "blockcensus/bounds.hpp"

#include "blockcensus/multipartition.hpp"

#include <stdexcept>

namespace blockcensus {

namespace {

bool is_prime_small(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

OlssonCheck olsson_check(int s, int t) {
    if (s < 1 || t < 0) throw std::invalid_argument("olsson_check: need s >= 1, t >= 0");
    OlssonCheck c;
    c.k = count_multipartitions(s, t);
    c.strict_bound = pow_big(s + 1, static_cast<unsigned>(t));
    c.weak_bound = pow_big(s, static_cast<unsigned>(t));
    c.strict_ok = c.k < c.strict_bound;
    c.weak_ok = c.k <= c.weak_bound;
    return c;
}

BigCount wreath_block_upper(int ell, int q) {
    if (ell < 1) throw std::invalid_argument("wreath_block_upper: ell must be >= 1");
    if (!is_prime_small(q)) throw std::invalid_argument("wreath_block_upper: q must be prime");
    BigCount lq = pow_big(ell, static_cast<unsigned>(q));
    BigCount diff = lq - ell;
    if (diff % q != 0) throw std::logic_error("wreath_block_upper: q does not divide l^q - l");
    return diff / q + BigCount(q) * ell;
}

BigCount count_irr_g2d2w(int d, int w) {
    if (d < 1 || w < 0) throw std::invalid_argument("count_irr_g2d2w: need d >= 1, w >= 0");
    if (w == 0) return 1;  // trivial group; the index-2 picture needs w >= 1
    BigCount full = count_multipartitions(2 * d, w);
    BigCount fixed = (w % 2 == 0) ? count_multipartitions(d, w / 2) : BigCount(0);
    BigCount diff = full - fixed;
    if (diff % 2 != 0) throw std::logic_error("count_irr_g2d2w: orbit count parity failure");
    return diff / 2 + 2 * fixed;
}

}  // namespace blockcensus
