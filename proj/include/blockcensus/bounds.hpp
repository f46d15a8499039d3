#pragma once

#include "blockcensus/bigint.hpp"

namespace blockcensus {

struct OlssonCheck {
    BigCount k;             // k(s, t)
    BigCount strict_bound;  // (s+1)^t
    BigCount weak_bound;    // s^t
    bool strict_ok = false; // k <  (s+1)^t
    bool weak_ok = false;   // k <= s^t
};

// Compare k(s, t) against (s+1)^t and s^t. Requires s >= 1, t >= 0.
OlssonCheck olsson_check(int s, int t);

// Upper bound for the simple-module count of a block of C_l wr C_q covering a
// block with l simple modules: (l^q - l)/q + q*l. Requires q prime, l >= 1.
BigCount wreath_block_upper(int ell, int q);

// Number of irreducible characters of the wreath-type complex reflection
// group G(2d, 2, w): 2d-tuples of partitions of total w taken up to the
// half-rotation of the components, with the rotation-fixed tuples counted
// twice.  Closed form for w >= 1: (k(2d, w) - F)/2 + 2F where F = k(d, w/2)
// for even w and 0 for odd w.  At w = 0 the group is trivial and the count
// is 1.
BigCount count_irr_g2d2w(int d, int w);

}  // namespace blockcensus
