#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace blockcensus {

// Exact arbitrary-precision counter. Every count in this library is exact;
// nothing is ever rounded through a double.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow_big(BigCount base, unsigned exp) {
    BigCount r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline BigCount pow_big(long long base, unsigned exp) { return pow_big(BigCount(base), exp); }

// True iff the value can be emitted as a JSON number without precision loss.
inline bool fits_json_number(const BigCount& v) {
    return v >= 0 && v < (BigCount(1) << 53);
}

inline std::string big_to_string(const BigCount& v) { return v.str(); }

}  // namespace blockcensus
