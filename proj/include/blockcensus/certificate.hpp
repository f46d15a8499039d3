#pragma once

#include "blockcensus/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blockcensus {

// Outcome of comparing a simple-module count against p^(sectional-rank lower bound).
//
//   strict     exact or upper count is  < p^s
//   equal      exact count is           = p^s
//   violation  exact count is           > p^s   (an upper bound can never witness this)
//   bound_only the upper bound is >= p^s, so the comparison is inconclusive
enum class Verdict { strict, equal, violation, bound_only };

const char* verdict_name(Verdict v);

struct BoundCertificate {
    BigCount ell_upper;                  // always valid: ell(B) <= ell_upper
    std::optional<BigCount> ell_exact;   // set when the count is exactly known
    int s_lower = 0;                     // s(B) >= s_lower
    std::vector<std::string> trace;      // short human-readable justification tags
};

inline BoundCertificate exact_certificate(BigCount ell, int s_lower, std::string tag = {}) {
    BoundCertificate c;
    c.ell_upper = ell;
    c.ell_exact = std::move(ell);
    c.s_lower = s_lower;
    if (!tag.empty()) c.trace.push_back(std::move(tag));
    return c;
}

inline BoundCertificate upper_certificate(BigCount ell_upper, int s_lower, std::string tag = {}) {
    BoundCertificate c;
    c.ell_upper = std::move(ell_upper);
    c.s_lower = s_lower;
    if (!tag.empty()) c.trace.push_back(std::move(tag));
    return c;
}

// The count in force (exact if known, else the upper bound).
const BigCount& certified_count(const BoundCertificate& c);

Verdict classify(const BoundCertificate& c, int p);

}  // namespace blockcensus
