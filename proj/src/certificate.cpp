#include "blockcensus/certificate.hpp"

#include <stdexcept>

namespace blockcensus {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::strict: return "strict";
        case Verdict::equal: return "equal";
        case Verdict::violation: return "violation";
        case Verdict::bound_only: return "bound-only";
    }
    throw std::logic_error("verdict_name: bad verdict");
}

const BigCount& certified_count(const BoundCertificate& c) {
    return c.ell_exact ? *c.ell_exact : c.ell_upper;
}

Verdict classify(const BoundCertificate& c, int p) {
    if (p < 2) throw std::invalid_argument("classify: p must be >= 2");
    if (c.s_lower < 0) throw std::invalid_argument("classify: negative rank bound");
    BigCount ps = pow_big(p, static_cast<unsigned>(c.s_lower));
    if (c.ell_exact) {
        if (*c.ell_exact < ps) return Verdict::strict;
        if (*c.ell_exact == ps) return Verdict::equal;
        return Verdict::violation;
    }
    return c.ell_upper < ps ? Verdict::strict : Verdict::bound_only;
}

}  // namespace blockcensus
