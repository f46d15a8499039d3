#pragma once

#include "blockcensus/certificate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace blockcensus {

// Unipotent-block data for an exceptional group at good primes, parametrized
// by the order d of q modulo p: ell is the block's unipotent character count
// and s the sectional-rank floor, both uniform in (q, p) for fixed d.
struct GoodPrimeRow {
    std::string group;
    int d = 1;
    long long ell = 0;
    int s = 0;
};

struct BadPrimeRow {
    std::string group;
    int p = 2;
    long long ell = 0;
    int s_effective = 0;  // rank floor actually used (may exceed the generic entry)
    std::string note;
};

// Embedded small-rank and twisted cases, fixed (p, ell, s) per scope.
struct SmallRankRow {
    std::string group;
    int p = 2;
    std::string scope;  // "principal" or "non-principal"
    long long ell = 0;
    int s = 0;
};

// Known cases where ell(B) = p^s(B) holds with equality.
struct EqualityCase {
    std::string label;
    int p = 3;
    long long ell = 9;
    long long defect_order = 27;
    int s = 2;
};

const std::vector<GoodPrimeRow>& good_prime_table();
const std::vector<BadPrimeRow>& bad_prime_table();
const std::vector<SmallRankRow>& small_rank_table();
const std::vector<EqualityCase>& equality_registry();

// Bad primes of the group (2 and 3, plus 5 for E8).
std::vector<int> bad_primes_for(const std::string& group);

struct GoodPrimeCheck {
    GoodPrimeRow row;
    int min_admissible_p = 0;  // smallest good prime with d | p - 1
    int primes_checked = 0;    // admissible primes up to the sweep bound
    bool all_strict = false;
};

// Check ell < p^s for every admissible prime p <= pmax (good for the group,
// with d dividing p - 1).
GoodPrimeCheck verify_good_prime_row(const GoodPrimeRow& row, int pmax = 100);

Verdict verify_bad_prime_row(const BadPrimeRow& row);
Verdict verify_small_rank_row(const SmallRankRow& row);
Verdict verify_equality_case(const EqualityCase& c);

// FNV-1a 64-bit digest of the canonical serialization of all four tables;
// pinning this guards the data against silent edits.
std::uint64_t table_digest();

}  // namespace blockcensus
