#include "blockcensus/exceptional.hpp"

#include <sstream>
#include <stdexcept>

namespace blockcensus {

const std::vector<GoodPrimeRow>& good_prime_table() {
    static const std::vector<GoodPrimeRow> rows = {
        {"F4", 1, 25, 4},  {"F4", 2, 25, 4},  {"F4", 3, 21, 2},  {"F4", 6, 21, 2},
        {"E6", 1, 25, 6},  {"E6", 2, 25, 4},  {"E6", 3, 24, 3},  {"E6", 4, 16, 2},
        {"E6", 6, 21, 2},  {"2E6", 1, 25, 4}, {"2E6", 2, 25, 6}, {"2E6", 3, 21, 2},
        {"2E6", 4, 16, 2}, {"2E6", 6, 24, 3}, {"E7", 1, 60, 7},  {"E7", 2, 60, 7},
        {"E7", 3, 48, 3},  {"E7", 4, 16, 2},  {"E7", 6, 48, 3},  {"E8", 1, 112, 8},
        {"E8", 2, 112, 8}, {"E8", 3, 102, 4}, {"E8", 4, 59, 4},  {"E8", 6, 102, 4},
    };
    return rows;
}

const std::vector<BadPrimeRow>& bad_prime_table() {
    static const std::vector<BadPrimeRow> rows = {
        {"F4", 2, 28, 8, "rank floor from four pairwise commuting rank-1 subgroups"},
        {"F4", 3, 35, 4, ""},
        {"2E6", 2, 27, 6, ""},
        {"2E6", 3, 28, 4, ""},
        {"E7", 2, 64, 7, ""},
        {"E7", 3, 72, 7, ""},
        {"E8", 2, 131, 8, ""},
        {"E8", 3, 150, 8, ""},
        {"E8", 5, 162, 4, ""},
    };
    return rows;
}

const std::vector<SmallRankRow>& small_rank_table() {
    static const std::vector<SmallRankRow> rows = {
        {"G2", 2, "principal", 7, 3},     {"G2", 3, "principal", 7, 2},
        {"G2", 2, "non-principal", 3, 2}, {"G2", 3, "non-principal", 3, 2},
        {"3D4", 2, "principal", 7, 3},    {"3D4", 3, "principal", 7, 2},
        {"2G2", 2, "principal", 3, 3},    {"2F4", 3, "principal", 9, 2},
    };
    return rows;
}

const std::vector<EqualityCase>& equality_registry() {
    static const std::vector<EqualityCase> rows = {
        {"2F4(2)' principal 3-block", 3, 9, 27, 2},
        {"Ru principal 3-block", 3, 9, 27, 2},
        {"J4 principal 3-block", 3, 9, 27, 2},
        {"J4 second 3-block of full defect", 3, 9, 27, 2},
        {"2F4(q^2) principal 3-block, q^2 >= 8", 3, 9, 27, 2},
    };
    return rows;
}

std::vector<int> bad_primes_for(const std::string& group) {
    if (group == "E8") return {2, 3, 5};
    return {2, 3};
}

namespace {

bool is_prime_small(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

GoodPrimeCheck verify_good_prime_row(const GoodPrimeRow& row, int pmax) {
    GoodPrimeCheck chk;
    chk.row = row;
    chk.all_strict = true;
    auto bad = bad_primes_for(row.group);
    for (int p = 2; p <= pmax; ++p) {
        if (!is_prime_small(p)) continue;
        bool is_bad = false;
        for (int b : bad) is_bad = is_bad || b == p;
        if (is_bad) continue;
        if ((p - 1) % row.d != 0) continue;  // d must be the order of some q mod p
        ++chk.primes_checked;
        if (chk.min_admissible_p == 0) chk.min_admissible_p = p;
        Verdict v = classify(exact_certificate(BigCount(row.ell), row.s), p);
        chk.all_strict = chk.all_strict && v == Verdict::strict;
    }
    if (chk.primes_checked == 0)
        throw std::logic_error("verify_good_prime_row: no admissible prime in range");
    return chk;
}

Verdict verify_bad_prime_row(const BadPrimeRow& row) {
    return classify(exact_certificate(BigCount(row.ell), row.s_effective), row.p);
}

Verdict verify_small_rank_row(const SmallRankRow& row) {
    return classify(exact_certificate(BigCount(row.ell), row.s), row.p);
}

Verdict verify_equality_case(const EqualityCase& c) {
    if (BigCount(c.defect_order) != pow_big(c.p, 3u))
        throw std::logic_error("verify_equality_case: defect order is not p^3");
    return classify(exact_certificate(BigCount(c.ell), c.s), c.p);
}

std::uint64_t table_digest() {
    std::ostringstream os;
    for (auto& r : good_prime_table())
        os << "G|" << r.group << '|' << r.d << '|' << r.ell << '|' << r.s << '\n';
    for (auto& r : bad_prime_table())
        os << "B|" << r.group << '|' << r.p << '|' << r.ell << '|' << r.s_effective << '|'
           << r.note << '\n';
    for (auto& r : small_rank_table())
        os << "S|" << r.group << '|' << r.p << '|' << r.scope << '|' << r.ell << '|' << r.s
           << '\n';
    for (auto& r : equality_registry())
        os << "E|" << r.label << '|' << r.p << '|' << r.ell << '|' << r.defect_order << '|' << r.s
           << '\n';
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace blockcensus
