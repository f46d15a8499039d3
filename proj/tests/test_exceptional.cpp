#include <doctest.h>

#include "blockcensus/exceptional.hpp"

#include <algorithm>

using namespace blockcensus;

TEST_CASE("table shapes") {
    CHECK(good_prime_table().size() == 24);
    CHECK(bad_prime_table().size() == 9);
    CHECK(small_rank_table().size() == 8);
    CHECK(equality_registry().size() == 5);

    CHECK(bad_primes_for("E8") == std::vector<int>{2, 3, 5});
    CHECK(bad_primes_for("F4") == std::vector<int>{2, 3});
    CHECK(bad_primes_for("E7") == std::vector<int>{2, 3});
}

TEST_CASE("good-prime rows are strict over the admissible prime sweep") {
    for (const auto& row : good_prime_table()) {
        GoodPrimeCheck chk = verify_good_prime_row(row);
        CHECK(chk.all_strict);
        CHECK(chk.primes_checked >= 1);
    }
    // spot-check the smallest admissible primes
    auto find = [](const std::string& g, int d) {
        for (const auto& row : good_prime_table())
            if (row.group == g && row.d == d) return row;
        throw std::logic_error("row not found");
    };
    CHECK(verify_good_prime_row(find("F4", 1)).min_admissible_p == 5);
    CHECK(verify_good_prime_row(find("F4", 3)).min_admissible_p == 7);
    CHECK(verify_good_prime_row(find("E8", 4)).min_admissible_p == 13);
    CHECK(find("E8", 1).ell == 112);
    CHECK(find("E8", 1).s == 8);
    CHECK(find("E7", 4).ell == 16);
}

TEST_CASE("bad-prime rows") {
    for (const auto& row : bad_prime_table()) {
        CHECK(std::find(bad_primes_for(row.group).begin(), bad_primes_for(row.group).end(),
                        row.p) != bad_primes_for(row.group).end());
        CHECK(verify_bad_prime_row(row) == Verdict::strict);
    }
    // the rank floor at p = 2 for F4 exceeds the generic value and carries a note
    bool found = false;
    for (const auto& row : bad_prime_table())
        if (row.group == "F4" && row.p == 2) {
            found = true;
            CHECK(row.ell == 28);
            CHECK(row.s_effective == 8);
            CHECK_FALSE(row.note.empty());
        }
    CHECK(found);
}

TEST_CASE("small-rank rows") {
    int equal_rows = 0;
    for (const auto& row : small_rank_table()) {
        Verdict v = verify_small_rank_row(row);
        CHECK(v != Verdict::violation);
        CHECK(v != Verdict::bound_only);
        if (v == Verdict::equal) {
            ++equal_rows;
            CHECK(row.group == "2F4");
            CHECK(row.p == 3);
            CHECK(row.scope == "principal");
            CHECK(row.ell == 9);
            CHECK(row.s == 2);
        }
    }
    CHECK(equal_rows == 1);
}

TEST_CASE("equality registry attains the bound exactly") {
    for (const auto& c : equality_registry()) {
        CHECK(verify_equality_case(c) == Verdict::equal);
        CHECK(c.p == 3);
        CHECK(c.ell == 9);
        CHECK(c.defect_order == 27);
        CHECK(c.s == 2);
    }
    // the registry covers a generic family, not just sporadic cases
    bool generic = false;
    for (const auto& c : equality_registry())
        if (c.label.find("q^2 >= 8") != std::string::npos) generic = true;
    CHECK(generic);
}

TEST_CASE("table digest is pinned") {
    CHECK(table_digest() == 0x2b79b8f7458cf47dULL);
}
