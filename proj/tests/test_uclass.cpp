#include <doctest.h>

#include "blockcensus/uclass.hpp"

#include <algorithm>

using namespace blockcensus;

TEST_CASE("class parameters for C_2") {
    auto params = enumerate_class_params(LieType::C, 2);
    CHECK(params.size() == 4);  // (2|-), (11|-), (1|1), (-|2)
    for (const auto& pr : params) {
        CHECK(partition_sum(pr.alpha) + partition_sum(pr.beta) == 2);
        auto beta = pr.beta;
        std::sort(beta.begin(), beta.end());
        CHECK(std::adjacent_find(beta.begin(), beta.end()) == beta.end());
        CHECK_FALSE(pr.degenerate);
    }
    CHECK(count_classes_upper(LieType::C, 2) == 6);
}

TEST_CASE("parameter shapes for B and D") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& pr : enumerate_class_params(LieType::B, n)) {
            CHECK(2 * partition_sum(pr.alpha) + partition_sum(pr.beta) == 2 * n + 1);
            for (int part : pr.beta) CHECK(part % 2 == 1);
            auto beta = pr.beta;
            std::sort(beta.begin(), beta.end());
            CHECK(std::adjacent_find(beta.begin(), beta.end()) == beta.end());
        }
        int degenerate = 0;
        for (const auto& pr : enumerate_class_params(LieType::D, n)) {
            CHECK(2 * partition_sum(pr.alpha) + partition_sum(pr.beta) == 2 * n);
            if (pr.degenerate) {
                ++degenerate;
                CHECK(pr.beta.empty());
                for (int part : pr.alpha) CHECK(part % 2 == 0);
            }
        }
        // degenerate parameters = partitions of n with all parts even doubled
        // from partitions of n/2... just pin the small values
        if (n == 4) CHECK(degenerate == 2);  // (4) and (2,2)
        if (n == 1) CHECK(degenerate == 0);  // alpha = (1) is odd
    }
}

TEST_CASE("exact unipotent class counts") {
    REQUIRE(count_classes_exact(LieType::C, 2).has_value());
    CHECK(*count_classes_exact(LieType::C, 2) == 5);
    CHECK(*count_classes_exact(LieType::B, 3) == 10);
    CHECK(*count_classes_exact(LieType::B, 4) == 21);
    CHECK(*count_classes_exact(LieType::D, 4) == 13);
    CHECK(*count_classes_exact(LieType::D, 5) == 18);
    CHECK(*count_classes_exact(LieType::D, 6) == 37);
}

TEST_CASE("exact counts never exceed the per-parameter bounds where comparable") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(*count_classes_exact(LieType::B, n) <= count_classes_upper(LieType::B, n));
        CHECK(*count_classes_exact(LieType::D, n) <= count_classes_upper(LieType::D, n));
    }
    for (int n = 1; n <= 16; ++n) {
        auto exact = count_classes_exact(LieType::C, n);
        REQUIRE(exact.has_value());
        CHECK(*exact <= count_classes_upper(LieType::C, n));
    }
    // beyond n = 16 the two routes stop being comparable; the exact route is withheld
    CHECK_FALSE(count_classes_exact(LieType::C, 17).has_value());
    CHECK_FALSE(count_classes_exact(LieType::TwistedD, 4).has_value());
}

TEST_CASE("closed-form bounds dominate the per-parameter sums") {
    for (int n = 1; n <= 22; ++n) {
        for (LieType t : {LieType::B, LieType::C, LieType::D})
            CHECK(count_classes_upper(t, n) <= closed_form_class_bound(t, n));
        if (n % 2 == 0) {
            CHECK(count_classes_upper(LieType::D, n) <= secondary_d_class_bound(n));
            CHECK(secondary_d_class_bound(n) <= closed_form_class_bound(LieType::D, n));
        }
    }
}

TEST_CASE("split exponents count the relevant part values") {
    ClassParam pc{LieType::C, 2, {2}, {}, false};
    CHECK(split_exponent_upper(pc) == 1);  // one distinct even value
    ClassParam pc2{LieType::C, 2, {1, 1}, {}, false};
    CHECK(split_exponent_upper(pc2) == 0);
    ClassParam pb{LieType::B, 3, {2}, {3}, false};
    CHECK(split_exponent_upper(pb) == 1);  // odd values: {3}
}
