#include <doctest.h>

#include "blockcensus/linear.hpp"
#include "blockcensus/multipartition.hpp"

#include <algorithm>

using namespace blockcensus;

TEST_CASE("multiplicative orders") {
    CHECK(mult_order(3, 5) == 4);
    CHECK(mult_order(3, 2) == 1);
    CHECK(mult_order(-2, 3) == 1);  // -2 = 1 mod 3
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(-1, 5) == 2);
    CHECK_THROWS(mult_order(5, 5));
}

TEST_CASE("p-prime parts") {
    CHECK(pprime_part(48, 2) == 3);
    CHECK(pprime_part(48, 3) == 16);
    CHECK(pprime_part(48, 5) == 48);
    CHECK(pprime_part(1, 7) == 1);
}

TEST_CASE("orbit counts over the signed base") {
    CHECK(signed_orbit_count(3, 1, 2) == 1);
    CHECK(signed_orbit_count(2, 2, 3) == 0);
    CHECK(signed_orbit_count(2, 1, 7) == 1);
    CHECK(signed_orbit_count(-2, 2, 3) == 0);
    CHECK(count_irr_polys_pprime(3, 1, 2) == 1);

    // orbit sizes sum to the restricted cyclic-group order
    for (long long q : {2, 3}) {
        for (int p : {2, 3, 5, 7}) {
            if (q % p == 0) continue;
            for (long long sq : {q, -q}) {
                for (int F = 1; F <= 8; ++F) {
                    BigCount total = 0;
                    for (int f = 1; f <= F; ++f)
                        if (F % f == 0) total += BigCount(f) * signed_orbit_count(sq, f, p);
                    BigCount order = pow_big(sq, static_cast<unsigned>(F)) - 1;
                    if (order < 0) order = -order;
                    CHECK(total == pprime_part(order, p));
                }
            }
        }
    }
}

TEST_CASE("unipotent blocks of the linear group") {
    for (int n = 1; n <= 10; ++n) {
        for (auto [q, p] : std::vector<std::pair<long long, int>>{{2, 3}, {3, 2}, {2, 7}}) {
            int d = mult_order(q, p);
            BigCount total = 0;
            for (const auto& b : gl_unipotent_blocks(n, q, p)) {
                CHECK(is_d_core(b.core, d));
                CHECK((n - partition_sum(b.core)) % d == 0);
                CHECK(b.ell == count_multipartitions(d, b.weight));
                total += b.ell;
            }
            CHECK(total == partition_count(n));
        }
    }
}

TEST_CASE("centralizer shapes cover the dimension") {
    for (int n = 1; n <= 4; ++n) {
        for (long long sq : {2, 3, -2, -3}) {
            for (int p : {2, 3, 5}) {
                if ((sq % p + p) % p == 0) continue;
                for (const auto& shape : enumerate_shapes(n, sq, p)) {
                    int dim = 0;
                    for (const auto& fac : shape.factors) dim += fac.f * fac.m;
                    CHECK(dim == n);
                    CHECK(shape.num_choices >= 1);
                    CHECK(std::is_sorted(shape.factors.rbegin(), shape.factors.rend()));
                }
            }
        }
    }
}

TEST_CASE("block censuses for linear and unitary groups") {
    for (int n = 1; n <= 4; ++n) {
        for (long long q : {2, 3, 4, 5}) {
            for (bool unitary : {false, true}) {
                for (int p : valid_primes(n, q, unitary)) {
                    GlCensus c = gl_block_census(n, q, p, unitary);
                    CHECK(c.ok);
                    CHECK(c.sum_blocks == c.sum_shapes);
                    CHECK(c.sum_shapes == c.series);
                    for (const auto& row : c.rows) {
                        CHECK(row.verdict != Verdict::violation);
                        REQUIRE(row.cert.ell_exact.has_value());
                        if (row.cert.s_lower >= 1) CHECK(row.verdict == Verdict::strict);
                    }
                }
            }
        }
    }

    // p-regular class counts for the anchor groups
    CHECK(gl_block_census(2, 3, 2, false).sum_blocks == 2);
    CHECK(gl_block_census(2, 2, 3, true).sum_blocks == 2);
}

TEST_CASE("total class counts") {
    for (long long q : {2, 3, 4, 5}) {
        CHECK(count_all_classes(2, q, false) == q * q - 1);
        CHECK(count_all_classes(2, q, true) == (q + 1) * (q + 1));
    }
}

TEST_CASE("valid primes come from the torus orders") {
    auto pr = valid_primes(2, 3, false);  // |GL_2(3)| visible part: (3-1)(9-1) -> {2}
    CHECK(std::find(pr.begin(), pr.end(), 2) != pr.end());
    CHECK(std::find(pr.begin(), pr.end(), 3) == pr.end());
    pr = valid_primes(3, 5, false);  // 5^3 - 1 = 124 = 4 * 31
    CHECK(std::find(pr.begin(), pr.end(), 31) != pr.end());
    for (int p : pr) CHECK(5 % p != 0);
}

TEST_CASE("determinant-kernel certificates") {
    // p does not divide q - 1: the ambient census transfers
    SlSuResult r = sl_su_verify(2, 5, 3, false);
    CHECK(r.inherited);
    REQUIRE(!r.rows.empty());
    for (const auto& row : r.rows) {
        CHECK(row.group == "SL");
        CHECK(row.verdict != Verdict::violation);
        REQUIRE(!row.cert.trace.empty());
        CHECK(row.cert.trace.back() == "inherited-from-ambient-census");
    }

    // p = 2 divides q - 1 = 4: shape-by-shape certificates
    r = sl_su_verify(2, 5, 2, false);
    CHECK_FALSE(r.inherited);
    bool saw_quaternion = false, saw_torus = false;
    for (const auto& row : r.rows) {
        CHECK(row.verdict != Verdict::violation);
        if (!row.cert.trace.empty() && row.cert.trace.front() == "quaternion-defect") {
            saw_quaternion = true;
            REQUIRE(row.cert.ell_exact.has_value());
            CHECK(*row.cert.ell_exact == 3);
            CHECK(row.cert.s_lower == 2);
            CHECK(row.verdict == Verdict::strict);
        }
        if (!row.cert.trace.empty() && (row.cert.trace.front() == "cyclic-defect" ||
                                        row.cert.trace.front() == "defect-zero-after-restriction"))
            saw_torus = true;
        if (row.verdict == Verdict::bound_only)
            CHECK(std::find(row.cert.trace.begin(), row.cert.trace.end(), "inconclusive") !=
                  row.cert.trace.end());
    }
    CHECK(saw_quaternion);
    CHECK(saw_torus);

    // unitary edge: p = 3 divides q + 1 = 3
    r = sl_su_verify(2, 2, 3, true);
    CHECK_FALSE(r.inherited);
    bool saw_sylow = false;
    for (const auto& row : r.rows) {
        CHECK(row.group == "SU");
        CHECK(row.verdict != Verdict::violation);
        if (!row.cert.trace.empty() && row.cert.trace.front() == "cyclic-sylow-restriction") {
            saw_sylow = true;
            CHECK(row.cert.ell_upper == 2);
            CHECK(row.cert.s_lower == 1);
            CHECK(row.verdict == Verdict::strict);
        }
    }
    CHECK(saw_sylow);
}
