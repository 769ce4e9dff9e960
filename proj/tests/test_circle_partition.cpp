#include <doctest.h>

#include <numeric>

#include "circlelang/circle_partition.hpp"

using namespace circlelang;

using Groups = std::vector<std::vector<std::size_t>>;

TEST_CASE("removal approach on the worked 10/3/4 instance") {
    const PartitionResult result = partition_removal(PartitionSpec(10, 3, 4));
    // The selection-order table is authoritative for this instance.
    CHECK(result.trace.elimination_order ==
          std::vector<std::size_t>{4, 8, 12, 5, 10, 3, 11, 7, 6, 9, 2, 1});
    CHECK(result.groups == Groups{{4, 5, 8}, {3, 7, 10}, {1, 2, 6, 9}});
    CHECK(result.trace.s == 2);
    CHECK(result.trace.a == 0);
    CHECK(result.trace.b == 2);
    // Both dummies were routed directly, no swaps.
    CHECK(result.trace.swaps.empty());
    CHECK(result.trace.groups_before_strip ==
          Groups{{4, 5, 8, 12}, {3, 7, 10, 11}, {1, 2, 6, 9}});
    CHECK(is_balanced(result, 10, 3));
}

TEST_CASE("removal approach: n = r gives singletons in elimination order") {
    const PartitionResult result = partition_removal(PartitionSpec(5, 5, 2));
    CHECK(result.groups == Groups{{2}, {4}, {1}, {5}, {3}});
    CHECK(result.trace.s == 0);
}

TEST_CASE("removal approach on 7/2/3 exercises the dummy swap") {
    const PartitionResult result = partition_removal(PartitionSpec(7, 2, 3));
    CHECK(result.groups == Groups{{3, 5, 6}, {1, 2, 4, 7}});
    // The single dummy (position 8) was encountered after group 1 filled, so
    // it displaced the lowest real object of group 1.
    REQUIRE(result.trace.swaps.size() == 1);
    CHECK(result.trace.swaps[0].dummy_position == 8);
    CHECK(result.trace.swaps[0].real_position == 1);
    CHECK(result.trace.swaps[0].to_group == 1);
    CHECK(is_balanced(result, 7, 2));
}

TEST_CASE("algorithm A worked examples") {
    CHECK(algorithm_a(12, 4) == Groups{{1, 5, 9}, {2, 6, 10}, {3, 7, 11}, {4, 8, 12}});
    CHECK(algorithm_a(5, 5) == Groups{{1}, {2}, {3}, {4}, {5}});
    CHECK(algorithm_a(6, 4) == Groups{{1, 3, 5}, {2, 4, 6}});
}

TEST_CASE("algorithm A structure for all small inputs") {
    for (std::size_t m = 1; m <= 30; ++m) {
        for (std::size_t k = 1; k <= 2 * m; ++k) {
            const Groups groups = algorithm_a(m, k);
            const std::size_t g = std::gcd(m, k);
            CHECK(groups.size() == g);
            std::vector<bool> seen(m + 1, false);
            for (const auto& group : groups) {
                CHECK(group.size() == m / g);
                for (std::size_t pos : group) {
                    CHECK(!seen[pos]);
                    seen[pos] = true;
                }
            }
        }
    }
}

TEST_CASE("algorithm B worked examples") {
    CHECK(algorithm_b(12, 2) == Groups{{1, 5, 9}, {3, 7, 11}, {2, 6, 10}, {4, 8, 12}});
    CHECK(algorithm_b(8, 2) == Groups{{1, 5}, {3, 7}, {2, 6}, {4, 8}});
    CHECK(algorithm_b(9, 1) == Groups{{1, 2, 3, 4, 5, 6, 7, 8, 9}});
}

TEST_CASE("algorithm B structure for all small inputs") {
    for (std::size_t m = 1; m <= 30; ++m) {
        for (std::size_t k = 1; k <= 2 * m; ++k) {
            const Groups groups = algorithm_b(m, k);
            const std::size_t g = std::gcd(m, k);
            const std::size_t f = std::gcd(m / g, k);
            CHECK(groups.size() == g * f);
            std::vector<bool> seen(m + 1, false);
            for (const auto& group : groups) {
                CHECK(group.size() == m / (g * f));
                for (std::size_t pos : group) {
                    CHECK(!seen[pos]);
                    seen[pos] = true;
                }
            }
        }
    }
}

TEST_CASE("non-removal worked examples") {
    const PartitionResult ex2 = partition_nonremoval(PartitionSpec(10, 4, 4));
    CHECK(ex2.groups == Groups{{1, 5, 9}, {2, 6, 10}, {3, 7}, {4, 8}});
    CHECK(ex2.trace.case_label == "1.1");
    CHECK(ex2.trace.s == 2);

    const PartitionResult ex3 = partition_nonremoval(PartitionSpec(12, 3, 4));
    CHECK(ex3.groups == Groups{{1, 4, 5, 9}, {2, 6, 8, 10}, {3, 7, 11, 12}});
    CHECK(ex3.trace.case_label == "1.2");
    CHECK(ex3.trace.t == 1);
    // Before stripping: three dummy/real swaps emptied the dummy group.
    CHECK(ex3.trace.swaps.size() == 3);
    CHECK(ex3.trace.groups_before_strip ==
          Groups{{1, 4, 5, 9}, {2, 6, 8, 10}, {3, 7, 11, 12}, {13, 14, 15, 16}});

    const PartitionResult direct = partition_nonremoval(PartitionSpec(7, 3, 1));
    CHECK(direct.groups == Groups{{1, 2, 3}, {4, 5}, {6, 7}});
    CHECK(direct.trace.case_label == "2.3");
}

TEST_CASE("non-removal case 2.1 uses the substitute padding rule") {
    // k = 2 < r = 4, gcd(4, 2) = 2 = k, and (r/k) | k.
    const PartitionResult result = partition_nonremoval(PartitionSpec(9, 4, 2));
    CHECK(result.trace.case_label == "2.1");
    CHECK(result.trace.substitute_condition);
    CHECK(is_balanced(result, 9, 4));
}

TEST_CASE("non-removal case 2.2 covers counts unreachable by two passes") {
    // r = 10, k = 3: no multiple of 3 at or above 10 is a pure power of 3, so
    // the padded group count is 27.
    const PartitionResult result = partition_nonremoval(PartitionSpec(30, 10, 3));
    CHECK(result.trace.case_label == "2.2");
    CHECK(result.trace.t == 17);
    CHECK(is_balanced(result, 30, 10));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(PartitionSpec(0, 1, 1), DomainError);
    CHECK_THROWS_AS(PartitionSpec(3, 4, 1), DomainError);
    CHECK_THROWS_AS(PartitionSpec(3, 0, 1), DomainError);
    CHECK_THROWS_AS(PartitionSpec(3, 1, 0), DomainError);
    // Step size wraps around the circle.
    CHECK(PartitionSpec(10, 3, 14).k == 4);
    CHECK(PartitionSpec(10, 3, 10).k == 10);
    CHECK(PartitionSpec(10, 3, 20).k == 10);
}

TEST_CASE("is_balanced rejects malformed partitions") {
    PartitionResult ok;
    ok.groups = {{1}, {2, 3}};
    CHECK(is_balanced(ok, 3, 2));

    PartitionResult overlap;
    overlap.groups = {{1, 2}, {1, 3}};
    CHECK_FALSE(is_balanced(overlap, 3, 2));

    PartitionResult uneven;
    uneven.groups = {{1, 2, 3}, {4}};
    CHECK_FALSE(is_balanced(uneven, 4, 2));

    PartitionResult incomplete;
    incomplete.groups = {{1}, {3}};
    CHECK_FALSE(is_balanced(incomplete, 3, 2));
}

TEST_CASE("both modes stay balanced on a medium sweep") {
    for (std::size_t n = 1; n <= 18; ++n) {
        for (std::size_t r = 1; r <= n; ++r) {
            for (std::size_t k = 1; k <= 2 * n; ++k) {
                const PartitionSpec spec(n, r, k);
                CHECK(is_balanced(partition_removal(spec), n, r));
                CHECK(is_balanced(partition_nonremoval(spec), n, r));
            }
        }
    }
}

TEST_CASE("step sizes equivalent modulo n give identical partitions") {
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::size_t r = 1; r <= n; ++r) {
            for (std::size_t k = 1; k <= 2 * n; ++k) {
                const std::size_t reduced = (k - 1) % n + 1;
                CHECK(partition_removal(PartitionSpec(n, r, k)).groups ==
                      partition_removal(PartitionSpec(n, r, reduced)).groups);
                CHECK(partition_nonremoval(PartitionSpec(n, r, k)).groups ==
                      partition_nonremoval(PartitionSpec(n, r, reduced)).groups);
            }
        }
    }
}

TEST_CASE("construction is deterministic") {
    const PartitionSpec spec(23, 7, 5);
    const PartitionResult a = partition_nonremoval(spec);
    const PartitionResult b = partition_nonremoval(spec);
    CHECK(a.groups == b.groups);
    CHECK(partition_removal(spec).groups == partition_removal(spec).groups);
}
