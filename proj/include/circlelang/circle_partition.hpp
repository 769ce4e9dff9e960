#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circlelang/errors.hpp"

namespace circlelang {

class ConstructionFailure : public Error {
public:
    using Error::Error;
};

// Parameters for splitting positions 1..n into r balanced groups by stepping
// around a circle. k is reduced to ((k-1) mod n) + 1 on construction, since
// stepping by k and by k mod n visit the same positions.
struct PartitionSpec {
    std::size_t n;
    std::size_t r;
    std::size_t k;

    PartitionSpec(std::size_t n_, std::size_t r_, std::size_t k_);
};

struct DummySwap {
    std::size_t dummy_position;
    std::size_t real_position;
    std::size_t from_group;  // 1-based label of the group the dummy left
    std::size_t to_group;    // 1-based label of the group the dummy entered
};

// Intermediate bookkeeping, mostly so tests can pin down the construction:
// s extra dummy objects, t dummy groups, the a/b split of removal mode, the
// removal-mode elimination order over the padded ring, group contents before
// dummies are stripped, and every dummy/real swap performed.
struct PartitionTrace {
    std::string case_label;  // "removal", "1.1", "1.2", "2.1", "2.2", "2.3"
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    bool substitute_condition = false;  // set whenever the 2.1 padding rule ran
    std::vector<std::size_t> elimination_order;           // removal mode only
    std::vector<std::vector<std::size_t>> groups_before_strip;
    std::vector<DummySwap> swaps;
};

struct PartitionResult {
    std::vector<std::vector<std::size_t>> groups;  // construction order, members sorted
    std::string mode;                              // "removal" | "non-removal"
    PartitionTrace trace;
};

// Josephus-style construction: pad with dummies until r divides the ring,
// eliminate everything with step k, deal the elimination order into r groups
// of equal size, routing the i-th dummy encountered into group i, then strip
// the dummies.
PartitionResult partition_removal(const PartitionSpec& spec);

// Fixed-position construction: split the (padded) circle into cycles of the
// +k map, repeatedly when one pass is not enough, then swap dummies around
// until the real groups are balanced and strip them.
PartitionResult partition_nonremoval(const PartitionSpec& spec);

// Cycles of the +k map on a circle of m positions: gcd(m,k) groups of
// m/gcd(m,k), group 1 starting at position 1, each later group at the lowest
// unvisited position. Members sorted.
std::vector<std::vector<std::size_t>> algorithm_a(std::size_t m, std::size_t k);

// algorithm_a, then algorithm_a again on each group laid out on its own
// circle in increasing-position order: gcd(m,k)*gcd(m/gcd(m,k),k) groups.
std::vector<std::vector<std::size_t>> algorithm_b(std::size_t m, std::size_t k);

// True iff `groups` partitions 1..n into r groups with exactly n mod r of
// size ceil(n/r) and the rest of size floor(n/r).
bool is_balanced(const PartitionResult& result, std::size_t n, std::size_t r);

}  // namespace circlelang
