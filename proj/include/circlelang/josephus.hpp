#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circlelang/errors.hpp"

namespace circlelang {

// Two readings of "step size k" exist in circle-elimination lore:
//   CountK — the k-th counted position is removed (first removed is k);
//   SkipK  — k positions are skipped, the next is removed (first is k+1).
// CountK with k+1 and SkipK with k are the same process.
enum class Convention { CountK, SkipK };

struct EliminationTrace {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::size_t> removed;    // in elimination order
    std::vector<std::size_t> survivors;  // ascending
};

// Eliminates `count` positions from a circle of n. Counting starts at
// position 1 (which is itself counted); after each removal counting resumes
// from the next remaining position, and removed positions are never counted.
// Throws DomainError when count > n. Requires n >= 1, k >= 1.
EliminationTrace eliminate(std::size_t n, std::size_t k, std::size_t count,
                           Convention convention = Convention::CountK);

// A circle of positions labeled with two alternating classes, recorded as a
// run-length sequence. Run 1 carries first_class, run 2 second_class, etc.
struct TwoClassCircle {
    std::vector<std::size_t> runs;  // all >= 1
    std::string first_class = "A";
    std::string second_class = "B";

    std::size_t size() const;
};

// Class label of each position, in order.
std::vector<std::string> label_circle(const TwoClassCircle& circle);

// True iff every survivor of eliminate(n, k, count, convention) sits in a
// first_class run.
bool verify_arrangement(const TwoClassCircle& circle, std::size_t k,
                        Convention convention, std::size_t count);

// Builds the mnemonic circle: eliminates second_count positions from a circle
// of first_count + second_count; survivors get the first class, eliminated
// positions the second. When position 1 is eliminated the sequence starts
// with the eliminated class, so the returned circle's first_class is "B" and
// second_class "A" (the circle is relabeled, not rejected); only in that
// degenerate case does the result fail verify_arrangement.
TwoClassCircle solve_arrangement(std::size_t first_count, std::size_t second_count,
                                 std::size_t k, Convention convention = Convention::CountK);

// All step sizes k in [1..k_max] for which verify_arrangement holds,
// ascending. The CLI defaults k_max to 3n.
std::vector<std::size_t> solve_step_size(const TwoClassCircle& circle,
                                         Convention convention, std::size_t count,
                                         std::size_t k_max);

}  // namespace circlelang
