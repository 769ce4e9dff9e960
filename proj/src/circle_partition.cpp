#include "circlelang/circle_partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "circlelang/josephus.hpp"

namespace circlelang {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t gcd_sz(std::size_t a, std::size_t b) { return std::gcd(a, b); }

// Splits each group (sorted members, all the same size) into the cycles of
// the +k map on its own circle.
std::vector<std::vector<std::size_t>> split_once(
    const std::vector<std::vector<std::size_t>>& groups, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& members : groups) {
        for (const auto& sub : algorithm_a(members.size(), k)) {
            std::vector<std::size_t> mapped;
            mapped.reserve(sub.size());
            for (std::size_t local : sub) mapped.push_back(members[local - 1]);
            std::sort(mapped.begin(), mapped.end());
            out.push_back(std::move(mapped));
        }
    }
    return out;
}

// Iterates algorithm_a until exactly `target` groups exist. The caller picks
// the ring size so that the gcd chain lands on target exactly.
std::vector<std::vector<std::size_t>> split_chain(std::size_t ring, std::size_t k,
                                                  std::size_t target) {
    std::vector<std::vector<std::size_t>> groups;
    groups.emplace_back(ring);
    std::iota(groups.front().begin(), groups.front().end(), 1);
    while (groups.size() < target) {
        if (gcd_sz(groups.front().size(), k) <= 1)
            throw ConstructionFailure("group-splitting chain stalled before reaching " +
                                      std::to_string(target) + " groups");
        groups = split_once(groups, k);
    }
    if (groups.size() != target)
        throw ConstructionFailure("group-splitting chain overshot the target count");
    return groups;
}

bool is_dummy(std::size_t pos, std::size_t n) { return pos > n; }

std::size_t count_dummies(const std::vector<std::size_t>& group, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t pos : group)
        if (is_dummy(pos, n)) ++c;
    return c;
}

std::vector<std::size_t> strip_dummies(const std::vector<std::size_t>& group,
                                       std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t pos : group)
        if (!is_dummy(pos, n)) out.push_back(pos);
    return out;
}

// Designates `t` of the groups as dummy groups (the ones holding the most
// dummies, ties to the higher label), swaps real objects out of them, spreads
// the remaining dummies over the real groups so that exactly n mod r groups
// end at ceil(n/r), and strips the dummies. Group labels for swap records are
// 1-based positions in `groups`.
std::vector<std::vector<std::size_t>> settle_dummies(
    std::vector<std::vector<std::size_t>> groups, std::size_t t, std::size_t n,
    std::size_t r, PartitionTrace& trace) {
    const std::size_t total = groups.size();
    assert(total == r + t);
    for (auto& g : groups) std::sort(g.begin(), g.end());

    std::vector<bool> dummy_group(total, false);
    if (t > 0) {
        std::vector<std::size_t> order(total);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            const std::size_t dx = count_dummies(groups[x], n);
            const std::size_t dy = count_dummies(groups[y], n);
            return dx != dy ? dx > dy : x > y;
        });
        for (std::size_t i = 0; i < t; ++i) dummy_group[order[i]] = true;
    }

    auto swap_members = [&](std::size_t gi_dummy, std::size_t dummy_pos,
                            std::size_t gi_real, std::size_t real_pos) {
        // Moves dummy_pos out of gi_dummy into gi_real and real_pos back.
        auto& from = groups[gi_dummy];
        auto& to = groups[gi_real];
        from.erase(std::find(from.begin(), from.end(), dummy_pos));
        to.erase(std::find(to.begin(), to.end(), real_pos));
        from.push_back(real_pos);
        to.push_back(dummy_pos);
        std::sort(from.begin(), from.end());
        std::sort(to.begin(), to.end());
        trace.swaps.push_back({dummy_pos, real_pos, gi_dummy + 1, gi_real + 1});
    };

    // Purify dummy groups: pair reals stuck in dummy groups with dummies
    // stuck in real groups, both scanned in (label, position) order.
    std::vector<std::pair<std::size_t, std::size_t>> reals_in_dummy;
    std::vector<std::pair<std::size_t, std::size_t>> dummies_in_real;
    for (std::size_t gi = 0; gi < total; ++gi) {
        for (std::size_t pos : groups[gi]) {
            if (dummy_group[gi] && !is_dummy(pos, n)) reals_in_dummy.emplace_back(gi, pos);
            if (!dummy_group[gi] && is_dummy(pos, n)) dummies_in_real.emplace_back(gi, pos);
        }
    }
    assert(reals_in_dummy.size() <= dummies_in_real.size());
    for (std::size_t i = 0; i < reals_in_dummy.size(); ++i) {
        auto [rgi, dummy_pos] = dummies_in_real[i];
        auto [dgi, real_pos] = reals_in_dummy[i];
        swap_members(rgi, dummy_pos, dgi, real_pos);
    }

    // Rebalance: every real group must land on ceil(n/r) or floor(n/r) reals.
    std::vector<std::size_t> real_index;
    for (std::size_t gi = 0; gi < total; ++gi)
        if (!dummy_group[gi]) real_index.push_back(gi);
    assert(real_index.size() == r);
    const std::size_t group_size = groups[real_index.front()].size();
    const std::size_t lo = group_size - ceil_div(n, r);
    const std::size_t hi = group_size - n / r;
    auto dummy_counts = [&]() {
        std::vector<std::size_t> d;
        d.reserve(r);
        for (std::size_t gi : real_index) d.push_back(count_dummies(groups[gi], n));
        return d;
    };
    for (std::vector<std::size_t> d = dummy_counts();
         *std::max_element(d.begin(), d.end()) > hi ||
         *std::min_element(d.begin(), d.end()) < lo;
         d = dummy_counts()) {
        // Move one dummy from the fullest group (highest label on ties) to the
        // emptiest (lowest label on ties, keeping extra dummies at low labels).
        std::size_t src = 0, dst = 0;
        for (std::size_t i = 1; i < r; ++i) {
            if (d[i] >= d[src]) src = i;
            if (d[i] < d[dst]) dst = i;
        }
        const auto& from = groups[real_index[src]];
        const auto& to = groups[real_index[dst]];
        const std::size_t dummy_pos =
            *std::find_if(from.begin(), from.end(),
                          [&](std::size_t p) { return is_dummy(p, n); });
        const std::size_t real_pos =
            *std::find_if(to.begin(), to.end(),
                          [&](std::size_t p) { return !is_dummy(p, n); });
        swap_members(real_index[src], dummy_pos, real_index[dst], real_pos);
    }

    trace.groups_before_strip = groups;
    std::vector<std::vector<std::size_t>> out;
    out.reserve(r);
    for (std::size_t gi : real_index) out.push_back(strip_dummies(groups[gi], n));
    return out;
}

// Smallest s >= 0 with gcd(base + s, k) == want. The search is bounded; the
// dispatch only asks for values that exist.
std::size_t find_padding(std::size_t base, std::size_t k, std::size_t want) {
    const std::size_t bound = base + 2 * k * (want + 2) + 4;
    for (std::size_t s = 0; base + s <= bound; ++s)
        if (gcd_sz(base + s, k) == want) return s;
    throw ConstructionFailure("no dummy padding with gcd(" + std::to_string(base) +
                              "+s, " + std::to_string(k) + ") = " + std::to_string(want));
}

// Smallest R >= r whose prime factors all divide k. Group counts reachable by
// iterated +k splitting are exactly these.
std::size_t smallest_smooth_at_least(std::size_t r, std::size_t k) {
    for (std::size_t cand = r;; ++cand) {
        std::size_t x = cand;
        for (std::size_t p = 2; p <= k; ++p) {
            if (k % p != 0) continue;
            while (x % p == 0) x /= p;
        }
        if (x == 1) return cand;
    }
}

}  // namespace

PartitionSpec::PartitionSpec(std::size_t n_, std::size_t r_, std::size_t k_)
    : n(n_), r(r_), k(k_) {
    if (n == 0) throw DomainError("partition: n must be >= 1");
    if (r == 0 || r > n) throw DomainError("partition: need 1 <= r <= n");
    if (k == 0) throw DomainError("partition: k must be >= 1");
    k = (k - 1) % n + 1;
}

std::vector<std::vector<std::size_t>> algorithm_a(std::size_t m, std::size_t k) {
    if (m == 0 || k == 0) throw DomainError("algorithm_a: m and k must be >= 1");
    std::vector<bool> seen(m + 1, false);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t start = 1; start <= m; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cycle;
        std::size_t pos = start;
        while (!seen[pos]) {
            seen[pos] = true;
            cycle.push_back(pos);
            pos = (pos - 1 + k) % m + 1;
        }
        std::sort(cycle.begin(), cycle.end());
        groups.push_back(std::move(cycle));
    }
    return groups;
}

std::vector<std::vector<std::size_t>> algorithm_b(std::size_t m, std::size_t k) {
    return split_once(algorithm_a(m, k), k);
}

PartitionResult partition_removal(const PartitionSpec& spec) {
    const std::size_t n = spec.n, r = spec.r, k = spec.k;
    // Pad to the next multiple of r. The padded ring then splits into r
    // groups of exactly ceil(n/r); every dummy is swapped into a distinct
    // group, so no dummy groups are ever needed (a = 0, b = s).
    const std::size_t s = (r - n % r) % r;
    const std::size_t ring = n + s;
    const std::size_t quota = ring / r;

    PartitionResult result;
    result.mode = "removal";
    result.trace.case_label = "removal";
    result.trace.s = s;
    result.trace.a = 0;
    result.trace.b = s;

    EliminationTrace order = eliminate(ring, k, ring, Convention::CountK);
    result.trace.elimination_order = order.removed;

    std::vector<std::vector<std::size_t>> groups(r);
    std::size_t current = 0;
    std::size_t dummies_seen = 0;
    for (std::size_t pos : order.removed) {
        if (is_dummy(pos, n)) {
            const std::size_t target = dummies_seen++;  // i-th dummy -> group i
            if (target == current) {
                groups[current].push_back(pos);
            } else if (groups[target].size() < quota) {
                groups[target].push_back(pos);
                continue;  // keep filling `current` with real objects
            } else {
                // Group `target` is complete: trade its lowest real object.
                auto& tg = groups[target];
                auto it = std::min_element(tg.begin(), tg.end());
                const std::size_t real_pos = *it;
                tg.erase(it);
                tg.push_back(pos);
                groups[current].push_back(real_pos);
                result.trace.swaps.push_back({pos, real_pos, current + 1, target + 1});
            }
        } else {
            groups[current].push_back(pos);
        }
        while (current + 1 < r && groups[current].size() >= quota) ++current;
    }

    for (auto& g : groups) std::sort(g.begin(), g.end());
    result.trace.groups_before_strip = groups;
    for (auto& g : groups) g = strip_dummies(g, n);
    result.groups = std::move(groups);
    return result;
}

PartitionResult partition_nonremoval(const PartitionSpec& spec) {
    const std::size_t n = spec.n, r = spec.r, k = spec.k;
    PartitionResult result;
    result.mode = "non-removal";
    PartitionTrace& trace = result.trace;

    if (k >= r && k % r == 0) {
        // Case 1.1: one splitting pass gives exactly r cycles once the ring
        // size satisfies gcd(ring, k) = r.
        trace.case_label = "1.1";
        trace.s = find_padding(n, k, r);
        auto groups = algorithm_a(n + trace.s, k);
        result.groups = settle_dummies(std::move(groups), 0, n, r, trace);
        return result;
    }
    if (k >= r) {
        // Case 1.2: k is not a multiple of r; pad with whole dummy groups
        // until the group count divides k, then proceed as in 1.1.
        trace.case_label = "1.2";
        std::size_t t = 1;
        while (k % (r + t) != 0) ++t;
        trace.t = t;
        const std::size_t padded = n + t * ceil_div(n, r);
        trace.s = find_padding(padded, k, r + t);
        auto groups = algorithm_a(padded + trace.s, k);
        result.groups = settle_dummies(std::move(groups), t, n, r, trace);
        return result;
    }
    if (k == 1) {
        // Case 2.3: stepping by one is just consecutive blocks.
        trace.case_label = "2.3";
        result.groups.reserve(r);
        std::size_t pos = 1;
        for (std::size_t gi = 0; gi < r; ++gi) {
            const std::size_t size = gi < n % r ? ceil_div(n, r) : n / r;
            std::vector<std::size_t> g(size);
            std::iota(g.begin(), g.end(), pos);
            pos += size;
            result.groups.push_back(std::move(g));
        }
        trace.groups_before_strip = result.groups;
        return result;
    }
    if (r % k == 0 && k % (r / k) == 0) {
        // Case 2.1: two splitting passes. The ring must satisfy k | ring and
        // gcd(ring/k, k) = r/k so the passes give k then r/k groups. This
        // padding rule replaces an unusable one; the trace flags it.
        for (std::size_t s = 0; s < k * r; ++s) {
            if ((n + s) % k != 0 || gcd_sz((n + s) / k, k) != r / k) continue;
            trace.case_label = "2.1";
            trace.substitute_condition = true;
            trace.s = s;
            auto groups = split_chain(n + s, k, r);
            result.groups = settle_dummies(std::move(groups), 0, n, r, trace);
            return result;
        }
        // No ring size works (possible when r/k shares no factor with k);
        // fall through to the dummy-group route.
    }
    // Case 2.2: iterated splitting can only produce group counts whose prime
    // factors divide k, so pad up to the nearest such count with dummy
    // groups. A group size coprime to k makes the chain stop at exactly that
    // count.
    trace.case_label = "2.2";
    const std::size_t target = smallest_smooth_at_least(r, k);
    trace.t = target - r;
    std::size_t group_size = ceil_div(n, r);
    while (gcd_sz(group_size, k) != 1) ++group_size;
    const std::size_t ring = target * group_size;
    trace.s = ring - n - trace.t * group_size;
    auto groups = split_chain(ring, k, target);
    result.groups = settle_dummies(std::move(groups), trace.t, n, r, trace);
    return result;
}

bool is_balanced(const PartitionResult& result, std::size_t n, std::size_t r) {
    if (result.groups.size() != r) return false;
    std::vector<std::size_t> all;
    all.reserve(n);
    std::size_t larger = 0;
    for (const auto& g : result.groups) {
        if (g.size() == ceil_div(n, r))
            ++larger;
        else if (g.size() != n / r)
            return false;
        all.insert(all.end(), g.begin(), g.end());
    }
    if (n % r != 0 && larger != n % r) return false;
    if (all.size() != n) return false;
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < n; ++i)
        if (all[i] != i + 1) return false;
    return true;
}

}  // namespace circlelang
