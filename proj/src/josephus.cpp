#include "circlelang/josephus.hpp"

#include <algorithm>
#include <numeric>

namespace circlelang {

EliminationTrace eliminate(std::size_t n, std::size_t k, std::size_t count,
                           Convention convention) {
    if (n == 0) throw DomainError("eliminate: circle must be non-empty");
    if (k == 0) throw DomainError("eliminate: k must be >= 1");
    if (count > n)
        throw DomainError("eliminate: count " + std::to_string(count) + " exceeds n " +
                          std::to_string(n));
    // SkipK with k == CountK with k+1.
    const std::size_t step = (convention == Convention::CountK) ? k : k + 1;

    EliminationTrace trace;
    trace.n = n;
    trace.k = k;
    std::vector<std::size_t> alive(n);
    std::iota(alive.begin(), alive.end(), 1);
    std::size_t cursor = 0;  // index of the next position to be counted "1"
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t m = alive.size();
        const std::size_t idx = (cursor + step - 1) % m;
        trace.removed.push_back(alive[idx]);
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(idx));
        cursor = alive.empty() ? 0 : idx % alive.size();
    }
    trace.survivors = alive;
    return trace;
}

std::size_t TwoClassCircle::size() const {
    std::size_t n = 0;
    for (std::size_t run : runs) n += run;
    return n;
}

std::vector<std::string> label_circle(const TwoClassCircle& circle) {
    std::vector<std::string> labels;
    labels.reserve(circle.size());
    bool first = true;
    for (std::size_t run : circle.runs) {
        if (run == 0) throw DomainError("label_circle: zero-length run");
        const std::string& cls = first ? circle.first_class : circle.second_class;
        labels.insert(labels.end(), run, cls);
        first = !first;
    }
    return labels;
}

bool verify_arrangement(const TwoClassCircle& circle, std::size_t k,
                        Convention convention, std::size_t count) {
    const std::vector<std::string> labels = label_circle(circle);
    const EliminationTrace trace = eliminate(circle.size(), k, count, convention);
    for (std::size_t pos : trace.survivors)
        if (labels[pos - 1] != circle.first_class) return false;
    return true;
}

TwoClassCircle solve_arrangement(std::size_t first_count, std::size_t second_count,
                                 std::size_t k, Convention convention) {
    const std::size_t n = first_count + second_count;
    if (n == 0) throw DomainError("solve_arrangement: empty circle");
    const EliminationTrace trace = eliminate(n, k, second_count, convention);
    std::vector<bool> eliminated(n + 1, false);
    for (std::size_t pos : trace.removed) eliminated[pos] = true;

    TwoClassCircle circle;
    // Runs follow the circle; if position 1 was eliminated the sequence opens
    // with the eliminated class and the labels are swapped accordingly.
    const bool degenerate = eliminated[1];
    circle.first_class = degenerate ? "B" : "A";
    circle.second_class = degenerate ? "A" : "B";
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if (pos > 1 && eliminated[pos] == eliminated[pos - 1])
            ++circle.runs.back();
        else
            circle.runs.push_back(1);
    }
    return circle;
}

std::vector<std::size_t> solve_step_size(const TwoClassCircle& circle,
                                         Convention convention, std::size_t count,
                                         std::size_t k_max) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= k_max; ++k)
        if (verify_arrangement(circle, k, convention, count)) out.push_back(k);
    return out;
}

}  // namespace circlelang
