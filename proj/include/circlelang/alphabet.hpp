#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circlelang/errors.hpp"
#include "circlelang/text.hpp"

namespace circlelang {

// Counting results exceed 64 bits quickly (r^n, n!), so everything is exact
// arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

class OverlappingClasses : public Error {
public:
    using Error::Error;
};

class EmptyClass : public Error {
public:
    using Error::Error;
};

class UnknownSymbol : public Error {
public:
    using Error::Error;
};

class InvalidVector : public Error {
public:
    using Error::Error;
};

// A finite alphabet carved into named, pairwise-disjoint symbol classes.
// Class indices are 0-based declaration order and stable. `complete` records
// whether the class union is the whole alphabet. `fold_case` is set on the
// built-in English partition so that CLI-level inputs are uppercased before
// lookup; custom alphabets are case-exact.
class PartitionedAlphabet {
public:
    struct SymbolClass {
        std::string name;
        SymbolString symbols;  // sorted, unique
    };

    const std::vector<SymbolClass>& classes() const { return classes_; }
    std::size_t num_classes() const { return classes_.size(); }
    bool complete() const { return complete_; }
    bool fold_case() const { return fold_case_; }

    // Index of the class containing `cp`, or nullopt when unclassified.
    std::optional<std::size_t> class_of(Symbol cp) const;
    bool contains(Symbol cp) const { return class_of(cp).has_value(); }

    const std::string& class_name(std::size_t index) const {
        return classes_.at(index).name;
    }

private:
    friend PartitionedAlphabet build_alphabet(
        std::vector<std::pair<std::string, SymbolString>> classes, bool complete);
    friend PartitionedAlphabet english_partition();

    std::vector<SymbolClass> classes_;
    bool complete_ = true;
    bool fold_case_ = false;
};

// Validates disjointness and non-emptiness; class order is kept as given.
// Throws OverlappingClasses or EmptyClass.
PartitionedAlphabet build_alphabet(
    std::vector<std::pair<std::string, SymbolString>> classes, bool complete = true);

// The built-in 26-letter uppercase partition: "straight" (15 letters drawn
// with straight lines only) and "curved" (the 11 letters with a curve).
PartitionedAlphabet english_partition();

// One maximal run: a letter multiset (stored as a sorted symbol sequence with
// multiplicity, which makes equality canonical) plus the class it came from.
struct GrlRun {
    SymbolString letters;     // sorted, length == run length
    std::size_t class_index;  // into PartitionedAlphabet::classes()

    std::size_t length() const { return letters.size(); }
    bool operator==(const GrlRun&) const = default;
};

// Generalized run-length encoding: maximal runs of same-class letters,
// adjacent runs from different classes.
class GrlEncoding {
public:
    GrlEncoding() = default;
    explicit GrlEncoding(std::vector<GrlRun> runs) : runs_(std::move(runs)) {}

    const std::vector<GrlRun>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    std::size_t num_runs() const { return runs_.size(); }
    std::size_t total_length() const;

    bool operator==(const GrlEncoding&) const = default;

private:
    std::vector<GrlRun> runs_;
};

// Throws UnknownSymbol for any code point outside all classes; stripping
// non-alphabet characters is the caller's job. Empty text gives zero runs.
GrlEncoding grl_encode(const PartitionedAlphabet& alphabet, const SymbolString& text);

// The integer sequence (k_1, ..., k_m) of run lengths.
std::vector<std::size_t> run_pattern(const GrlEncoding& enc);

// A sequence of group labels, one per position. Labels are opaque; the
// counting operations use 1..r.
using Arrangement = std::vector<unsigned>;

// Class-level run: (group label, run length).
struct AbstractRun {
    unsigned label;
    std::size_t length;
    bool operator==(const AbstractRun&) const = default;
};
using AbstractGrlVector = std::vector<AbstractRun>;

// Merges maximal runs of equal labels. Inverse of psi_expand.
AbstractGrlVector phi_compress(const Arrangement& a);

// Expands each run; throws InvalidVector on a zero-length run or equal
// adjacent labels.
Arrangement psi_expand(const AbstractGrlVector& v);

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);

// Number of arrangements of n positions over r groups: r^n.
BigInt count_all(std::size_t n, std::size_t r);

// Stirling numbers of the second kind via the standard recurrence.
BigInt stirling2(std::size_t n, std::size_t r);

// Arrangements using every one of the r groups: sum_i (-1)^i C(r,i)(r-i)^n,
// which equals r! * S(n,r).
BigInt count_surjective(std::size_t n, std::size_t r);

// Balanced arrangements (exactly n mod r groups appear ceil(n/r) times).
// Throws DomainError when n < r.
BigInt count_balanced(std::size_t n, std::size_t r);

}  // namespace circlelang
