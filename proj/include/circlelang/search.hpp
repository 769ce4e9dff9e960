#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlelang/alphabet.hpp"
#include "circlelang/errors.hpp"
#include "circlelang/grammar.hpp"

namespace circlelang {

class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

class PatternMismatch : public Error {
public:
    using Error::Error;
};

enum class SearchMode { Exhaustive, Maximal };

// One block-constrained sentence problem: a two-class alphabet, the required
// run lengths, the dictionary, and the grammar over it.
struct SearchInstance {
    PartitionedAlphabet alphabet;
    std::vector<std::size_t> lengths;  // all >= 1
    std::vector<std::string> dictionary;
    DictionaryCfg grammar;
    SearchMode mode = SearchMode::Maximal;
    // Exhaustive enumeration stops with SearchBudgetExceeded past this many
    // candidate sequences (counted before underlying-set deduplication).
    std::uint64_t candidate_cap = 1'000'000;
};

struct Solution {
    GrlEncoding t;                      // concrete multiset sequence
    std::vector<std::string> sentence;  // dictionary words
    std::string spelled;                // their concatenated letters (UTF-8)
};

struct SearchStats {
    std::uint64_t candidates_enumerated = 0;  // pre-deduplication
    std::uint64_t candidates_checked = 0;     // lattice/CKY runs
};

// Concatenates the letters of the words, in order (a homomorphism on word
// sequences).
std::string spell(const std::vector<std::string>& sentence);

// Builds the block pattern of t, the word lattice over the dictionary, and
// runs chart recognition with the grammar. Null means no sentence exists for
// this t.
std::optional<Solution> check_existence(const GrlEncoding& t,
                                        const std::vector<std::string>& dictionary,
                                        const DictionaryCfg& grammar);
std::optional<Solution> check_existence(const GrlEncoding& t,
                                        const std::vector<std::string>& dictionary,
                                        const CnfGrammar& grammar);

// Searches for a sequence t and sentence together, over both alternation
// phases. Exhaustive mode enumerates every multiset choice per block
// (lexicographic by sorted symbols, last block fastest; phases class-0-first
// then class-1-first) and checks each; candidates whose underlying sets
// repeat are skipped after counting. Maximal mode checks one pattern per
// phase, built from each class intersected with the letters occurring in the
// dictionary, and reconstructs the concrete t from the witness. Both modes
// return null exactly when no solution exists.
std::optional<Solution> find_sequence_and_sentence(const SearchInstance& instance,
                                                   SearchStats* stats = nullptr);

// Strips every character outside the alphabet's classes (uppercasing first
// when the alphabet folds case), then compares the run pattern with
// `lengths`. Complete alphabets treat stray ASCII letters as UnknownSymbol
// instead of stripping them.
bool check_sentence(const std::string& sentence, const PartitionedAlphabet& alphabet,
                    const std::vector<std::size_t>& lengths);

// Per-position classification of a sentence, for diagnostics.
struct LetterClass {
    Symbol letter;
    std::size_t class_index;
};
std::vector<LetterClass> classify_letters(const std::string& sentence,
                                          const PartitionedAlphabet& alphabet);

// Cuts `letters` into blocks of the given lengths and rebuilds the concrete
// multiset sequence. Throws PatternMismatch when the letters do not fit the
// pattern (wrong total length, mixed classes in a block, or equal adjacent
// classes).
GrlEncoding reconstruct_t(const SymbolString& letters, const PartitionedAlphabet& alphabet,
                          const std::vector<std::size_t>& lengths);

}  // namespace circlelang
