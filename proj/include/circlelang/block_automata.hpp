#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circlelang/alphabet.hpp"
#include "circlelang/errors.hpp"
#include "circlelang/text.hpp"

namespace circlelang {

class LimitExceeded : public Error {
public:
    using Error::Error;
};

class EmptyWord : public Error {
public:
    using Error::Error;
};

// One block: a set of allowed symbols and how many positions it covers.
struct Block {
    SymbolString allowed;  // sorted, unique, non-empty
    std::size_t length;    // >= 1

    bool operator==(const Block&) const = default;
};

// A fixed-length pattern of blocks. Strings match iff they have total length
// K and every position's symbol is drawn from its block's allowed set.
class BlockPattern {
public:
    BlockPattern() = default;
    explicit BlockPattern(std::vector<Block> blocks);

    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t total_length() const { return total_length_; }

private:
    std::vector<Block> blocks_;
    std::size_t total_length_ = 0;
};

// Collapses each run's multiset to its underlying set, keeping lengths.
BlockPattern to_block_pattern(const GrlEncoding& t);

// Positional acceptor for a block pattern: states are positions 0..K, state j
// steps to j+1 exactly on the symbols allowed at position j+1, and only
// state K accepts. Rejection is the absence of a transition.
class BlockDfa {
public:
    BlockDfa() = default;
    explicit BlockDfa(std::vector<SymbolString> allowed_at);

    std::size_t num_states() const { return allowed_at_.size() + 1; }
    std::size_t accepting_state() const { return allowed_at_.size(); }

    // Allowed set for the step from state `state` (empty at state K).
    const SymbolString& allowed_from(std::size_t state) const;

    std::optional<std::size_t> step(std::size_t state, Symbol symbol) const;

private:
    std::vector<SymbolString> allowed_at_;  // index j: symbols taking j to j+1
    static const SymbolString kNone;
};

BlockDfa build_block_dfa(const BlockPattern& pattern);

bool dfa_accepts(const BlockDfa& dfa, const SymbolString& input);

// The full (finite) language of the pattern, lexicographically sorted.
// Throws LimitExceeded when the expansion would exceed `limit` strings.
std::vector<SymbolString> enumerate_block_language(const BlockPattern& pattern,
                                                   std::size_t limit);

struct LatticeEdge {
    std::size_t from;
    std::string word;  // UTF-8
    std::size_t to;

    auto operator<=>(const LatticeEdge&) const = default;
};

// Word-level view of a block DFA: an edge (q, w, q') exists iff reading the
// letters of w from position q reaches q' without rejection. Since every
// edge advances by |w|, the lattice is a DAG over positions 0..K.
class WordLattice {
public:
    WordLattice() = default;
    WordLattice(std::size_t num_positions, std::vector<LatticeEdge> edges);

    std::size_t num_positions() const { return num_positions_; }  // K + 1
    std::size_t final_position() const { return num_positions_ - 1; }
    const std::vector<LatticeEdge>& edges() const { return edges_; }  // sorted

    // Edges leaving `from`, as a subrange of edges().
    std::pair<std::size_t, std::size_t> edges_from(std::size_t from) const;

private:
    std::size_t num_positions_ = 1;
    std::vector<LatticeEdge> edges_;
};

// Tries every (word, start state) pair. Words that run past position K are
// skipped silently; an empty word throws EmptyWord since it would break the
// lattice's strict advance.
WordLattice build_word_lattice(const BlockDfa& dfa,
                               const std::vector<std::string>& dictionary);

}  // namespace circlelang
