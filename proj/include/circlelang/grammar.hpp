#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlelang/block_automata.hpp"
#include "circlelang/errors.hpp"

namespace circlelang {

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownTerminal : public Error {
public:
    using Error::Error;
};

class MissingStart : public Error {
public:
    using Error::Error;
};

// A grammar whose terminals are whole dictionary words.
struct DictionaryCfg {
    // Either a nonterminal (index into `nonterminals`) or a word (index into
    // `dictionary`).
    struct Sym {
        bool is_word;
        std::size_t index;
        auto operator<=>(const Sym&) const = default;
    };
    struct Production {
        std::size_t head;       // nonterminal index
        std::vector<Sym> body;  // may be empty (epsilon)
    };

    std::vector<std::string> nonterminals;
    std::vector<std::string> dictionary;
    std::vector<Production> productions;  // declaration order
    std::size_t start = 0;

    std::optional<std::size_t> nonterminal_index(const std::string& name) const;
    std::optional<std::size_t> word_index(const std::string& word) const;
};

// Grammar file format: one rule per line, `Head -> alt | alt | ...`.
// Alternatives are whitespace-separated tokens; "quoted" tokens are
// dictionary words, unquoted tokens are nonterminals, and an empty
// alternative denotes epsilon. '#' starts a comment. The head of the first
// rule is the start symbol. When `dictionary` is given, every quoted word
// must be a member (UnknownTerminal otherwise); when absent the quoted words
// become the dictionary in order of first appearance. Every nonterminal used
// must be defined.
DictionaryCfg parse_grammar(const std::string& text,
                            const std::optional<std::vector<std::string>>& dictionary =
                                std::nullopt);

// Chomsky normal form: only A -> B C and A -> w rules remain; derivation of
// the empty sentence survives solely in `nullable_start`.
struct CnfGrammar {
    struct BinaryRule {
        std::size_t head, left, right;
    };
    struct TerminalRule {
        std::size_t head;
        std::string word;
    };

    std::vector<std::string> nonterminal_names;
    std::size_t start = 0;
    bool nullable_start = false;
    std::vector<BinaryRule> binary;      // declaration order
    std::vector<TerminalRule> terminal;  // declaration order
};

// Standard pipeline: fresh start when needed, epsilon elimination, unit
// elimination, terminal wrapping, binarization.
CnfGrammar to_cnf(const DictionaryCfg& grammar);

// A derivation over a word lattice. Leaves, left to right, walk a lattice
// path from 0 to K.
struct ParseNode {
    std::string symbol;
    std::size_t from = 0;
    std::size_t to = 0;
    std::optional<std::string> word;  // present on leaves
    std::vector<ParseNode> children;  // empty or {left, right}
};

struct ParseWitness {
    std::vector<std::string> words;
    ParseNode root;
};

struct CkyStats {
    std::uint64_t binary_examinations = 0;  // (span, split, rule) triples visited
    std::uint64_t cell_inserts = 0;
};

// Bottom-up chart recognition over the lattice: terminal rules are seeded
// from edges, binary rules close over split points. Returns a witness iff the
// start symbol covers (0, K); backpointers prefer the lowest split point and
// then declaration order, so the witness is deterministic.
std::optional<ParseWitness> cky_lattice(const CnfGrammar& grammar,
                                        const WordLattice& lattice,
                                        CkyStats* stats = nullptr);

// All distinct word sequences with a derivation covering (0, K), sorted
// lexicographically. Throws LimitExceeded when more than `limit` exist (or
// the intermediate expansion exceeds an internal safety cap).
std::vector<std::vector<std::string>> enumerate_witnesses(const CnfGrammar& grammar,
                                                          const WordLattice& lattice,
                                                          std::size_t limit);

}  // namespace circlelang
