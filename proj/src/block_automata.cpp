#include "circlelang/block_automata.hpp"

#include <algorithm>

namespace circlelang {

const SymbolString BlockDfa::kNone{};

BlockPattern::BlockPattern(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (Block& b : blocks_) {
        std::sort(b.allowed.begin(), b.allowed.end());
        b.allowed.erase(std::unique(b.allowed.begin(), b.allowed.end()), b.allowed.end());
        if (b.allowed.empty()) throw EmptyClass("block with empty allowed set");
        if (b.length == 0) throw DomainError("block with zero length");
        total_length_ += b.length;
    }
}

BlockPattern to_block_pattern(const GrlEncoding& t) {
    std::vector<Block> blocks;
    blocks.reserve(t.num_runs());
    for (const GrlRun& run : t.runs()) blocks.push_back({run.letters, run.length()});
    return BlockPattern(std::move(blocks));
}

BlockDfa::BlockDfa(std::vector<SymbolString> allowed_at)
    : allowed_at_(std::move(allowed_at)) {}

const SymbolString& BlockDfa::allowed_from(std::size_t state) const {
    return state < allowed_at_.size() ? allowed_at_[state] : kNone;
}

std::optional<std::size_t> BlockDfa::step(std::size_t state, Symbol symbol) const {
    if (state >= allowed_at_.size()) return std::nullopt;
    const SymbolString& allowed = allowed_at_[state];
    if (!std::binary_search(allowed.begin(), allowed.end(), symbol)) return std::nullopt;
    return state + 1;
}

BlockDfa build_block_dfa(const BlockPattern& pattern) {
    std::vector<SymbolString> allowed_at;
    allowed_at.reserve(pattern.total_length());
    for (const Block& b : pattern.blocks())
        allowed_at.insert(allowed_at.end(), b.length, b.allowed);
    return BlockDfa(std::move(allowed_at));
}

bool dfa_accepts(const BlockDfa& dfa, const SymbolString& input) {
    std::size_t state = 0;
    for (Symbol cp : input) {
        auto next = dfa.step(state, cp);
        if (!next) return false;
        state = *next;
    }
    return state == dfa.accepting_state();
}

std::vector<SymbolString> enumerate_block_language(const BlockPattern& pattern,
                                                   std::size_t limit) {
    BigInt size = 1;
    for (const Block& b : pattern.blocks()) {
        size *= boost::multiprecision::pow(BigInt(b.allowed.size()),
                                           static_cast<unsigned>(b.length));
        if (size > limit)
            throw LimitExceeded("block language has more than " + std::to_string(limit) +
                                " strings");
    }
    // Odometer over positions; rightmost position advances fastest, so the
    // output comes out sorted.
    std::vector<const SymbolString*> choices;
    for (const Block& b : pattern.blocks())
        for (std::size_t i = 0; i < b.length; ++i) choices.push_back(&b.allowed);

    std::vector<SymbolString> out;
    out.reserve(static_cast<std::size_t>(size));
    std::vector<std::size_t> digits(choices.size(), 0);
    while (true) {
        SymbolString s;
        s.reserve(choices.size());
        for (std::size_t i = 0; i < choices.size(); ++i) s.push_back((*choices[i])[digits[i]]);
        out.push_back(std::move(s));
        std::size_t pos = choices.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < choices[pos]->size()) break;
            digits[pos] = 0;
            if (pos == 0) return out;
        }
        if (choices.empty()) return out;
    }
}

WordLattice::WordLattice(std::size_t num_positions, std::vector<LatticeEdge> edges)
    : num_positions_(num_positions), edges_(std::move(edges)) {
    if (num_positions_ == 0) throw DomainError("lattice needs at least position 0");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::pair<std::size_t, std::size_t> WordLattice::edges_from(std::size_t from) const {
    auto lo = std::lower_bound(edges_.begin(), edges_.end(), from,
                               [](const LatticeEdge& e, std::size_t q) { return e.from < q; });
    auto hi = std::upper_bound(edges_.begin(), edges_.end(), from,
                               [](std::size_t q, const LatticeEdge& e) { return q < e.from; });
    return {static_cast<std::size_t>(lo - edges_.begin()),
            static_cast<std::size_t>(hi - edges_.begin())};
}

WordLattice build_word_lattice(const BlockDfa& dfa,
                               const std::vector<std::string>& dictionary) {
    std::vector<LatticeEdge> edges;
    for (const std::string& word : dictionary) {
        if (word.empty())
            throw EmptyWord("empty dictionary word would create a zero-length edge");
        const SymbolString letters = utf8_decode(word);
        for (std::size_t start = 0; start < dfa.num_states(); ++start) {
            std::size_t state = start;
            bool ok = true;
            for (Symbol cp : letters) {
                auto next = dfa.step(state, cp);
                if (!next) {
                    ok = false;
                    break;
                }
                state = *next;
            }
            if (ok) edges.push_back({start, word, state});
        }
    }
    return WordLattice(dfa.num_states(), std::move(edges));
}

}  // namespace circlelang
