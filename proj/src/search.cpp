#include "circlelang/search.hpp"

#include <algorithm>
#include <set>

#include "circlelang/block_automata.hpp"

namespace circlelang {

std::string spell(const std::vector<std::string>& sentence) {
    std::string out;
    for (const std::string& word : sentence) out += word;
    return out;
}

std::optional<Solution> check_existence(const GrlEncoding& t,
                                        const std::vector<std::string>& dictionary,
                                        const CnfGrammar& grammar) {
    const BlockDfa dfa = build_block_dfa(to_block_pattern(t));
    const WordLattice lattice = build_word_lattice(dfa, dictionary);
    auto witness = cky_lattice(grammar, lattice);
    if (!witness) return std::nullopt;
    Solution solution;
    solution.t = t;
    solution.sentence = witness->words;
    solution.spelled = spell(witness->words);
    return solution;
}

std::optional<Solution> check_existence(const GrlEncoding& t,
                                        const std::vector<std::string>& dictionary,
                                        const DictionaryCfg& grammar) {
    return check_existence(t, dictionary, to_cnf(grammar));
}

namespace {

// Multiset odometer: enumerates sorted k-tuples over `symbols` (combinations
// with replacement) in lexicographic order.
class MultisetOdometer {
public:
    MultisetOdometer(SymbolString symbols, std::size_t k)
        : symbols_(std::move(symbols)), indices_(k, 0) {}

    SymbolString current() const {
        SymbolString out;
        out.reserve(indices_.size());
        for (std::size_t idx : indices_) out.push_back(symbols_[idx]);
        return out;
    }

    // Advances to the next sorted tuple; false when exhausted.
    bool advance() {
        std::size_t pos = indices_.size();
        while (pos > 0) {
            --pos;
            if (indices_[pos] + 1 < symbols_.size()) {
                const std::size_t next = indices_[pos] + 1;
                for (std::size_t i = pos; i < indices_.size(); ++i) indices_[i] = next;
                return true;
            }
        }
        return false;
    }

    void reset() { std::fill(indices_.begin(), indices_.end(), 0); }

private:
    SymbolString symbols_;
    std::vector<std::size_t> indices_;
};

SymbolString letters_of_dictionary(const std::vector<std::string>& dictionary) {
    SymbolString letters;
    for (const std::string& word : dictionary) {
        const SymbolString decoded = utf8_decode(word);
        letters.insert(letters.end(), decoded.begin(), decoded.end());
    }
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return letters;
}

std::optional<Solution> search_exhaustive(const SearchInstance& instance,
                                          const CnfGrammar& cnf, SearchStats& stats) {
    const auto& classes = instance.alphabet.classes();
    const std::size_t m = instance.lengths.size();
    std::set<std::vector<SymbolString>> seen_signatures;

    for (std::size_t phase = 0; phase < 2; ++phase) {
        std::vector<MultisetOdometer> odometers;
        odometers.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t cls = (i % 2 == 0) ? phase : 1 - phase;
            odometers.emplace_back(classes[cls].symbols, instance.lengths[i]);
        }
        bool exhausted = false;
        while (!exhausted) {
            if (++stats.candidates_enumerated > instance.candidate_cap)
                throw SearchBudgetExceeded(
                    "candidate cap of " + std::to_string(instance.candidate_cap) +
                    " sequences exceeded");
            std::vector<GrlRun> runs;
            std::vector<SymbolString> signature;
            runs.reserve(m);
            signature.reserve(m);
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t cls = (i % 2 == 0) ? phase : 1 - phase;
                SymbolString letters = odometers[i].current();
                SymbolString distinct = letters;
                distinct.erase(std::unique(distinct.begin(), distinct.end()),
                               distinct.end());
                signature.push_back(std::move(distinct));
                runs.push_back({std::move(letters), cls});
            }
            // Identical underlying sets give the identical block language.
            if (seen_signatures.insert(std::move(signature)).second) {
                ++stats.candidates_checked;
                auto solution =
                    check_existence(GrlEncoding(std::move(runs)), instance.dictionary, cnf);
                if (solution) return solution;
            }
            // Odometer over blocks, last block fastest.
            std::size_t pos = m;
            exhausted = true;
            while (pos > 0) {
                --pos;
                if (odometers[pos].advance()) {
                    exhausted = false;
                    break;
                }
                odometers[pos].reset();
            }
        }
    }
    return std::nullopt;
}

std::optional<Solution> search_maximal(const SearchInstance& instance,
                                       const CnfGrammar& cnf, SearchStats& stats) {
    const auto& classes = instance.alphabet.classes();
    const SymbolString dict_letters = letters_of_dictionary(instance.dictionary);

    for (std::size_t phase = 0; phase < 2; ++phase) {
        std::vector<Block> blocks;
        blocks.reserve(instance.lengths.size());
        bool feasible = true;
        for (std::size_t i = 0; i < instance.lengths.size(); ++i) {
            const std::size_t cls = (i % 2 == 0) ? phase : 1 - phase;
            SymbolString allowed;
            std::set_intersection(classes[cls].symbols.begin(), classes[cls].symbols.end(),
                                  dict_letters.begin(), dict_letters.end(),
                                  std::back_inserter(allowed));
            if (allowed.empty()) {
                feasible = false;  // no dictionary letter can fill this block
                break;
            }
            blocks.push_back({std::move(allowed), instance.lengths[i]});
        }
        if (!feasible) continue;

        ++stats.candidates_checked;
        const BlockDfa dfa = build_block_dfa(BlockPattern(std::move(blocks)));
        const WordLattice lattice = build_word_lattice(dfa, instance.dictionary);
        auto witness = cky_lattice(cnf, lattice);
        if (!witness) continue;

        Solution solution;
        solution.sentence = witness->words;
        solution.spelled = spell(witness->words);
        solution.t = reconstruct_t(utf8_decode(solution.spelled), instance.alphabet,
                                   instance.lengths);
        return solution;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Solution> find_sequence_and_sentence(const SearchInstance& instance,
                                                   SearchStats* stats) {
    if (instance.alphabet.num_classes() != 2)
        throw DomainError("sequence search needs a two-class alphabet");
    if (instance.lengths.empty()) throw DomainError("empty length pattern");
    for (std::size_t len : instance.lengths)
        if (len == 0) throw DomainError("zero-length block in pattern");
    if (instance.dictionary.empty()) throw DomainError("empty dictionary");

    const CnfGrammar cnf = to_cnf(instance.grammar);
    SearchStats local;
    SearchStats& s = stats ? *stats : local;
    return instance.mode == SearchMode::Exhaustive ? search_exhaustive(instance, cnf, s)
                                                   : search_maximal(instance, cnf, s);
}

std::vector<LetterClass> classify_letters(const std::string& sentence,
                                          const PartitionedAlphabet& alphabet) {
    SymbolString text = utf8_decode(sentence);
    if (alphabet.fold_case()) text = ascii_upper(text);
    std::vector<LetterClass> out;
    for (Symbol cp : text) {
        if (auto cls = alphabet.class_of(cp)) {
            out.push_back({cp, *cls});
        } else if (alphabet.complete() && is_ascii_alpha(cp)) {
            throw UnknownSymbol("letter '" + utf8_encode(cp) +
                                "' is outside every class of a complete alphabet");
        }
        // Everything else (punctuation, spaces, digits) is stripped.
    }
    return out;
}

bool check_sentence(const std::string& sentence, const PartitionedAlphabet& alphabet,
                    const std::vector<std::size_t>& lengths) {
    const std::vector<LetterClass> letters = classify_letters(sentence, alphabet);
    SymbolString stripped;
    stripped.reserve(letters.size());
    for (const LetterClass& lc : letters) stripped.push_back(lc.letter);
    return run_pattern(grl_encode(alphabet, stripped)) == lengths;
}

GrlEncoding reconstruct_t(const SymbolString& letters, const PartitionedAlphabet& alphabet,
                          const std::vector<std::size_t>& lengths) {
    std::size_t total = 0;
    for (std::size_t len : lengths) total += len;
    if (letters.size() != total)
        throw PatternMismatch("expected " + std::to_string(total) + " letters, got " +
                              std::to_string(letters.size()));
    std::vector<GrlRun> runs;
    runs.reserve(lengths.size());
    std::size_t pos = 0;
    for (std::size_t len : lengths) {
        SymbolString block = letters.substr(pos, len);
        pos += len;
        auto cls = alphabet.class_of(block[0]);
        if (!cls)
            throw UnknownSymbol("letter '" + utf8_encode(block[0]) +
                                "' is in no alphabet class");
        for (Symbol cp : block)
            if (alphabet.class_of(cp) != cls)
                throw PatternMismatch("block starting at position " +
                                      std::to_string(pos - len + 1) +
                                      " mixes alphabet classes");
        if (!runs.empty() && runs.back().class_index == *cls)
            throw PatternMismatch("adjacent blocks share a class at position " +
                                  std::to_string(pos - len + 1));
        std::sort(block.begin(), block.end());
        runs.push_back({std::move(block), *cls});
    }
    return GrlEncoding(std::move(runs));
}

}  // namespace circlelang
