#include "circlelang/grammar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace circlelang {

namespace {

struct Token {
    std::string text;
    bool quoted;
    std::size_t column;  // 1-based
};

// Splits one logical line into tokens; '#' outside quotes ends the line.
std::vector<Token> tokenize_line(const std::string& line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        const std::size_t col = i + 1;
        if (c == '"') {
            const std::size_t close = line.find('"', i + 1);
            if (close == std::string::npos)
                throw SyntaxError("unterminated quoted word", line_no, col);
            out.push_back({line.substr(i + 1, close - i - 1), true, col});
            i = close + 1;
        } else {
            std::size_t end = i;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
                   line[end] != '\r' && line[end] != '#' && line[end] != '"' &&
                   line[end] != '|')
                ++end;
            if (c == '|') {
                out.push_back({"|", false, col});
                ++i;
            } else {
                out.push_back({line.substr(i, end - i), false, col});
                i = end;
            }
        }
    }
    return out;
}

}  // namespace

std::optional<std::size_t> DictionaryCfg::nonterminal_index(const std::string& name) const {
    for (std::size_t i = 0; i < nonterminals.size(); ++i)
        if (nonterminals[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> DictionaryCfg::word_index(const std::string& word) const {
    for (std::size_t i = 0; i < dictionary.size(); ++i)
        if (dictionary[i] == word) return i;
    return std::nullopt;
}

DictionaryCfg parse_grammar(const std::string& text,
                            const std::optional<std::vector<std::string>>& dictionary) {
    DictionaryCfg g;
    if (dictionary) g.dictionary = *dictionary;

    auto intern_nonterminal = [&](const std::string& name) {
        if (auto idx = g.nonterminal_index(name)) return *idx;
        g.nonterminals.push_back(name);
        return g.nonterminals.size() - 1;
    };
    auto intern_word = [&](const Token& tok, std::size_t line_no) {
        if (auto idx = g.word_index(tok.text)) return *idx;
        if (dictionary)
            throw UnknownTerminal("line " + std::to_string(line_no) + ": word \"" +
                                  tok.text + "\" is not in the dictionary");
        if (tok.text.empty())
            throw SyntaxError("empty quoted word", line_no, tok.column);
        g.dictionary.push_back(tok.text);
        return g.dictionary.size() - 1;
    };

    // Nonterminals that appear in a body before any defining rule; checked at
    // the end so rule order does not matter.
    std::map<std::string, std::size_t> used_at_line;
    std::set<std::string> defined;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_start = false;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        const std::vector<Token> tokens = tokenize_line(line, line_no);
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (tokens.size() < 2 || tokens[1].quoted || tokens[1].text != "->")
            throw SyntaxError("expected `Head -> ...`", line_no,
                              tokens.size() > 1 ? tokens[1].column : tokens[0].column);
        if (tokens[0].quoted)
            throw SyntaxError("rule head must be a nonterminal", line_no, tokens[0].column);
        const std::size_t head = intern_nonterminal(tokens[0].text);
        defined.insert(tokens[0].text);
        if (!have_start) {
            g.start = head;
            have_start = true;
        }

        std::vector<DictionaryCfg::Sym> body;
        auto flush = [&]() {
            g.productions.push_back({head, body});
            body.clear();
        };
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            const Token& tok = tokens[i];
            if (!tok.quoted && tok.text == "|") {
                flush();
            } else if (tok.quoted) {
                body.push_back({true, intern_word(tok, line_no)});
            } else {
                if (!used_at_line.count(tok.text)) used_at_line[tok.text] = line_no;
                body.push_back({false, intern_nonterminal(tok.text)});
            }
        }
        flush();
        if (pos > text.size()) break;
    }

    if (!have_start) throw MissingStart("grammar has no rules");
    for (const auto& [name, at_line] : used_at_line)
        if (!defined.count(name))
            throw SyntaxError("nonterminal `" + name + "` has no defining rule", at_line, 1);
    return g;
}

namespace {

using Sym = DictionaryCfg::Sym;

struct WorkGrammar {
    std::vector<std::string> names;
    std::vector<std::string> dictionary;
    std::vector<DictionaryCfg::Production> productions;
    std::size_t start;

    std::size_t fresh(const std::string& base) {
        std::string name = base;
        int suffix = 0;
        auto taken = [&](const std::string& cand) {
            return std::find(names.begin(), names.end(), cand) != names.end();
        };
        while (taken(name)) name = base + "." + std::to_string(++suffix);
        names.push_back(name);
        return names.size() - 1;
    }
};

std::vector<bool> nullable_set(const WorkGrammar& g) {
    std::vector<bool> nullable(g.names.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            if (nullable[p.head]) continue;
            bool all = true;
            for (const Sym& s : p.body)
                if (s.is_word || !nullable[s.index]) {
                    all = false;
                    break;
                }
            if (all) {
                nullable[p.head] = true;
                changed = true;
            }
        }
    }
    return nullable;
}

}  // namespace

CnfGrammar to_cnf(const DictionaryCfg& grammar) {
    WorkGrammar g{grammar.nonterminals, grammar.dictionary, grammar.productions,
                  grammar.start};

    // Fresh start symbol when the start appears in any body.
    bool start_on_rhs = false;
    for (const auto& p : g.productions)
        for (const Sym& s : p.body)
            if (!s.is_word && s.index == g.start) start_on_rhs = true;
    if (start_on_rhs) {
        const std::size_t s0 = g.fresh(g.names[g.start] + "'");
        g.productions.insert(g.productions.begin(), {s0, {Sym{false, g.start}}});
        g.start = s0;
    }

    // Epsilon elimination: expand every production over the subsets of its
    // nullable symbols, dropping empty bodies.
    const std::vector<bool> nullable = nullable_set(g);
    const bool nullable_start = nullable[g.start];
    {
        std::vector<DictionaryCfg::Production> expanded;
        std::set<std::pair<std::size_t, std::vector<Sym>>> seen;
        for (const auto& p : g.productions) {
            std::vector<std::size_t> optional_positions;
            for (std::size_t i = 0; i < p.body.size(); ++i)
                if (!p.body[i].is_word && nullable[p.body[i].index])
                    optional_positions.push_back(i);
            if (optional_positions.size() > 24)
                throw Error("production has too many nullable symbols to expand");
            const std::size_t subsets = std::size_t{1} << optional_positions.size();
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                std::vector<Sym> body;
                std::size_t opt = 0;
                for (std::size_t i = 0; i < p.body.size(); ++i) {
                    if (opt < optional_positions.size() && optional_positions[opt] == i) {
                        if (mask & (std::size_t{1} << opt)) body.push_back(p.body[i]);
                        ++opt;
                    } else {
                        body.push_back(p.body[i]);
                    }
                }
                if (body.empty()) continue;
                if (seen.insert({p.head, body}).second) expanded.push_back({p.head, body});
            }
        }
        g.productions = std::move(expanded);
    }

    // Unit elimination: replace A -> B chains by copying B's non-unit bodies.
    {
        const std::size_t n = g.names.size();
        std::vector<std::set<std::size_t>> reach(n);  // unit-reachable, incl. self
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::size_t> stack{a};
            while (!stack.empty()) {
                const std::size_t b = stack.back();
                stack.pop_back();
                if (!reach[a].insert(b).second) continue;
                for (const auto& p : g.productions)
                    if (p.head == b && p.body.size() == 1 && !p.body[0].is_word)
                        stack.push_back(p.body[0].index);
            }
        }
        // Resulting order: heads by nonterminal index, copied bodies in
        // production order; downstream tie-breaking keys off this order.
        std::vector<DictionaryCfg::Production> out;
        std::set<std::pair<std::size_t, std::vector<Sym>>> seen;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b : reach[a]) {
                for (const auto& p : g.productions) {
                    if (p.head != b) continue;
                    if (p.body.size() == 1 && !p.body[0].is_word) continue;
                    if (seen.insert({a, p.body}).second) out.push_back({a, p.body});
                }
            }
        }
        g.productions = std::move(out);
    }

    // Terminal wrapping and binarization.
    CnfGrammar cnf;
    {
        std::map<std::size_t, std::size_t> word_wrapper;  // word index -> nonterminal
        std::vector<DictionaryCfg::Production> pending = g.productions;
        std::vector<DictionaryCfg::Production> final_prods;
        auto wrapper_for = [&](std::size_t word) {
            auto it = word_wrapper.find(word);
            if (it != word_wrapper.end()) return it->second;
            const std::size_t nt = g.fresh("w(" + g.dictionary[word] + ")");
            word_wrapper.emplace(word, nt);
            final_prods.push_back({nt, {Sym{true, word}}});
            return nt;
        };
        for (auto& p : pending) {
            if (p.body.size() == 1) {
                final_prods.push_back(p);
                continue;
            }
            std::vector<Sym> body = p.body;
            for (Sym& s : body)
                if (s.is_word) s = Sym{false, wrapper_for(s.index)};
            std::size_t head = p.head;
            while (body.size() > 2) {
                const std::size_t cont = g.fresh(g.names[p.head] + ".");
                final_prods.push_back({head, {body[0], Sym{false, cont}}});
                body.erase(body.begin());
                head = cont;
            }
            final_prods.push_back({head, body});
        }

        cnf.nonterminal_names = g.names;
        cnf.start = g.start;
        cnf.nullable_start = nullable_start;
        for (const auto& p : final_prods) {
            if (p.body.size() == 1) {
                cnf.terminal.push_back({p.head, g.dictionary[p.body[0].index]});
            } else {
                cnf.binary.push_back({p.head, p.body[0].index, p.body[1].index});
            }
        }
    }
    return cnf;
}

namespace {

struct BackPointer {
    enum class Kind { None, Edge, Binary } kind = Kind::None;
    std::size_t rule = 0;   // terminal or binary rule index
    std::size_t split = 0;  // binary only
    std::string word;       // edge only
};

class Chart {
public:
    Chart(std::size_t positions, std::size_t nts)
        : positions_(positions), nts_(nts), cells_(positions * positions * nts) {}

    BackPointer& at(std::size_t i, std::size_t j, std::size_t nt) {
        return cells_[(i * positions_ + j) * nts_ + nt];
    }
    bool has(std::size_t i, std::size_t j, std::size_t nt) const {
        return cells_[(i * positions_ + j) * nts_ + nt].kind != BackPointer::Kind::None;
    }

private:
    std::size_t positions_, nts_;
    std::vector<BackPointer> cells_;
};

ParseNode extract(const CnfGrammar& g, const WordLattice& lattice, Chart& chart,
                  std::size_t nt, std::size_t i, std::size_t j) {
    ParseNode node;
    node.symbol = g.nonterminal_names[nt];
    node.from = i;
    node.to = j;
    const BackPointer& bp = chart.at(i, j, nt);
    if (bp.kind == BackPointer::Kind::Edge) {
        node.word = bp.word;
    } else {
        const auto& rule = g.binary[bp.rule];
        node.children.push_back(extract(g, lattice, chart, rule.left, i, bp.split));
        node.children.push_back(extract(g, lattice, chart, rule.right, bp.split, j));
    }
    return node;
}

void collect_words(const ParseNode& node, std::vector<std::string>& out) {
    if (node.word) {
        out.push_back(*node.word);
        return;
    }
    for (const ParseNode& child : node.children) collect_words(child, out);
}

Chart run_cky(const CnfGrammar& g, const WordLattice& lattice, CkyStats* stats) {
    const std::size_t positions = lattice.num_positions();
    Chart chart(positions, g.nonterminal_names.size());
    const auto& edges = lattice.edges();
    for (std::size_t width = 1; width < positions; ++width) {
        for (std::size_t i = 0; i + width < positions; ++i) {
            const std::size_t j = i + width;
            // Terminal seeding, declaration order first.
            for (std::size_t r = 0; r < g.terminal.size(); ++r) {
                const auto& rule = g.terminal[r];
                if (chart.has(i, j, rule.head)) continue;
                auto [lo, hi] = lattice.edges_from(i);
                for (std::size_t e = lo; e < hi; ++e) {
                    if (edges[e].to != j || edges[e].word != rule.word) continue;
                    BackPointer bp;
                    bp.kind = BackPointer::Kind::Edge;
                    bp.rule = r;
                    bp.word = rule.word;
                    chart.at(i, j, rule.head) = bp;
                    if (stats) ++stats->cell_inserts;
                    break;
                }
            }
            // Binary closure: split ascending, then declaration order.
            for (std::size_t m = i + 1; m < j; ++m) {
                for (std::size_t r = 0; r < g.binary.size(); ++r) {
                    if (stats) ++stats->binary_examinations;
                    const auto& rule = g.binary[r];
                    if (chart.has(i, j, rule.head)) continue;
                    if (!chart.has(i, m, rule.left) || !chart.has(m, j, rule.right)) continue;
                    BackPointer bp;
                    bp.kind = BackPointer::Kind::Binary;
                    bp.rule = r;
                    bp.split = m;
                    chart.at(i, j, rule.head) = bp;
                    if (stats) ++stats->cell_inserts;
                }
            }
        }
    }
    return chart;
}

}  // namespace

std::optional<ParseWitness> cky_lattice(const CnfGrammar& grammar,
                                        const WordLattice& lattice, CkyStats* stats) {
    const std::size_t final_pos = lattice.final_position();
    if (final_pos == 0) {
        // Only the empty sentence can cover an empty pattern.
        if (!grammar.nullable_start) return std::nullopt;
        ParseWitness witness;
        witness.root.symbol = grammar.nonterminal_names[grammar.start];
        return witness;
    }
    Chart chart = run_cky(grammar, lattice, stats);
    if (!chart.has(0, final_pos, grammar.start)) return std::nullopt;
    ParseWitness witness;
    witness.root = extract(grammar, lattice, chart, grammar.start, 0, final_pos);
    collect_words(witness.root, witness.words);
    return witness;
}

std::vector<std::vector<std::string>> enumerate_witnesses(const CnfGrammar& grammar,
                                                          const WordLattice& lattice,
                                                          std::size_t limit) {
    const std::size_t final_pos = lattice.final_position();
    if (final_pos == 0)
        return grammar.nullable_start
                   ? std::vector<std::vector<std::string>>{{}}
                   : std::vector<std::vector<std::string>>{};

    Chart chart = run_cky(grammar, lattice, nullptr);
    if (!chart.has(0, final_pos, grammar.start)) return {};

    constexpr std::uint64_t kSafetyCap = 4'000'000;
    std::uint64_t combinations = 0;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>,
             std::set<std::vector<std::string>>>
        memo;
    const auto& edges = lattice.edges();

    auto enumerate = [&](auto&& self, std::size_t nt, std::size_t i,
                         std::size_t j) -> const std::set<std::vector<std::string>>& {
        const auto key = std::make_tuple(nt, i, j);
        auto found = memo.find(key);
        if (found != memo.end()) return found->second;
        std::set<std::vector<std::string>> result;
        for (const auto& rule : grammar.terminal) {
            if (rule.head != nt) continue;
            auto [lo, hi] = lattice.edges_from(i);
            for (std::size_t e = lo; e < hi; ++e)
                if (edges[e].to == j && edges[e].word == rule.word)
                    result.insert({rule.word});
        }
        for (std::size_t m = i + 1; m < j; ++m) {
            for (const auto& rule : grammar.binary) {
                if (rule.head != nt) continue;
                if (!chart.has(i, m, rule.left) || !chart.has(m, j, rule.right)) continue;
                const auto& lefts = self(self, rule.left, i, m);
                const auto& rights = self(self, rule.right, m, j);
                for (const auto& l : lefts) {
                    for (const auto& r : rights) {
                        if (++combinations > kSafetyCap)
                            throw LimitExceeded("witness enumeration exceeded safety cap");
                        std::vector<std::string> seq = l;
                        seq.insert(seq.end(), r.begin(), r.end());
                        result.insert(std::move(seq));
                    }
                }
            }
        }
        return memo.emplace(key, std::move(result)).first->second;
    };

    const auto& top = enumerate(enumerate, grammar.start, 0, final_pos);
    if (top.size() > limit)
        throw LimitExceeded("more than " + std::to_string(limit) + " witnesses");
    return {top.begin(), top.end()};
}

}  // namespace circlelang
