// circlelang: balanced circular partitioning, circle-elimination mnemonics,
// generalized run-length encodings, and block-constrained sentence search.
//
// Machine-readable JSON goes to stdout; --verbose adds a human summary on
// stderr. Exit codes: 0 success, 1 no solution, 2 usage or input errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "circlelang/alphabet.hpp"
#include "circlelang/block_automata.hpp"
#include "circlelang/circle_partition.hpp"
#include "circlelang/grammar.hpp"
#include "circlelang/io.hpp"
#include "circlelang/josephus.hpp"
#include "circlelang/render.hpp"
#include "circlelang/search.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace circlelang;

std::vector<std::size_t> parse_pattern(const std::string& csv) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = std::min(csv.find(',', pos), csv.size());
        const std::string item = csv.substr(pos, comma - pos);
        if (item.empty()) throw DomainError("empty entry in integer list '" + csv + "'");
        std::size_t used = 0;
        const unsigned long long value = std::stoull(item, &used);
        if (used != item.size())
            throw DomainError("bad integer '" + item + "' in list '" + csv + "'");
        out.push_back(static_cast<std::size_t>(value));
        if (comma == csv.size()) break;
        pos = comma + 1;
    }
    return out;
}

Convention parse_convention(const std::string& name) {
    if (name == "count-k") return Convention::CountK;
    if (name == "skip-k") return Convention::SkipK;
    throw DomainError("convention must be count-k or skip-k, got '" + name + "'");
}

Json trace_json(const PartitionTrace& trace) {
    Json j;
    j["case"] = trace.case_label;
    j["s"] = trace.s;
    j["t"] = trace.t;
    j["a"] = trace.a;
    j["b"] = trace.b;
    j["substitute_condition"] = trace.substitute_condition;
    if (!trace.elimination_order.empty()) j["elimination_order"] = trace.elimination_order;
    j["groups_before_strip"] = trace.groups_before_strip;
    Json swaps = Json::array();
    for (const DummySwap& swap : trace.swaps)
        swaps.push_back({{"dummy", swap.dummy_position},
                         {"real", swap.real_position},
                         {"from_group", swap.from_group},
                         {"to_group", swap.to_group}});
    j["swaps"] = swaps;
    return j;
}

Json encoding_json(const GrlEncoding& enc, const PartitionedAlphabet& alphabet) {
    Json runs = Json::array();
    for (const GrlRun& run : enc.runs())
        runs.push_back({{"letters", utf8_encode(run.letters)},
                        {"class", alphabet.class_name(run.class_index)},
                        {"k", run.length()}});
    return runs;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_partition(std::size_t n, std::size_t r, std::size_t k, const std::string& mode,
                  bool verbose) {
    const PartitionSpec spec(n, r, k);
    const PartitionResult result =
        mode == "removal" ? partition_removal(spec) : partition_nonremoval(spec);
    Json j;
    j["groups"] = result.groups;
    j["mode"] = result.mode;
    j["trace"] = trace_json(result.trace);
    emit(j);
    if (verbose)
        std::cerr << "partitioned " << n << " positions into " << r << " groups, step "
                  << k << ", case " << result.trace.case_label << "\n";
    return 0;
}

int cmd_josephus(std::size_t n, std::size_t k, std::size_t count,
                 const std::string& convention, bool verbose) {
    const EliminationTrace trace = eliminate(n, k, count, parse_convention(convention));
    Json j;
    j["n"] = trace.n;
    j["k"] = trace.k;
    j["convention"] = convention;
    j["removed"] = trace.removed;
    j["survivors"] = trace.survivors;
    emit(j);
    if (verbose)
        std::cerr << "removed " << trace.removed.size() << " of " << n << " positions\n";
    return 0;
}

int cmd_solve_arrangement(std::size_t first, std::size_t second, std::size_t k,
                          const std::string& convention, bool verbose) {
    const TwoClassCircle circle =
        solve_arrangement(first, second, k, parse_convention(convention));
    Json j;
    j["runs"] = circle.runs;
    j["first_class"] = circle.first_class;
    j["second_class"] = circle.second_class;
    j["n"] = circle.size();
    emit(j);
    if (verbose) {
        std::cerr << "runs:";
        for (std::size_t run : circle.runs) std::cerr << " " << run;
        std::cerr << "\n";
    }
    return 0;
}

int cmd_solve_step(const std::string& runs_csv, const std::string& text,
                   const std::string& alphabet_spec, std::size_t count,
                   std::size_t k_max_flag, const std::string& convention, bool verbose) {
    TwoClassCircle circle;
    if (!runs_csv.empty()) {
        circle.runs = parse_pattern(runs_csv);
    } else {
        // Derive the runs from a sentence over a two-class alphabet.
        const PartitionedAlphabet alphabet = load_alphabet(alphabet_spec);
        if (alphabet.num_classes() != 2)
            throw DomainError("--text needs a two-class alphabet");
        const std::vector<LetterClass> letters = classify_letters(text, alphabet);
        SymbolString stripped;
        for (const LetterClass& lc : letters) stripped.push_back(lc.letter);
        const GrlEncoding enc = grl_encode(alphabet, stripped);
        circle.runs = run_pattern(enc);
        if (!enc.empty()) {
            const std::size_t first = enc.runs().front().class_index;
            circle.first_class = alphabet.class_name(first);
            circle.second_class = alphabet.class_name(1 - first);
        }
    }
    const std::size_t k_max = k_max_flag != 0 ? k_max_flag : 3 * circle.size();
    const std::vector<std::size_t> ks =
        solve_step_size(circle, parse_convention(convention), count, k_max);
    Json j;
    j["k"] = ks;
    j["k_max"] = k_max;
    emit(j);
    if (verbose) std::cerr << ks.size() << " step sizes work up to " << k_max << "\n";
    return ks.empty() ? 1 : 0;
}

int cmd_grl(const std::string& text, const std::string& alphabet_spec, bool verbose) {
    const PartitionedAlphabet alphabet = load_alphabet(alphabet_spec);
    const std::vector<LetterClass> letters = classify_letters(text, alphabet);
    SymbolString stripped;
    for (const LetterClass& lc : letters) stripped.push_back(lc.letter);
    const GrlEncoding enc = grl_encode(alphabet, stripped);
    Json j;
    j["runs"] = encoding_json(enc, alphabet);
    j["pattern"] = run_pattern(enc);
    j["length"] = enc.total_length();
    emit(j);
    if (verbose) std::cerr << enc.num_runs() << " runs over " << enc.total_length()
                           << " letters\n";
    return 0;
}

int cmd_count(std::size_t n, std::size_t r, const std::string& kind, bool verbose) {
    BigInt value;
    if (kind == "all")
        value = count_all(n, r);
    else if (kind == "surjective")
        value = count_surjective(n, r);
    else if (kind == "balanced")
        value = count_balanced(n, r);
    else if (kind == "stirling2")
        value = stirling2(n, r);
    else
        throw DomainError("kind must be all, surjective, balanced, or stirling2");
    Json j;
    j["kind"] = kind;
    j["n"] = n;
    j["r"] = r;
    j["value"] = value.str();
    emit(j);
    if (verbose) std::cerr << kind << "(" << n << ", " << r << ") = " << value << "\n";
    return 0;
}

int cmd_find_sentence(const std::string& pattern_csv, const std::string& dict_path,
                      const std::string& grammar_path, const std::string& alphabet_spec,
                      const std::string& mode, std::uint64_t cap, bool verbose) {
    SearchInstance instance{load_alphabet(alphabet_spec),
                            parse_pattern(pattern_csv),
                            {},
                            {},
                            mode == "exhaustive" ? SearchMode::Exhaustive
                                                 : SearchMode::Maximal,
                            cap};
    instance.dictionary = load_dictionary(dict_path, instance.alphabet);
    instance.grammar = parse_grammar(read_file(grammar_path), instance.dictionary);

    SearchStats stats;
    const std::optional<Solution> solution = find_sequence_and_sentence(instance, &stats);
    if (!solution) {
        emit(Json{{"solution", nullptr}});
        if (verbose)
            std::cerr << "no solution (" << stats.candidates_checked << " checks)\n";
        return 1;
    }
    Json j;
    j["t"] = encoding_json(solution->t, instance.alphabet);
    j["sentence"] = solution->sentence;
    j["spelled"] = solution->spelled;
    emit(j);
    if (verbose)
        std::cerr << "found after " << stats.candidates_checked << " checks\n";
    return 0;
}

int cmd_check_sentence(const std::string& text, const std::string& pattern_csv,
                       const std::string& alphabet_spec, bool verbose) {
    const PartitionedAlphabet alphabet = load_alphabet(alphabet_spec);
    const std::vector<std::size_t> expected = parse_pattern(pattern_csv);
    const std::vector<LetterClass> letters = classify_letters(text, alphabet);
    SymbolString stripped;
    for (const LetterClass& lc : letters) stripped.push_back(lc.letter);
    const std::vector<std::size_t> actual = run_pattern(grl_encode(alphabet, stripped));
    const bool match = actual == expected;

    Json per_letter = Json::array();
    for (const LetterClass& lc : letters)
        per_letter.push_back({{"letter", utf8_encode(lc.letter)},
                              {"class", alphabet.class_name(lc.class_index)}});
    Json j;
    j["match"] = match;
    j["pattern"] = actual;
    j["expected"] = expected;
    j["letters"] = per_letter;
    emit(j);
    if (verbose) std::cerr << (match ? "pattern matches\n" : "pattern differs\n");
    return match ? 0 : 1;
}

int cmd_render(const std::string& text, const std::string& alphabet_spec,
               const std::string& out_path, const std::string& annotate,
               const std::string& convention, bool verbose) {
    const PartitionedAlphabet alphabet = load_alphabet(alphabet_spec);
    std::optional<EliminationAnnotation> annotation;
    if (!annotate.empty()) {
        // Format: k=<int>,count=<int>
        EliminationAnnotation a;
        a.convention = parse_convention(convention);
        bool have_k = false, have_count = false;
        std::size_t pos = 0;
        while (pos < annotate.size()) {
            const std::size_t comma = std::min(annotate.find(',', pos), annotate.size());
            const std::string item = annotate.substr(pos, comma - pos);
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw DomainError("bad annotation entry '" + item + "'");
            const std::string key = item.substr(0, eq);
            const std::size_t value = std::stoull(item.substr(eq + 1));
            if (key == "k") {
                a.k = value;
                have_k = true;
            } else if (key == "count") {
                a.count = value;
                have_count = true;
            } else {
                throw DomainError("unknown annotation key '" + key + "'");
            }
            pos = comma + 1;
        }
        if (!have_k || !have_count)
            throw DomainError("--annotate-elimination needs k=<int>,count=<int>");
        annotation = a;
    }
    render_circle(text, alphabet, out_path, annotation);
    const std::size_t positions = classify_letters(text, alphabet).size();
    emit(Json{{"out", out_path}, {"positions", positions}});
    if (verbose) std::cerr << "wrote " << out_path << " with " << positions
                           << " positions\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular partitions, elimination circles, and block-constrained "
                 "sentence search"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --verbose appear after the subcommand
    bool verbose = false;
    app.add_flag("--verbose", verbose, "human-readable summary on stderr");

    std::size_t n = 0, r = 0, k = 0, count = 0, first = 0, second = 0, k_max = 0;
    std::uint64_t cap = 1'000'000;
    std::string mode = "removal", convention = "count-k", text, alphabet_spec = "english";
    std::string pattern, runs, dict_path, grammar_path, out_path, kind, annotate;
    std::string search_mode = "maximal";

    CLI::App* partition = app.add_subcommand("partition", "balanced circular partition");
    partition->add_option("--n", n)->required();
    partition->add_option("--r", r)->required();
    partition->add_option("--k", k)->required();
    partition->add_option("--mode", mode)->check(CLI::IsMember({"removal", "nonremoval"}));

    CLI::App* josephus = app.add_subcommand("josephus", "circular elimination trace");
    josephus->add_option("--n", n)->required();
    josephus->add_option("--k", k)->required();
    josephus->add_option("--count", count)->required();
    josephus->add_option("--convention", convention);

    CLI::App* solve_arr =
        app.add_subcommand("solve-arrangement", "two-class mnemonic circle");
    solve_arr->add_option("--first", first)->required();
    solve_arr->add_option("--second", second)->required();
    solve_arr->add_option("--k", k)->required();
    solve_arr->add_option("--convention", convention);

    CLI::App* solve_step =
        app.add_subcommand("solve-step", "step sizes preserving the first class");
    CLI::Option* step_runs = solve_step->add_option("--runs", runs);
    solve_step->add_option("--text", text, "derive the runs from a sentence")
        ->excludes(step_runs);
    solve_step->add_option("--alphabet", alphabet_spec);
    solve_step->add_option("--count", count)->required();
    solve_step->add_option("--k-max", k_max);
    solve_step->add_option("--convention", convention);

    CLI::App* grl = app.add_subcommand("grl", "generalized run-length encoding");
    grl->add_option("--text", text)->required();
    grl->add_option("--alphabet", alphabet_spec);

    CLI::App* count_cmd = app.add_subcommand("count", "arrangement counting");
    count_cmd->add_option("--n", n)->required();
    count_cmd->add_option("--r", r)->required();
    count_cmd->add_option("--kind", kind)->required();

    CLI::App* find = app.add_subcommand("find-sentence", "search for a sequence and "
                                                         "sentence matching a pattern");
    find->add_option("--pattern", pattern)->required();
    find->add_option("--dictionary", dict_path)->required();
    find->add_option("--grammar", grammar_path)->required();
    find->add_option("--alphabet", alphabet_spec);
    find->add_option("--mode", search_mode)
        ->check(CLI::IsMember({"maximal", "exhaustive"}));
    find->add_option("--cap", cap);

    CLI::App* check = app.add_subcommand("check-sentence", "verify a sentence against "
                                                           "a run pattern");
    check->add_option("--text", text)->required();
    check->add_option("--pattern", pattern)->required();
    check->add_option("--alphabet", alphabet_spec);

    CLI::App* render = app.add_subcommand("render-circle", "emit an SVG circle diagram");
    render->add_option("--text", text)->required();
    render->add_option("--out", out_path)->required();
    render->add_option("--alphabet", alphabet_spec);
    render->add_option("--annotate-elimination", annotate, "k=<int>,count=<int>");
    render->add_option("--convention", convention);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (partition->parsed()) return cmd_partition(n, r, k, mode, verbose);
        if (josephus->parsed()) return cmd_josephus(n, k, count, convention, verbose);
        if (solve_arr->parsed())
            return cmd_solve_arrangement(first, second, k, convention, verbose);
        if (solve_step->parsed()) {
            if (runs.empty() && text.empty())
                throw DomainError("solve-step needs --runs or --text");
            return cmd_solve_step(runs, text, alphabet_spec, count, k_max, convention,
                                  verbose);
        }
        if (grl->parsed()) return cmd_grl(text, alphabet_spec, verbose);
        if (count_cmd->parsed()) return cmd_count(n, r, kind, verbose);
        if (find->parsed())
            return cmd_find_sentence(pattern, dict_path, grammar_path, alphabet_spec,
                                     search_mode, cap, verbose);
        if (check->parsed())
            return cmd_check_sentence(text, pattern, alphabet_spec, verbose);
        if (render->parsed())
            return cmd_render(text, alphabet_spec, out_path, annotate, convention,
                              verbose);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
