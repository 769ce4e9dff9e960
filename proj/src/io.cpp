#include "circlelang/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace circlelang {

// ordered_json keeps the file's class order, which is what fixes the class
// indices.
using Json = nlohmann::ordered_json;

PartitionedAlphabet parse_alphabet_json(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw IoError(std::string("alphabet file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_object())
        throw IoError("alphabet file needs a \"classes\" object");

    std::vector<std::pair<std::string, SymbolString>> classes;
    for (const auto& [name, entries] : doc["classes"].items()) {
        if (!entries.is_array())
            throw IoError("class \"" + name + "\" must be an array of symbols");
        SymbolString symbols;
        for (const auto& entry : entries) {
            if (!entry.is_string())
                throw IoError("class \"" + name + "\" has a non-string symbol");
            const SymbolString decoded = utf8_decode(entry.get<std::string>());
            if (decoded.size() != 1)
                throw IoError("symbol \"" + entry.get<std::string>() + "\" in class \"" +
                              name + "\" is not a single character");
            symbols.push_back(decoded[0]);
        }
        classes.emplace_back(name, std::move(symbols));
    }
    const bool complete = doc.value("complete", true);
    return build_alphabet(std::move(classes), complete);
}

PartitionedAlphabet load_alphabet(const std::string& spec) {
    if (spec == "english") return english_partition();
    return parse_alphabet_json(read_file(spec));
}

std::vector<std::string> parse_dictionary(const std::string& text,
                                          const PartitionedAlphabet& alphabet) {
    std::vector<std::string> words;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos || line[begin] == '#') continue;
        const std::size_t end = line.find_last_not_of(" \t");
        std::string word = line.substr(begin, end - begin + 1);
        if (alphabet.fold_case()) word = utf8_encode(ascii_upper(utf8_decode(word)));
        if (std::find(words.begin(), words.end(), word) == words.end())
            words.push_back(std::move(word));
    }
    return words;
}

std::vector<std::string> load_dictionary(const std::string& path,
                                         const PartitionedAlphabet& alphabet) {
    return parse_dictionary(read_file(path), alphabet);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << contents;
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace circlelang
