#pragma once

#include <string>
#include <vector>

#include "circlelang/alphabet.hpp"
#include "circlelang/errors.hpp"

namespace circlelang {

// Alphabet file: {"classes": {"<name>": ["<symbol>", ...], ...},
// "complete": bool}. Symbols are single-character strings; the order of
// classes in the file fixes the class indices.
PartitionedAlphabet parse_alphabet_json(const std::string& json_text);

// "english" gives the built-in partition, anything else is read as a path to
// an alphabet JSON file.
PartitionedAlphabet load_alphabet(const std::string& spec);

// Dictionary file: one word per line; blank lines and lines starting with '#'
// are skipped. Words are uppercased when the alphabet folds case, and
// duplicates are dropped (first occurrence wins).
std::vector<std::string> parse_dictionary(const std::string& text,
                                          const PartitionedAlphabet& alphabet);
std::vector<std::string> load_dictionary(const std::string& path,
                                         const PartitionedAlphabet& alphabet);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace circlelang
