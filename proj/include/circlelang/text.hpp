#pragma once

#include <string>
#include <string_view>

#include "circlelang/errors.hpp"

namespace circlelang {

// Symbols are single Unicode code points; text is handled as code-point
// sequences internally and UTF-8 at the I/O boundary.
using Symbol = char32_t;
using SymbolString = std::u32string;

class Utf8Error : public Error {
public:
    using Error::Error;
};

// Decodes UTF-8 into code points. Throws Utf8Error on malformed input.
SymbolString utf8_decode(std::string_view text);

std::string utf8_encode(const SymbolString& text);
std::string utf8_encode(Symbol cp);

inline bool is_ascii_alpha(Symbol cp) {
    return (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
}

inline Symbol ascii_upper(Symbol cp) {
    return (cp >= U'a' && cp <= U'z') ? cp - (U'a' - U'A') : cp;
}

SymbolString ascii_upper(const SymbolString& text);

}  // namespace circlelang
