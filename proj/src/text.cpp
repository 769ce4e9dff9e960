#include "circlelang/text.hpp"

namespace circlelang {

SymbolString utf8_decode(std::string_view text) {
    SymbolString out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char b0 = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw Utf8Error("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > text.size())
            throw Utf8Error("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (std::size_t j = 1; j < len; ++j) {
            unsigned char b = static_cast<unsigned char>(text[i + j]);
            if ((b & 0xC0) != 0x80)
                throw Utf8Error("invalid UTF-8 continuation byte at offset " +
                                std::to_string(i + j));
            cp = (cp << 6) | (b & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(Symbol cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string utf8_encode(const SymbolString& text) {
    std::string out;
    out.reserve(text.size());
    for (Symbol cp : text) out += utf8_encode(cp);
    return out;
}

SymbolString ascii_upper(const SymbolString& text) {
    SymbolString out = text;
    for (Symbol& cp : out) cp = ascii_upper(cp);
    return out;
}

}  // namespace circlelang
