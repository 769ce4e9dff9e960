#include "circlelang/render.hpp"

#include <cmath>
#include <cstdio>

#include "circlelang/io.hpp"
#include "circlelang/search.hpp"

namespace circlelang {

namespace {

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_circle_svg(const std::string& text, const PartitionedAlphabet& alphabet,
                              const std::optional<EliminationAnnotation>& annotation) {
    const std::vector<LetterClass> letters = classify_letters(text, alphabet);
    const std::size_t n = letters.size();

    // Removal order per position (1-based), 0 when untouched.
    std::vector<std::size_t> order(n + 1, 0);
    if (annotation && n > 0) {
        const EliminationTrace trace =
            eliminate(n, annotation->k, annotation->count, annotation->convention);
        for (std::size_t i = 0; i < trace.removed.size(); ++i)
            order[trace.removed[i]] = i + 1;
    }

    const double glyph_half = 13.0;
    const double radius = n > 1 ? std::max(70.0, 7.0 * static_cast<double>(n)) : 0.0;
    const double margin = 48.0;
    const double center = radius + margin;
    const double size = 2.0 * center;
    const double pi = 3.14159265358979323846;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(size) +
           "\" height=\"" + fmt2(size) + "\" viewBox=\"0 0 " + fmt2(size) + " " +
           fmt2(size) + "\">\n";
    svg += "  <style>text{font-family:monospace;font-size:16px;text-anchor:middle;"
           "dominant-baseline:central}.ord{font-size:10px;fill:#555}</style>\n";

    for (std::size_t i = 0; i < n; ++i) {
        // Clockwise from twelve o'clock; SVG's y axis points down, so
        // increasing angle already walks clockwise.
        const double theta = -pi / 2.0 + 2.0 * pi * static_cast<double>(i) /
                                             static_cast<double>(n);
        const double x = center + radius * std::cos(theta);
        const double y = center + radius * std::sin(theta);
        if (letters[i].class_index == 0) {
            svg += "  <circle cx=\"" + fmt2(x) + "\" cy=\"" + fmt2(y) + "\" r=\"" +
                   fmt2(glyph_half) + "\" fill=\"none\" stroke=\"black\"/>\n";
        } else {
            svg += "  <rect x=\"" + fmt2(x - glyph_half) + "\" y=\"" + fmt2(y - glyph_half) +
                   "\" width=\"" + fmt2(2 * glyph_half) + "\" height=\"" +
                   fmt2(2 * glyph_half) + "\" fill=\"none\" stroke=\"black\"/>\n";
        }
        svg += "  <text x=\"" + fmt2(x) + "\" y=\"" + fmt2(y) + "\">" +
               xml_escape(utf8_encode(letters[i].letter)) + "</text>\n";
        if (order[i + 1] != 0) {
            svg += "  <text class=\"ord\" x=\"" + fmt2(x) + "\" y=\"" +
                   fmt2(y + glyph_half + 11.0) + "\">" + std::to_string(order[i + 1]) +
                   "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

void render_circle(const std::string& text, const PartitionedAlphabet& alphabet,
                   const std::string& out_path,
                   const std::optional<EliminationAnnotation>& annotation) {
    write_file(out_path, render_circle_svg(text, alphabet, annotation));
}

}  // namespace circlelang
