#pragma once

#include <optional>
#include <string>

#include "circlelang/alphabet.hpp"
#include "circlelang/josephus.hpp"

namespace circlelang {

struct EliminationAnnotation {
    std::size_t k;
    std::size_t count;
    Convention convention = Convention::CountK;
};

// Draws the classified letters of `text` clockwise around a circle starting
// at twelve o'clock: class-1 glyphs inside circles, later classes inside
// rectangles. With an annotation, each eliminated position gets its removal
// order printed beneath the glyph. Layout constants are fixed, so the output
// is byte-for-byte deterministic.
std::string render_circle_svg(const std::string& text, const PartitionedAlphabet& alphabet,
                              const std::optional<EliminationAnnotation>& annotation =
                                  std::nullopt);

// render_circle_svg written to a file; throws IoError or UnknownSymbol.
void render_circle(const std::string& text, const PartitionedAlphabet& alphabet,
                   const std::string& out_path,
                   const std::optional<EliminationAnnotation>& annotation = std::nullopt);

}  // namespace circlelang
