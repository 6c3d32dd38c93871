#pragma once

#include <optional>
#include <string>

#include "sturmian/geometry.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

enum class RenderFormat { svg, ascii };

// Figure description: the n-grid, one straight line (grid line or defining
// line), its integer points, and optionally a word's broken line.
struct RenderSpec {
    std::optional<GridLine> line;
    std::optional<DefiningLine> defining;
    long long n = 0;
    std::optional<Word> word;  // when present, |word| must equal n
    RenderFormat format = RenderFormat::svg;
    long long cell = 32;       // pixels per unit cell (svg only)
};

// Deterministic figure text: SVG carries the grid as a single path, exactly
// one line element for the straight line, one polyline with n+1 vertices for
// the word (when present), and a dot per integer point; y grows upward via a
// flip transform. ASCII draws the same content in monospace cells.
std::string render(const RenderSpec& spec);

}  // namespace sturmian
