#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gamechrom/forest.hpp"

namespace gamechrom {

// Color index within a palette of size t. kUncolored marks an uncolored vertex.
using Color = int;
constexpr Color kUncolored = -1;

// Bitmask over color indices; palettes are capped at kMaxPalette colors.
using ColorMask = std::uint16_t;
constexpr int kMaxPalette = 12;

constexpr ColorMask full_mask(int palette) {
    return static_cast<ColorMask>((1u << palette) - 1u);
}

struct PositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A forest with a partial proper coloring plus per-vertex external color sets.
// An external color at v stands for an added colored leaf adjacent to v;
// duplicate same-colored leaves collapse to one set entry.
struct Position {
    Forest forest;
    std::vector<Color> color;        // kUncolored or a color index
    std::vector<ColorMask> external; // colors of modeled external leaves

    static Position uncolored(Forest f);

    int order() const { return forest.order(); }
    bool colored(Vertex v) const { return color[v] != kUncolored; }

    // Colors forbidden at v: colored neighbors plus the external set.
    ColorMask forbidden(Vertex v) const;
    bool legal(Vertex v, Color c) const {
        return !colored(v) && !(forbidden(v) & (ColorMask(1) << c));
    }
    int legal_color_count(Vertex v, int palette) const;

    // Throws PositionError if the coloring is improper, a vertex's external
    // set contains its own color, or a mask exceeds the palette.
    void check_legal(int palette) const;

    bool operator==(const Position& other) const {
        return forest == other.forest && color == other.color && external == other.external;
    }
};

}  // namespace gamechrom
