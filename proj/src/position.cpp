#include "gamechrom/position.hpp"

#include <bit>
#include <string>

namespace gamechrom {

Position Position::uncolored(Forest f) {
    Position p;
    p.color.assign(f.order(), kUncolored);
    p.external.assign(f.order(), 0);
    p.forest = std::move(f);
    return p;
}

ColorMask Position::forbidden(Vertex v) const {
    ColorMask m = external[v];
    for (Vertex w : forest.neighbors(v))
        if (color[w] != kUncolored) m |= ColorMask(1) << color[w];
    return m;
}

int Position::legal_color_count(Vertex v, int palette) const {
    return std::popcount(static_cast<unsigned>(full_mask(palette) & ~forbidden(v)));
}

void Position::check_legal(int palette) const {
    if (palette < 0 || palette > kMaxPalette)
        throw PositionError("palette size " + std::to_string(palette) + " out of range");
    for (Vertex v = 0; v < order(); ++v) {
        if (external[v] & ~full_mask(palette))
            throw PositionError("external set at vertex " + std::to_string(v) +
                                " exceeds the palette");
        if (color[v] == kUncolored) continue;
        if (color[v] < 0 || color[v] >= palette)
            throw PositionError("color at vertex " + std::to_string(v) + " exceeds the palette");
        if (external[v] & (ColorMask(1) << color[v]))
            throw PositionError("vertex " + std::to_string(v) +
                                " carries its own color in its external set");
        for (Vertex w : forest.neighbors(v))
            if (color[w] == color[v])
                throw PositionError("adjacent vertices " + std::to_string(v) + " and " +
                                    std::to_string(w) + " share a color");
    }
}

}  // namespace gamechrom
