#include "gamechrom/textio.hpp"

#include <fstream>
#include <sstream>

namespace gamechrom {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // next content line split into tokens; empty vector at eof or separator
    bool next(std::vector<std::string>& tokens, bool* separator = nullptr) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            tokens.clear();
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;
            if (separator && tokens.size() == 1 && tokens[0] == "---") {
                *separator = true;
                return true;
            }
            return true;
        }
        return false;
    }
};

int parse_int(const std::string& tok, LineReader& r, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(r.line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

Position parse_one(LineReader& r, bool* hit_separator) {
    std::vector<std::string> tokens;
    bool sep = false;
    if (!r.next(tokens, &sep) || sep) throw ParseError(r.line_no, "expected header line 'n m'");
    if (tokens.size() != 2) throw ParseError(r.line_no, "header line must be 'n m'");
    int n = parse_int(tokens[0], r, "vertex count");
    int m = parse_int(tokens[1], r, "edge count");
    if (n < 0 || m < 0) throw ParseError(r.line_no, "negative count in header");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < m; ++i) {
        if (!r.next(tokens, &sep) || sep) throw ParseError(r.line_no, "expected an edge line");
        if (tokens.size() != 2) throw ParseError(r.line_no, "edge line must be 'u v'");
        edges.emplace_back(parse_int(tokens[0], r, "vertex id"),
                           parse_int(tokens[1], r, "vertex id"));
    }
    Position p;
    try {
        p = Position::uncolored(Forest::build(n, edges));
    } catch (const ForestError& e) {
        throw ParseError(r.line_no, e.what());
    }
    while (r.next(tokens, &sep)) {
        if (sep) break;
        if (tokens.size() != 3 || (tokens[0] != "c" && tokens[0] != "x"))
            throw ParseError(r.line_no, "expected 'c v k', 'x v k' or '---'");
        int v = parse_int(tokens[1], r, "vertex id");
        int k = parse_int(tokens[2], r, "color index");
        if (v < 0 || v >= n) throw ParseError(r.line_no, "vertex id out of range");
        if (k < 0 || k >= kMaxPalette) throw ParseError(r.line_no, "color index out of range");
        if (tokens[0] == "c") {
            if (p.color[v] != kUncolored) throw ParseError(r.line_no, "vertex colored twice");
            p.color[v] = k;
        } else {
            p.external[v] |= ColorMask(1) << k;
        }
    }
    for (auto [a, b] : p.forest.edges())
        if (p.colored(a) && p.color[a] == p.color[b])
            throw ParseError(r.line_no, "adjacent vertices share a color");
    for (Vertex v = 0; v < p.order(); ++v)
        if (p.colored(v) && (p.external[v] & (ColorMask(1) << p.color[v])))
            throw ParseError(r.line_no, "external set repeats the vertex's own color");
    if (hit_separator) *hit_separator = sep;
    return p;
}

}  // namespace

Position parse_position(std::istream& in) {
    LineReader r{in};
    return parse_one(r, nullptr);
}

Position parse_position_text(const std::string& text) {
    std::istringstream in(text);
    return parse_position(in);
}

Position load_position(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_position(in);
}

void write_position(std::ostream& out, const Position& p) {
    out << p.order() << ' ' << p.forest.edge_count() << '\n';
    for (auto [u, v] : p.forest.edges()) out << u << ' ' << v << '\n';
    for (Vertex v = 0; v < p.order(); ++v)
        if (p.colored(v)) out << "c " << v << ' ' << p.color[v] << '\n';
    for (Vertex v = 0; v < p.order(); ++v)
        for (int k = 0; k < kMaxPalette; ++k)
            if (p.external[v] & (ColorMask(1) << k)) out << "x " << v << ' ' << k << '\n';
}

std::string position_text(const Position& p) {
    std::ostringstream out;
    write_position(out, p);
    return out.str();
}

std::vector<Position> parse_position_stream(std::istream& in) {
    LineReader r{in};
    std::vector<Position> out;
    bool sep = true;
    while (sep) {
        sep = false;
        out.push_back(parse_one(r, &sep));
    }
    return out;
}

void write_position_stream(std::ostream& out, const std::vector<Position>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out << "---\n";
        write_position(out, ps[i]);
    }
}

}  // namespace gamechrom
