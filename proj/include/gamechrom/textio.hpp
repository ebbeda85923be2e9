#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gamechrom/position.hpp"

namespace gamechrom {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Text graph format: line 1 "n m"; m lines "u v"; optional "c v k" coloring
// lines and "x v k" external-color lines. '#' starts a comment line.
Position parse_position(std::istream& in);
Position parse_position_text(const std::string& text);
Position load_position(const std::string& path);

void write_position(std::ostream& out, const Position& p);
std::string position_text(const Position& p);

// Streams of graphs separated by "---" lines.
std::vector<Position> parse_position_stream(std::istream& in);
void write_position_stream(std::ostream& out, const std::vector<Position>& ps);

}  // namespace gamechrom
