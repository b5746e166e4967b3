#pragma once

#include <string>
#include <string_view>

#include "rtcycles/coloring.hpp"
#include "rtcycles/graph.hpp"

namespace rtc {

struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Standard graph6 (n <= 62): header byte 63+n, then the upper triangle in
// column-major order packed 6 bits per byte, each +63. No trailing newline.
std::string encode_graph6(const Graph& g);

// Exact inverse; rejects malformed length, bytes outside [63, 126), and
// nonzero padding bits past the triangle.
Graph decode_graph6(std::string_view text);

// Coloring file:
//   p rbcolor <n> <m>
//   e <u> <v> <R|B>     (m lines, u < v, 0-based)
//   c <comment>         (anywhere)
// LF line endings; emit writes edges in canonical (u, v) order.
std::string emit_coloring(const TwoColoring& c);
TwoColoring parse_coloring(std::string_view text);

}  // namespace rtc
