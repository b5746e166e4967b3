#include "rtcycles/graph_io.hpp"

#include <charconv>
#include <vector>

namespace rtc {

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6MaxOrder = 62;

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kG6MaxOrder) throw Error("graph6 single-byte header covers n <= 62");
    std::string out;
    out.push_back(static_cast<char>(kG6Offset + n));
    int bits = 0, acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(kG6Offset + acc));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(kG6Offset + (acc << (6 - bits))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Error("graph6: empty input");
    for (char ch : text) {
        unsigned b = static_cast<unsigned char>(ch);
        if (b < kG6Offset || b >= kG6Offset + 64)
            throw Error("graph6: byte out of range");
    }
    const int n = static_cast<unsigned char>(text[0]) - kG6Offset;
    if (n == 63) throw Error("graph6: multi-byte order headers are not supported");
    if (n < 1 || n > kG6MaxOrder) throw Error("graph6: order out of range");
    const int triangle = n * (n - 1) / 2;
    const size_t expected = 1 + static_cast<size_t>((triangle + 5) / 6);
    if (text.size() != expected)
        throw Error("graph6: malformed length (expected " + std::to_string(expected) +
                    " bytes, got " + std::to_string(text.size()) + ")");
    Graph g(n);
    int bit = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        int chunk = static_cast<unsigned char>(text[i]) - kG6Offset;
        for (int s = 5; s >= 0; --s, ++bit) {
            bool set = (chunk >> s) & 1;
            if (bit >= triangle) {
                if (set) throw Error("graph6: nonzero padding past the triangle");
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index -> (u, v), u < v.
                int v = 1, acc = 0;
                while (acc + v <= bit) acc += v, ++v;
                g.add_edge(bit - acc, v);
            }
        }
    }
    return g;
}

namespace {

// Canonical decimal token: digits only, no leading zeros (except "0" itself).
bool parse_canonical_int(std::string_view tok, int& out) {
    if (tok.empty() || tok.size() > 9) return false;
    if (tok.size() > 1 && tok[0] == '0') return false;
    int value = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + (ch - '0');
    }
    out = value;
    return true;
}

struct LineSplitter {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    bool next(std::string_view& line) {
        if (pos >= text.size()) return false;
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            ++line_no;
            throw ParseError("missing line feed at end of line", line_no);
        }
        line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        return true;
    }
};

std::vector<std::string_view> split_fields(std::string_view line, int line_no) {
    std::vector<std::string_view> fields;
    size_t i = 0;
    while (i < line.size()) {
        size_t sp = line.find(' ', i);
        if (sp == i) throw ParseError("stray space", line_no);
        if (sp == std::string_view::npos) {
            fields.push_back(line.substr(i));
            return fields;
        }
        fields.push_back(line.substr(i, sp - i));
        i = sp + 1;
    }
    throw ParseError("trailing space", line_no);
}

}  // namespace

std::string emit_coloring(const TwoColoring& c) {
    c.validate();
    std::string out = "p rbcolor " + std::to_string(c.host.order()) + " " +
                      std::to_string(c.host.edge_count()) + "\n";
    for (auto [u, v] : edge_list(c.host)) {
        out += "e " + std::to_string(u) + " " + std::to_string(v) + " ";
        out.push_back(c.red.has_edge(u, v) ? 'R' : 'B');
        out.push_back('\n');
    }
    return out;
}

TwoColoring parse_coloring(std::string_view text) {
    LineSplitter lines{text};
    std::string_view line;

    int n = -1, m = -1;
    while (lines.next(line)) {
        if (line.starts_with("c ") || line == "c") continue;
        auto fields = split_fields(line, lines.line_no);
        if (fields.size() != 4 || fields[0] != "p" || fields[1] != "rbcolor")
            throw ParseError("expected header 'p rbcolor <n> <m>'", lines.line_no);
        if (!parse_canonical_int(fields[2], n) || !parse_canonical_int(fields[3], m))
            throw ParseError("malformed count in header", lines.line_no);
        break;
    }
    if (n == -1) throw ParseError("missing header", lines.line_no + 1);
    if (n < 1 || n > kMaxOrder) throw ParseError("vertex count out of range", lines.line_no);

    Graph host(n), red(n), blue(n);
    int seen = 0;
    while (lines.next(line)) {
        if (line.starts_with("c ") || line == "c") continue;
        auto fields = split_fields(line, lines.line_no);
        if (fields.size() != 4 || fields[0] != "e")
            throw ParseError("expected edge line 'e <u> <v> <R|B>'", lines.line_no);
        int u = -1, v = -1;
        if (!parse_canonical_int(fields[1], u) || !parse_canonical_int(fields[2], v))
            throw ParseError("malformed vertex index", lines.line_no);
        if (u >= n || v >= n) throw ParseError("vertex index >= n", lines.line_no);
        if (u >= v) throw ParseError("edge endpoints must satisfy u < v", lines.line_no);
        if (fields[3] != "R" && fields[3] != "B")
            throw ParseError("color must be R or B", lines.line_no);
        if (host.has_edge(u, v)) {
            bool was_red = red.has_edge(u, v);
            bool is_red = fields[3] == "R";
            throw ParseError(was_red != is_red ? "edge colored twice" : "duplicate edge",
                             lines.line_no);
        }
        host.add_edge(u, v);
        (fields[3] == "R" ? red : blue).add_edge(u, v);
        if (++seen > m) throw ParseError("more edges than the header count", lines.line_no);
    }
    if (seen != m)
        throw ParseError("edge count mismatch with header (got " + std::to_string(seen) +
                             ", expected " + std::to_string(m) + ")",
                         lines.line_no);
    return TwoColoring::from_parts(std::move(host), std::move(red), std::move(blue));
}

}  // namespace rtc
