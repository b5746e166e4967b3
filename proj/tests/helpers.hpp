#pragma once

// Test-only oracles, deliberately independent of the engine's search paths:
// plain sequence enumeration with nothing smarter than consecutive-adjacency
// checks, definition-level connectivity, and a from-scratch graph6 encoder.

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <vector>

#include "rtcycles/graph.hpp"
#include "rtcycles/rng.hpp"

namespace rtc::test {

// All cycle lengths, by enumerating vertex sequences (each extension must be
// adjacent and unused; a sequence of length >= 3 whose last vertex sees the
// first closes a cycle).
inline std::set<int> naive_spectrum(const Graph& g) {
    std::set<int> lengths;
    const int n = g.order();
    std::vector<int> seq;
    uint64_t used = 0;
    auto extend = [&](auto&& self, int v) -> void {
        seq.push_back(v);
        used |= uint64_t{1} << v;
        if (seq.size() >= 3 && g.has_edge(seq.back(), seq.front()))
            lengths.insert(static_cast<int>(seq.size()));
        for (int w = 0; w < n; ++w)
            if (g.has_edge(v, w) && !((used >> w) & 1)) self(self, w);
        used &= ~(uint64_t{1} << seq.back());
        seq.pop_back();
    };
    for (int s = 0; s < n; ++s) extend(extend, s);
    return lengths;
}

inline bool naive_has_cycle(const Graph& g, int k) { return naive_spectrum(g).count(k) > 0; }

inline int naive_longest_path_order(const Graph& g) {
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    std::vector<int> seq;
    uint64_t used = 0;
    auto extend = [&](auto&& self, int v) -> void {
        seq.push_back(v);
        used |= uint64_t{1} << v;
        best = std::max(best, static_cast<int>(seq.size()));
        for (int w = 0; w < n; ++w)
            if (g.has_edge(v, w) && !((used >> w) & 1)) self(self, w);
        used &= ~(uint64_t{1} << seq.back());
        seq.pop_back();
    };
    for (int s = 0; s < n; ++s) extend(extend, s);
    return best;
}

// Definition-level check: order >= 3, connected, and removing any one vertex
// keeps the rest connected.
inline bool naive_two_connected(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    auto connected_within = [&](uint64_t allowed) {
        if (!allowed) return true;
        uint64_t seen = allowed & (~allowed + 1);
        for (;;) {
            uint64_t grow = seen;
            uint64_t scan = seen;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= g.neighbors(v) & allowed;
            }
            if (grow == seen) break;
            seen = grow;
        }
        return seen == allowed;
    };
    if (!connected_within(g.vertex_mask())) return false;
    for (int v = 0; v < n; ++v)
        if (!connected_within(g.vertex_mask() & ~(uint64_t{1} << v))) return false;
    return true;
}

// Plain two-colorability by DFS, no certificates.
inline bool naive_two_colorable(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<size_t>(root)] != -1) continue;
        color[static_cast<size_t>(root)] = 0;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!g.has_edge(u, w)) continue;
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = color[static_cast<size_t>(u)] ^ 1;
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Independent graph6 encoder: explicit bit string, then 6-bit packing.
inline std::string reference_graph6(const Graph& g) {
    std::string bits;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(63 + g.order()));
    for (size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (size_t b = 0; b < 6; ++b) value = value * 2 + (bits[i + b] - '0');
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

inline Graph random_graph(int n, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) g.add_edge(u, v);
    return g;
}

// Edge probability num/den.
inline Graph random_graph_p(int n, uint32_t num, uint32_t den, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(den) < num) g.add_edge(u, v);
    return g;
}

// Outer 5-cycle, inner pentagram, spokes.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

}  // namespace rtc::test
