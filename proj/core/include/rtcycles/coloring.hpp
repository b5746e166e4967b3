#pragma once

#include "rtcycles/graph.hpp"

namespace rtc {

enum class EdgeColor : uint8_t { Red, Blue };

inline char color_letter(EdgeColor c) { return c == EdgeColor::Red ? 'R' : 'B'; }

// An exact partition of the host's edge set into a red and a blue spanning
// subgraph. All three graphs share the vertex set.
struct TwoColoring {
    Graph host;
    Graph red;
    Graph blue;

    static TwoColoring from_parts(Graph host, Graph red, Graph blue);

    // blue := host minus red.
    static TwoColoring from_red_subgraph(const Graph& host, const Graph& red);

    const Graph& cls(EdgeColor c) const { return c == EdgeColor::Red ? red : blue; }

    // Partition invariant: disjoint classes, union equal to host, same order.
    void validate() const;

    bool operator==(const TwoColoring&) const = default;
};

}  // namespace rtc
