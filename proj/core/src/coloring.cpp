#include "rtcycles/coloring.hpp"

#include <bit>

namespace rtc {

TwoColoring TwoColoring::from_parts(Graph host, Graph red, Graph blue) {
    TwoColoring c{std::move(host), std::move(red), std::move(blue)};
    c.validate();
    return c;
}

TwoColoring TwoColoring::from_red_subgraph(const Graph& host, const Graph& red) {
    if (red.order() != host.order()) throw Error("red class must share the host's vertex set");
    Graph blue(host.order());
    for (auto [u, v] : edge_list(host)) {
        if (!red.has_edge(u, v)) blue.add_edge(u, v);
    }
    return from_parts(host, red, std::move(blue));
}

void TwoColoring::validate() const {
    if (red.order() != host.order() || blue.order() != host.order())
        throw Error("coloring classes must share the host's vertex set");
    int m_red = 0, m_blue = 0;
    for (int v = 0; v < host.order(); ++v) {
        uint64_t r = red.neighbors(v), b = blue.neighbors(v), h = host.neighbors(v);
        if (r & b) throw Error("red and blue classes overlap");
        if ((r | b) != h) throw Error("red and blue classes do not partition the host");
        m_red += std::popcount(r);
        m_blue += std::popcount(b);
    }
    if (m_red + m_blue != 2 * host.edge_count())
        throw Error("edge counts do not add up to the host");
}

}  // namespace rtc
