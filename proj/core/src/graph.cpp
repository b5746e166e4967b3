#include "rtcycles/graph.hpp"

#include <algorithm>
#include <bit>

namespace rtc {

DegreeStats degree_stats(const Graph& g) {
    int lo = kMaxOrder + 1, hi = 0, sum = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        sum += d;
    }
    return {lo, hi, sum / 2};
}

void PartSizes::validate() const {
    if (sizes.empty()) throw Error("part list must be nonempty");
    int sum = 0;
    for (int s : sizes) {
        if (s < 1) throw Error("every part must have size >= 1");
        sum += s;
    }
    if (sum > kMaxOrder) throw Error("total order exceeds 64");
}

int PartSizes::total() const {
    int sum = 0;
    for (int s : sizes) sum += s;
    return sum;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    return complete_multipartite({{a, b}});
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle graph needs order >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_multipartite(const PartSizes& parts) {
    parts.validate();
    Graph g(parts.total());
    int a_start = 0;
    for (size_t i = 0; i < parts.sizes.size(); ++i) {
        int a_end = a_start + parts.sizes[i];
        int b_start = a_end;
        for (size_t j = i + 1; j < parts.sizes.size(); ++j) {
            int b_end = b_start + parts.sizes[j];
            for (int u = a_start; u < a_end; ++u)
                for (int v = b_start; v < b_end; ++v) g.add_edge(u, v);
            b_start = b_end;
        }
        a_start = a_end;
    }
    return g;
}

Graph blow_up(const Graph& pattern, int t) {
    if (t < 1) throw Error("blow-up factor must be >= 1");
    if (pattern.order() > kMaxOrder / t) throw Error("blow-up exceeds 64 vertices");
    Graph g(pattern.order() * t);
    for (int i = 0; i < pattern.order(); ++i)
        for (int j = i + 1; j < pattern.order(); ++j) {
            if (!pattern.has_edge(i, j)) continue;
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b) g.add_edge(i * t + a, j * t + b);
        }
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), 0);
    BipartiteCheck out;

    for (int root = 0; root < n; ++root) {
        if (color[static_cast<size_t>(root)] != -1) continue;
        color[static_cast<size_t>(root)] = 0;
        std::vector<int> queue = {root};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            uint64_t nbrs = g.neighbors(u);
            while (nbrs) {
                int v = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = color[static_cast<size_t>(u)] ^ 1;
                    parent[static_cast<size_t>(v)] = u;
                    depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    // Conflict edge closes an odd cycle through the BFS tree:
                    // climb both endpoints to their lowest common ancestor.
                    std::vector<int> up, vp;
                    int a = u, b = v;
                    while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
                        up.push_back(a);
                        a = parent[static_cast<size_t>(a)];
                    }
                    while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
                        vp.push_back(b);
                        b = parent[static_cast<size_t>(b)];
                    }
                    while (a != b) {
                        up.push_back(a);
                        vp.push_back(b);
                        a = parent[static_cast<size_t>(a)];
                        b = parent[static_cast<size_t>(b)];
                    }
                    // Cycle u -> ... -> lca -> ... -> v, closed by the conflict edge.
                    out.odd_cycle.clear();
                    for (int x : up) out.odd_cycle.push_back(x);
                    out.odd_cycle.push_back(a);
                    std::reverse(vp.begin(), vp.end());
                    for (int x : vp) out.odd_cycle.push_back(x);
                    out.bipartite = false;
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    for (int v = 0; v < n; ++v) out.side[color[static_cast<size_t>(v)]] |= uint64_t{1} << v;
    return out;
}

namespace {

uint64_t reach_from(const Graph& g, int start, uint64_t allowed) {
    uint64_t seen = uint64_t{1} << start;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
    return reach_from(g, 0, g.vertex_mask()) == g.vertex_mask();
}

int component_count(const Graph& g) {
    uint64_t left = g.vertex_mask();
    int count = 0;
    while (left) {
        int v = std::countr_zero(left);
        left &= ~reach_from(g, v, left);
        ++count;
    }
    return count;
}

namespace {

struct LowpointDfs {
    const Graph& g;
    std::vector<int> depth, low;
    bool has_articulation = false;
    int visited = 0;

    explicit LowpointDfs(const Graph& graph)
        : g(graph),
          depth(static_cast<size_t>(graph.order()), -1),
          low(static_cast<size_t>(graph.order()), 0) {}

    void run(int v, int parent, int d) {
        depth[static_cast<size_t>(v)] = d;
        low[static_cast<size_t>(v)] = d;
        ++visited;
        int children = 0;
        uint64_t nbrs = g.neighbors(v);
        while (nbrs) {
            int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (depth[static_cast<size_t>(w)] == -1) {
                ++children;
                run(w, v, d + 1);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
                if (parent != -1 && low[static_cast<size_t>(w)] >= d) has_articulation = true;
            } else if (w != parent) {
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], depth[static_cast<size_t>(w)]);
            }
        }
        if (parent == -1 && children > 1) has_articulation = true;
    }
};

}  // namespace

bool is_two_connected(const Graph& g) {
    if (g.order() < 3) return false;
    LowpointDfs dfs(g);
    dfs.run(0, -1, 0);
    return dfs.visited == g.order() && !dfs.has_articulation;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < g.order(); ++u) {
        uint64_t higher = g.neighbors(u) >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            higher &= higher - 1;
            edges.emplace_back(u, v);
        }
    }
    return edges;
}

}  // namespace rtc
