#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rtc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// One adjacency row per vertex, one bit per neighbor. Order is capped at 64
// so a row is a single machine word: edge tests are one shift, neighborhood
// intersections one AND.
inline constexpr int kMaxOrder = 64;

class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 1 || n > kMaxOrder)
            throw Error("graph order must be in [1, 64], got " + std::to_string(n));
    }

    int order() const noexcept { return n_; }

    bool has_edge(int u, int v) const noexcept { return (adj_[static_cast<size_t>(u)] >> v) & 1u; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
        adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
        adj_[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
    }

    uint64_t neighbors(int v) const noexcept { return adj_[static_cast<size_t>(v)]; }

    int degree(int v) const noexcept { return std::popcount(adj_[static_cast<size_t>(v)]); }

    int edge_count() const noexcept {
        int total = 0;
        for (uint64_t row : adj_) total += std::popcount(row);
        return total / 2;
    }

    // All n vertex bits set.
    uint64_t vertex_mask() const noexcept {
        return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_pair(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw Error("vertex out of range");
        if (u == v) throw Error("self-loops are not allowed");
    }

    int n_;
    std::vector<uint64_t> adj_;
};

struct DegreeStats {
    int min_degree;
    int max_degree;
    int edge_count;
};

DegreeStats degree_stats(const Graph& g);

// Class sizes of a multipartite host; every entry >= 1, total <= 64.
struct PartSizes {
    std::vector<int> sizes;
    void validate() const;
    int total() const;
};

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_multipartite(const PartSizes& parts);

// Each pattern vertex i becomes the independent block [i*t, (i+1)*t); pattern
// edges become complete bipartite bundles between blocks.
Graph blow_up(const Graph& pattern, int t);

Graph complement(const Graph& g);

// Two-sided certificate: a proper 2-sided partition when bipartite, a simple
// odd cycle (closing edge back-to-front implied) when not.
struct BipartiteCheck {
    bool bipartite = false;
    uint64_t side[2] = {0, 0};
    std::vector<int> odd_cycle;
};

BipartiteCheck is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// True iff order >= 3, connected, and no articulation vertex (lowpoint DFS).
bool is_two_connected(const Graph& g);

// Canonical edge order: (u, v) with u < v, lexicographic.
std::vector<std::pair<int, int>> edge_list(const Graph& g);

}  // namespace rtc
