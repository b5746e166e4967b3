#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rtcycles/graph.hpp"

namespace rtc {

struct BudgetExceeded : Error {
    uint64_t cap;
    int at_length;  // cycle/path length being decided, -1 when not applicable
    explicit BudgetExceeded(uint64_t cap_, int at_length_ = -1)
        : Error("search budget of " + std::to_string(cap_) + " node expansions exceeded"),
          cap(cap_),
          at_length(at_length_) {}
};

// Node-expansion meter for the exact engines. Verifiers must distinguish
// "absent" from "unknown", so exceeding the cap throws instead of degrading.
struct Budget {
    uint64_t cap = 1'000'000'000ULL;
    uint64_t used = 0;
    int context_length = -1;

    void charge() {
        if (++used > cap) throw BudgetExceeded(cap, context_length);
    }
};

// Set of cycle lengths present in a graph. "Length" of a cycle is its number
// of vertices (= number of edges); a path "of order k" has k vertices.
// Lengths 3..order are stored at bits 0..order-3.
class CycleSpectrum {
public:
    CycleSpectrum(int order, uint64_t present_from_3) : order_(order), present_(present_from_3) {}

    int order() const { return order_; }
    bool has(int k) const { return k >= 3 && k <= order_ && ((present_ >> (k - 3)) & 1); }

    // Longest even/odd cycle length; 0 when no cycle of that parity exists.
    int ec() const { return longest(0); }
    int oc() const { return longest(1); }

    std::vector<int> lengths() const {
        std::vector<int> out;
        for (int k = 3; k <= order_; ++k)
            if (has(k)) out.push_back(k);
        return out;
    }

    bool operator==(const CycleSpectrum&) const = default;

private:
    int longest(int parity) const {
        for (int k = order_; k >= 3; --k)
            if ((k & 1) == parity && has(k)) return k;
        return 0;
    }

    int order_;
    uint64_t present_;
};

// Exact decision: does g contain a simple cycle on exactly k vertices?
// Anchored DFS over vertices greater than the anchor, pruned by a
// parity-aware reachability bound from the current endpoint back to the
// anchor's neighborhood.
bool has_cycle_of_length(const Graph& g, int k, Budget& budget);
bool has_cycle_of_length(const Graph& g, int k);

// Does g contain a simple k-cycle using the edge (u, v)?
bool has_cycle_with_edge(const Graph& g, int u, int v, int k, Budget& budget);

CycleSpectrum spectrum(const Graph& g, Budget& budget);
CycleSpectrum spectrum(const Graph& g);

// (ec, oc) without materializing the full spectrum.
std::pair<int, int> extreme_cycles(const Graph& g, Budget& budget);
std::pair<int, int> extreme_cycles(const Graph& g);

// Longest cycle length overall (max of ec and oc); 0 for forests.
int circumference(const Graph& g, Budget& budget);

// Exact decision: does g contain a simple path on exactly k vertices?
bool has_path_of_order(const Graph& g, int k, Budget& budget);
bool has_path_of_order(const Graph& g, int k);

// Randomized one-sided k-cycle detection (color coding). `found == true`
// always carries a witness cycle that validates edge-by-edge against g;
// false only means "not found in `trials` colorings". Deterministic for a
// fixed seed; trial colorings derive from (seed, trial index).
struct ColorCodingHit {
    bool found = false;
    std::vector<int> cycle;
};

ColorCodingHit color_coding_find_cycle(const Graph& g, int k, int trials, uint64_t seed);
bool color_coding_has_cycle(const Graph& g, int k, int trials, uint64_t seed);

}  // namespace rtc
