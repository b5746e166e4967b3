#include "rtcycles/cycles.hpp"

#include <algorithm>
#include <bit>

#include "rtcycles/rng.hpp"

namespace rtc {

namespace {

constexpr int kUnreachable = 1 << 20;

uint64_t bit(int v) { return uint64_t{1} << v; }

// Minimum walk lengths (split by parity) from `from` through `avail` to any
// vertex of `targets`, capped at `cap` steps. A simple path of r edges implies
// a walk of r edges, so "no walk of matching parity within r" is a sound
// reason to prune.
struct ParityReach {
    int even = kUnreachable;
    int odd = kUnreachable;
    int of(int parity) const { return parity ? odd : even; }
};

ParityReach parity_reach(const Graph& g, int from, uint64_t avail, uint64_t targets, int cap) {
    ParityReach out;
    uint64_t seen[2] = {bit(from), 0};
    uint64_t frontier = bit(from);
    for (int s = 1; s <= cap && frontier; ++s) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        int par = s & 1;
        frontier = next & avail & ~seen[par];
        seen[par] |= frontier;
        if (frontier & targets) {
            (par ? out.odd : out.even) = std::min(par ? out.odd : out.even, s);
            if (out.even < kUnreachable && out.odd < kUnreachable) break;
        }
    }
    return out;
}

struct AnchoredCycleSearch {
    const Graph& g;
    Budget& budget;
    int k;
    int anchor;
    uint64_t allowed;      // vertices strictly above the anchor
    uint64_t anchor_nbrs;  // N(anchor) & allowed

    bool run(int v, int depth, uint64_t visited) {
        budget.charge();
        if (depth == k - 1) return (g.neighbors(v) >> anchor) & 1;
        uint64_t avail = allowed & ~visited;
        int rem = k - 1 - depth;
        if (std::popcount(avail) < rem) return false;
        uint64_t targets = anchor_nbrs & avail;
        if (!targets) return false;
        uint64_t cands = g.neighbors(v) & avail;
        if (rem == 1) {
            cands &= targets;
        } else {
            ParityReach pr = parity_reach(g, v, avail, targets, rem);
            if (pr.of(rem & 1) > rem) return false;
        }
        while (cands) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            if (run(w, depth + 1, visited | bit(w))) return true;
        }
        return false;
    }
};

uint64_t above(int v) { return v >= 63 ? 0 : ~uint64_t{0} << (v + 1); }

}  // namespace

bool has_cycle_of_length(const Graph& g, int k, Budget& budget) {
    if (k < 3 || k > g.order())
        throw Error("cycle length must be in [3, " + std::to_string(g.order()) + "], got " +
                    std::to_string(k));
    budget.context_length = k;
    for (int a = 0; a + k <= g.order(); ++a) {
        uint64_t allowed = above(a) & g.vertex_mask();
        AnchoredCycleSearch search{g, budget, k, a, allowed, g.neighbors(a) & allowed};
        if (!search.anchor_nbrs) continue;
        if (search.run(a, 0, bit(a))) return true;
    }
    return false;
}

bool has_cycle_of_length(const Graph& g, int k) {
    Budget budget;
    return has_cycle_of_length(g, k, budget);
}

namespace {

struct EdgeAnchoredSearch {
    const Graph& g;
    Budget& budget;
    int k;
    int u;  // closing endpoint
    uint64_t u_nbrs;

    bool run(int x, int depth, uint64_t visited) {
        budget.charge();
        if (depth == k - 2) return (g.neighbors(x) >> u) & 1;
        uint64_t avail = ~visited & g.vertex_mask();
        int rem = k - 2 - depth;
        if (std::popcount(avail) < rem) return false;
        uint64_t targets = u_nbrs & avail;
        if (!targets) return false;
        uint64_t cands = g.neighbors(x) & avail;
        if (rem == 1) {
            cands &= targets;
        } else {
            ParityReach pr = parity_reach(g, x, avail, targets, rem);
            if (pr.of(rem & 1) > rem) return false;
        }
        while (cands) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            if (run(w, depth + 1, visited | bit(w))) return true;
        }
        return false;
    }
};

}  // namespace

bool has_cycle_with_edge(const Graph& g, int u, int v, int k, Budget& budget) {
    if (k < 3 || k > g.order()) throw Error("cycle length out of range");
    if (!g.has_edge(u, v)) return false;
    budget.context_length = k;
    EdgeAnchoredSearch search{g, budget, k, u, g.neighbors(u)};
    return search.run(v, 0, bit(u) | bit(v));
}

namespace {

// Length masks are offset by 3: bit k-3 stands for cycle length k.
uint64_t length_bit(int k) { return uint64_t{1} << (k - 3); }

uint64_t lengths_up_to(int k) {
    if (k < 3) return 0;
    return k - 2 >= 64 ? ~uint64_t{0} : (uint64_t{1} << (k - 2)) - 1;
}

uint64_t lengths_from(int k) {
    int b = std::max(0, k - 3);
    return b >= 64 ? 0 : ~uint64_t{0} << b;
}

struct SpectrumSearch {
    const Graph& g;
    Budget& budget;
    int anchor = 0;
    uint64_t allowed = 0;
    uint64_t anchor_nbrs = 0;
    uint64_t found = 0;
    uint64_t todo = 0;  // lengths not found yet, over all anchors

    void run(int v, int depth, uint64_t visited) {
        if (!todo) return;
        budget.charge();
        if (depth >= 2 && ((g.neighbors(v) >> anchor) & 1)) {
            found |= length_bit(depth + 1);
            todo &= ~length_bit(depth + 1);
        }
        uint64_t avail = allowed & ~visited;
        // Lengths a descendant of this node could still close.
        int max_len = depth + 1 + std::popcount(avail);
        uint64_t hunted = todo & lengths_from(depth + 2) & lengths_up_to(max_len);
        if (!hunted) return;
        uint64_t targets = anchor_nbrs & avail;
        if (!targets) return;
        int max_hunted_len = 63 - std::countl_zero(hunted) + 3;
        ParityReach pr = parity_reach(g, v, avail, targets, max_hunted_len - 1 - depth);
        bool any_feasible = false;
        uint64_t scan = hunted;
        while (scan) {
            int len = std::countr_zero(scan) + 3;
            scan &= scan - 1;
            int rem = len - 1 - depth;
            if (pr.of(rem & 1) <= rem) {
                any_feasible = true;
                break;
            }
        }
        if (!any_feasible) return;
        uint64_t cands = g.neighbors(v) & avail;
        while (cands) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            run(w, depth + 1, visited | bit(w));
        }
    }
};

}  // namespace

CycleSpectrum spectrum(const Graph& g, Budget& budget) {
    const int n = g.order();
    budget.context_length = -1;
    SpectrumSearch search{g, budget};
    if (n >= 3) {
        search.todo = lengths_up_to(n);
        for (int a = 0; a + 3 <= n && search.todo; ++a) {
            search.anchor = a;
            search.allowed = above(a) & g.vertex_mask();
            search.anchor_nbrs = g.neighbors(a) & search.allowed;
            if (!search.anchor_nbrs) continue;
            search.run(a, 0, bit(a));
        }
    }
    return CycleSpectrum(n, search.found);
}

CycleSpectrum spectrum(const Graph& g) {
    Budget budget;
    return spectrum(g, budget);
}

std::pair<int, int> extreme_cycles(const Graph& g, Budget& budget) {
    int ec = 0, oc = 0;
    for (int k = g.order(); k >= 3; --k) {
        if ((k & 1) == 0 && ec == 0 && has_cycle_of_length(g, k, budget)) ec = k;
        if ((k & 1) == 1 && oc == 0 && has_cycle_of_length(g, k, budget)) oc = k;
        if (ec && oc) break;
    }
    return {ec, oc};
}

std::pair<int, int> extreme_cycles(const Graph& g) {
    Budget budget;
    return extreme_cycles(g, budget);
}

int circumference(const Graph& g, Budget& budget) {
    for (int k = g.order(); k >= 3; --k)
        if (has_cycle_of_length(g, k, budget)) return k;
    return 0;
}

namespace {

struct PathSearch {
    const Graph& g;
    Budget& budget;
    int k;

    bool run(int v, int count, uint64_t visited) {
        budget.charge();
        if (count == k) return true;
        uint64_t avail = ~visited & g.vertex_mask();
        // Closure bound: the rest of the path lives in what v can reach.
        uint64_t seen = 0, frontier = g.neighbors(v) & avail;
        int needed = k - count;
        for (int s = 0; s < needed && frontier; ++s) {
            seen |= frontier;
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int w = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(w);
            }
            frontier = next & avail & ~seen;
        }
        if (std::popcount(seen) < needed) return false;
        uint64_t cands = g.neighbors(v) & avail;
        while (cands) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            if (run(w, count + 1, visited | bit(w))) return true;
        }
        return false;
    }
};

}  // namespace

bool has_path_of_order(const Graph& g, int k, Budget& budget) {
    if (k < 1 || k > g.order())
        throw Error("path order must be in [1, " + std::to_string(g.order()) + "], got " +
                    std::to_string(k));
    if (k == 1) return true;
    budget.context_length = k;
    PathSearch search{g, budget, k};
    for (int s = 0; s < g.order(); ++s)
        if (search.run(s, 1, bit(s))) return true;
    return false;
}

bool has_path_of_order(const Graph& g, int k) {
    Budget budget;
    return has_path_of_order(g, k, budget);
}

namespace {

bool validate_cycle_witness(const Graph& g, const std::vector<int>& cyc, int k) {
    if (static_cast<int>(cyc.size()) != k) return false;
    uint64_t seen = 0;
    for (int v : cyc) {
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    for (size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

}  // namespace

ColorCodingHit color_coding_find_cycle(const Graph& g, int k, int trials, uint64_t seed) {
    if (k < 3 || k > g.order()) throw Error("cycle length out of range");
    if (k > 16) throw Error("color coding is capped at k <= 16");
    if (trials < 1) throw Error("need at least one trial");

    const int n = g.order();
    const uint32_t full = (uint32_t{1} << k) - 1;
    std::vector<uint64_t> table(size_t{1} << k);
    std::vector<int> color(static_cast<size_t>(n));
    std::vector<uint64_t> class_mask(static_cast<size_t>(k));

    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, static_cast<uint64_t>(t));
        std::fill(class_mask.begin(), class_mask.end(), 0);
        for (int v = 0; v < n; ++v) {
            color[static_cast<size_t>(v)] = static_cast<int>(rng.below(static_cast<uint32_t>(k)));
            class_mask[static_cast<size_t>(color[static_cast<size_t>(v)])] |= bit(v);
        }
        uint64_t anchors = class_mask[0];
        while (anchors) {
            int s = std::countr_zero(anchors);
            anchors &= anchors - 1;
            std::fill(table.begin(), table.end(), 0);
            table[1] = bit(s);
            for (uint32_t set = 1; set <= full; ++set) {
                uint64_t pts = table[set];
                if (!pts) continue;
                uint64_t nbrs = 0;
                while (pts) {
                    int v = std::countr_zero(pts);
                    pts &= pts - 1;
                    nbrs |= g.neighbors(v);
                }
                for (int c = 1; c < k; ++c) {
                    if (set & (uint32_t{1} << c)) continue;
                    table[set | (uint32_t{1} << c)] |= nbrs & class_mask[static_cast<size_t>(c)];
                }
            }
            uint64_t ends = table[full] & g.neighbors(s);
            if (!ends) continue;
            // Walk the DP back from an endpoint to the anchor.
            std::vector<int> cyc;
            uint32_t set = full;
            int v = std::countr_zero(ends);
            cyc.push_back(v);
            while (set != 1) {
                uint32_t prev = set & ~(uint32_t{1} << color[static_cast<size_t>(v)]);
                uint64_t preds = table[prev] & g.neighbors(v);
                v = std::countr_zero(preds);
                set = prev;
                cyc.push_back(v);
            }
            if (!validate_cycle_witness(g, cyc, k))
                throw Error("internal: color-coding witness failed validation");
            return {true, cyc};
        }
    }
    return {};
}

bool color_coding_has_cycle(const Graph& g, int k, int trials, uint64_t seed) {
    return color_coding_find_cycle(g, k, trials, seed).found;
}

}  // namespace rtc
