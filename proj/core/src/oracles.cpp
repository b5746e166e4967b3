#include "rtcycles/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "rtcycles/cycles.hpp"
#include "rtcycles/graph_io.hpp"
#include "rtcycles/rng.hpp"
#include "rtcycles/search.hpp"

namespace rtc {

namespace {

// Every labeled graph on n vertices, reusing one Graph; sink returns false to
// stop. Edge bit order matches edge_list.
void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& sink) {
    const auto edges = edge_list(complete_graph(n));
    const uint64_t total = uint64_t{1} << edges.size();
    Graph g(n);
    uint64_t prev = 0;
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t flip = code ^ prev;
        while (flip) {
            int idx = std::countr_zero(flip);
            flip &= flip - 1;
            auto [u, v] = edges[static_cast<size_t>(idx)];
            if ((code >> idx) & 1)
                g.add_edge(u, v);
            else
                g.remove_edge(u, v);
        }
        prev = code;
        if (!sink(g)) return;
    }
}

}  // namespace

OracleReport check_bondy(int n_max) {
    if (n_max < 3 || n_max > 7) throw Error("exhaustive sweep is capped at 3 <= n_max <= 7");
    OracleReport rep;
    rep.theorem = "bondy";
    rep.exhaustive = true;
    uint64_t hypothesis_hits = 0;
    for (int n = 3; n <= n_max; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            ++rep.instances_checked;
            if (2 * degree_stats(g).min_degree <= n) return true;
            ++hypothesis_hits;
            CycleSpectrum sp = spectrum(g);
            for (int k = 3; k <= n; ++k)
                if (!sp.has(k)) {
                    rep.violations.push_back(
                        {encode_graph6(g), "missing C_" + std::to_string(k)});
                    return true;
                }
            return true;
        });
    }
    rep.stats.emplace_back("hypothesis_hits", static_cast<double>(hypothesis_hits));
    return rep;
}

OracleReport check_bollobas(int n_max) {
    if (n_max < 3 || n_max > 7) throw Error("exhaustive sweep is capped at 3 <= n_max <= 7");
    OracleReport rep;
    rep.theorem = "bollobas";
    rep.exhaustive = true;
    uint64_t hypothesis_hits = 0, vacuous = 0;
    for (int n = 3; n <= n_max; ++n) {
        const int hi = (n + 1) / 2;
        for_each_labeled_graph(n, [&](const Graph& g) {
            ++rep.instances_checked;
            if (4 * g.edge_count() <= n * n) return true;
            ++hypothesis_hits;
            if (hi < 3) {
                ++vacuous;
                return true;
            }
            for (int k = 3; k <= hi; ++k)
                if (!has_cycle_of_length(g, k)) {
                    rep.violations.push_back(
                        {encode_graph6(g), "missing C_" + std::to_string(k)});
                    return true;
                }
            return true;
        });
    }
    rep.stats.emplace_back("hypothesis_hits", static_cast<double>(hypothesis_hits));
    rep.stats.emplace_back("vacuous_range_instances", static_cast<double>(vacuous));
    return rep;
}

OracleReport check_erdos_gallai(int n_max, int k_max) {
    if (n_max < 3 || n_max > 7) throw Error("exhaustive sweep is capped at 3 <= n_max <= 7");
    if (k_max < 2) throw Error("k starts at 2 (length >= 2 has no simple-graph meaning at k = 1)");
    OracleReport rep;
    rep.theorem = "erdos-gallai";
    rep.exhaustive = true;
    uint64_t hypothesis_hits = 0;
    for (int n = 3; n <= n_max; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            ++rep.instances_checked;
            const int m = g.edge_count();
            for (int k = 2; k <= k_max; ++k) {
                if (2 * m <= k * n) continue;
                ++hypothesis_hits;
                // Path of length >= k+1 edges is a path on >= k+2 vertices.
                if (k + 2 > n || !has_path_of_order(g, k + 2)) {
                    rep.violations.push_back(
                        {encode_graph6(g), "k=" + std::to_string(k) + ": no path on " +
                                               std::to_string(k + 2) + " vertices"});
                    continue;
                }
                auto [ec, oc] = extreme_cycles(g);
                if (std::max(ec, oc) < k + 1)
                    rep.violations.push_back(
                        {encode_graph6(g), "k=" + std::to_string(k) + ": circumference < " +
                                               std::to_string(k + 1)});
            }
            return true;
        });
    }
    rep.stats.emplace_back("hypothesis_hits", static_cast<double>(hypothesis_hits));
    return rep;
}

OracleReport sample_haggkvist(int k, int n, int samples, uint64_t seed) {
    if (k < 2) throw Error("k must be >= 2");
    if (n < 3 || n > 24) throw Error("sampling is capped at 3 <= n <= 24");
    if (samples < 1) throw Error("need at least one sample");

    OracleReport rep;
    rep.theorem = "haggkvist";
    rep.exhaustive = false;

    // delta(G) > 2n/(2k+1), exactly.
    int min_deg = 0;
    while (static_cast<long long>(min_deg) * (2 * k + 1) <= 2LL * n) ++min_deg;

    uint64_t present = 0, rejected = 0, admitted = 0;
    uint64_t attempt = 0;
    const uint64_t attempt_cap = static_cast<uint64_t>(samples) * 1000 + 1000;
    while (admitted < static_cast<uint64_t>(samples) && attempt < attempt_cap) {
        Rng rng = Rng::stream(seed, attempt++);
        Graph g(n);
        // Sparse seed graph, then degree repair up to the threshold.
        for (auto [u, v] : edge_list(complete_graph(n)))
            if (rng.below(static_cast<uint32_t>(n)) < static_cast<uint32_t>(min_deg)) g.add_edge(u, v);
        for (;;) {
            int worst = -1;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) < min_deg && (worst == -1 || g.degree(v) < g.degree(worst)))
                    worst = v;
            if (worst == -1) break;
            uint64_t non = ~g.neighbors(worst) & g.vertex_mask() & ~(uint64_t{1} << worst);
            int pick = static_cast<int>(rng.below(static_cast<uint32_t>(std::popcount(non))));
            int w = -1;
            while (pick >= 0) {
                w = std::countr_zero(non);
                non &= non - 1;
                --pick;
            }
            g.add_edge(worst, w);
        }
        // Hypothesis gates: min degree by repair; bipartite or separable
        // samples are rejected outright.
        if (is_bipartite(g).bipartite || !is_two_connected(g) ||
            degree_stats(g).min_degree < min_deg) {
            ++rejected;
            continue;
        }
        ++admitted;
        ++rep.instances_checked;
        if (2 * k - 1 <= n && has_cycle_of_length(g, 2 * k - 1)) ++present;
    }
    if (admitted < static_cast<uint64_t>(samples))
        throw Error("sampler could not reach the requested sample count");
    rep.stats.emplace_back("target_cycle_length", static_cast<double>(2 * k - 1));
    rep.stats.emplace_back("min_degree_required", static_cast<double>(min_deg));
    rep.stats.emplace_back("present", static_cast<double>(present));
    rep.stats.emplace_back("missing", static_cast<double>(admitted - present));
    rep.stats.emplace_back("presence_rate",
                           static_cast<double>(present) / static_cast<double>(admitted));
    rep.stats.emplace_back("rejected_samples", static_cast<double>(rejected));
    return rep;
}

}  // namespace rtc
