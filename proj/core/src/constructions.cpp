#include "rtcycles/constructions.hpp"

#include "rtcycles/cycles.hpp"

namespace rtc {

bool validate_claims(const ColoredInstance& inst) {
    return failing_claims(inst).empty();
}

std::vector<std::string> failing_claims(const ColoredInstance& inst) {
    std::vector<std::string> failed;
    for (const Claim& claim : inst.claims)
        if (!claim.check(inst.coloring)) failed.push_back(claim.name);
    return failed;
}

namespace {

Claim regular_host(int d) {
    return {"host-regular-" + std::to_string(d), [d](const TwoColoring& c) {
                auto [lo, hi, m] = degree_stats(c.host);
                (void)m;
                return lo == d && hi == d;
            }};
}

Claim class_bipartite(EdgeColor color) {
    std::string name = color == EdgeColor::Red ? "red-bipartite" : "blue-bipartite";
    return {name, [color](const TwoColoring& c) { return is_bipartite(c.cls(color)).bipartite; }};
}

Claim class_triangle_free(EdgeColor color) {
    std::string name =
        color == EdgeColor::Red ? "red-triangle-free" : "blue-triangle-free";
    return {name, [color](const TwoColoring& c) {
                return !has_cycle_of_length(c.cls(color), 3);
            }};
}

Claim no_mono_odd_cycle() {
    return {"no-monochromatic-odd-cycle", [](const TwoColoring& c) {
                return is_bipartite(c.red).bipartite && is_bipartite(c.blue).bipartite;
            }};
}

}  // namespace

ColoredInstance tight_example(int p) {
    if (p < 1) throw Error("p must be >= 1");
    if (p > kMaxOrder / 4) throw Error("4p exceeds 64 vertices");
    const int n = 4 * p;
    Graph red(n), blue(n);
    // Blue K_{2p,2p} across the two sides.
    for (int u = 0; u < 2 * p; ++u)
        for (int v = 2 * p; v < n; ++v) blue.add_edge(u, v);
    // Red K_{p,p} inside each side: first p vertices against the last p.
    for (int side = 0; side < 2; ++side) {
        int base = side * 2 * p;
        for (int u = base; u < base + p; ++u)
            for (int v = base + p; v < base + 2 * p; ++v) red.add_edge(u, v);
    }
    Graph host(n);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (red.has_edge(v, w) || blue.has_edge(v, w)) host.add_edge(v, w);

    ColoredInstance inst{TwoColoring::from_parts(std::move(host), std::move(red), std::move(blue)),
                         "tight p=" + std::to_string(p),
                         {}};
    inst.claims = {
        regular_host(3 * p),
        class_bipartite(EdgeColor::Red),
        class_bipartite(EdgeColor::Blue),
        no_mono_odd_cycle(),
        {"blue-connected", [](const TwoColoring& c) { return is_connected(c.blue); }},
        {"red-two-components", [](const TwoColoring& c) { return component_count(c.red) == 2; }},
    };
    return inst;
}

ColoredInstance pentagon_blowup(int t) {
    if (t < 1) throw Error("t must be >= 1");
    if (t > kMaxOrder / 5) throw Error("5t exceeds 64 vertices");
    Graph red_pattern(5), blue_pattern(5);
    for (int i = 0; i < 5; ++i) {
        red_pattern.add_edge(i, (i + 1) % 5);
        blue_pattern.add_edge(i, (i + 2) % 5);
    }
    Graph red = blow_up(red_pattern, t);
    Graph blue = blow_up(blue_pattern, t);
    Graph host = blow_up(complete_graph(5), t);

    ColoredInstance inst{TwoColoring::from_parts(std::move(host), std::move(red), std::move(blue)),
                         "pentagon t=" + std::to_string(t),
                         {}};
    inst.claims = {
        regular_host(4 * t),
        class_triangle_free(EdgeColor::Red),
        class_triangle_free(EdgeColor::Blue),
        {"red-blue-isomorphic-by-doubling", [t](const TwoColoring& c) {
             // The pattern map i -> 2i (mod 5), lifted block-wise, carries the
             // red class onto the blue class.
             Graph relabeled(c.red.order());
             for (auto [u, v] : edge_list(c.red)) {
                 auto lift = [t](int x) { return (2 * (x / t) % 5) * t + x % t; };
                 relabeled.add_edge(lift(u), lift(v));
             }
             return relabeled == c.blue;
         }},
    };
    return inst;
}

ColoredInstance four_class_family(int p, const std::vector<bool>& free_mask) {
    if (p < 1) throw Error("p must be >= 1");
    if (p > kMaxOrder / 4) throw Error("4p exceeds 64 vertices");
    const size_t free_edges = 2 * static_cast<size_t>(p) * static_cast<size_t>(p);
    if (free_mask.size() != free_edges)
        throw Error("free mask must have length 2p^2 = " + std::to_string(free_edges) + ", got " +
                    std::to_string(free_mask.size()));

    const int n = 4 * p;
    auto cls = [p](int i) { return (i - 1) * p; };  // start of U_i
    Graph red(n), blue(n);
    for (int u = 0; u < p; ++u) {
        for (int v = 0; v < p; ++v) {
            blue.add_edge(cls(1) + u, cls(2) + v);
            blue.add_edge(cls(3) + u, cls(4) + v);
            red.add_edge(cls(1) + u, cls(3) + v);
            red.add_edge(cls(2) + u, cls(4) + v);
        }
    }
    size_t idx = 0;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v)
            (free_mask[idx++] ? red : blue).add_edge(cls(1) + u, cls(4) + v);
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v)
            (free_mask[idx++] ? red : blue).add_edge(cls(2) + u, cls(3) + v);

    Graph host = complete_multipartite({{p, p, p, p}});
    ColoredInstance inst{TwoColoring::from_parts(std::move(host), std::move(red), std::move(blue)),
                         "four-class p=" + std::to_string(p),
                         {}};
    inst.claims = {
        class_bipartite(EdgeColor::Red),
        class_bipartite(EdgeColor::Blue),
        no_mono_odd_cycle(),
        {"host-complete-4-partite", [p](const TwoColoring& c) {
             return c.host == complete_multipartite({{p, p, p, p}});
         }},
    };
    return inst;
}

}  // namespace rtc
