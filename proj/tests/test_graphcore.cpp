#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "rtcycles/graph.hpp"
#include "rtcycles/graph_io.hpp"

using namespace rtc;

namespace {

void check_structural_invariants(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.has_edge(u, u));
        CHECK((g.neighbors(u) & ~g.vertex_mask()) == 0);
        for (int v = 0; v < g.order(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
}

}  // namespace

TEST_CASE("graph basics and invariants") {
    CHECK_THROWS_AS(Graph(0), Error);
    CHECK_THROWS_AS(Graph(65), Error);
    Graph g(5);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 5), Error);
    g.add_edge(0, 4);
    CHECK(g.has_edge(4, 0));
    g.remove_edge(4, 0);
    CHECK(g.edge_count() == 0);
    check_structural_invariants(complete_graph(8));
    check_structural_invariants(blow_up(cycle_graph(5), 3));
    Graph g64(64);
    g64.add_edge(0, 63);
    check_structural_invariants(g64);
    CHECK(edge_list(g64) == std::vector<std::pair<int, int>>{{0, 63}});
}

TEST_CASE("complete_multipartite") {
    Graph k3 = complete_multipartite({{1, 1, 1}});
    CHECK(k3 == complete_graph(3));
    CHECK(k3.edge_count() == 3);

    Graph k23 = complete_multipartite({{2, 3}});
    auto [lo, hi, m] = degree_stats(k23);
    CHECK(m == 6);
    CHECK(lo == 2);
    CHECK(hi == 3);

    // Every vertex misses only its own class: degree n - p, edges C(4,2) p^2.
    Graph k4x2 = complete_multipartite({{2, 2, 2, 2}});
    auto s = degree_stats(k4x2);
    CHECK(k4x2.order() == 8);
    CHECK(s.min_degree == 6);
    CHECK(s.max_degree == 6);
    CHECK(s.edge_count == 24);

    CHECK_THROWS_AS(complete_multipartite({{}}), Error);
    CHECK_THROWS_AS(complete_multipartite({{0, 2}}), Error);
    CHECK_THROWS_AS(complete_multipartite({{40, 30}}), Error);
}

TEST_CASE("blow_up") {
    CHECK(blow_up(complete_graph(2), 3) == complete_multipartite({{3, 3}}));
    CHECK(blow_up(cycle_graph(5), 1) == cycle_graph(5));

    Graph c5x2 = blow_up(cycle_graph(5), 2);
    CHECK(c5x2.order() == 10);
    auto s = degree_stats(c5x2);
    CHECK(s.min_degree == 4);
    CHECK(s.max_degree == 4);
    // Blow-up of a triangle-free pattern stays triangle-free.
    CHECK(test::naive_spectrum(c5x2).count(3) == 0);

    CHECK_THROWS_AS(blow_up(complete_graph(2), 0), Error);
    CHECK_THROWS_AS(blow_up(complete_graph(5), 13), Error);

    // t^2 e(pattern) edges, t * delta(pattern) min degree.
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        Graph pattern = test::random_graph(3 + static_cast<int>(rng.below(5)), rng);
        int t = 1 + static_cast<int>(rng.below(3));
        if (pattern.order() * t > 64) continue;
        Graph big = blow_up(pattern, t);
        CHECK(big.edge_count() == t * t * pattern.edge_count());
        CHECK(degree_stats(big).min_degree == t * degree_stats(pattern).min_degree);
        check_structural_invariants(big);
    }
}

TEST_CASE("degree_stats") {
    auto k5 = degree_stats(complete_graph(5));
    CHECK(k5.min_degree == 4);
    CHECK(k5.max_degree == 4);
    CHECK(k5.edge_count == 10);

    auto k23 = degree_stats(complete_multipartite({{2, 3}}));
    CHECK(k23.min_degree == 2);
    CHECK(k23.max_degree == 3);
    CHECK(k23.edge_count == 6);

    // Degree sum is twice the edge count.
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Graph g = test::random_graph(2 + static_cast<int>(rng.below(12)), rng);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        auto st = degree_stats(g);
        CHECK(sum == 2 * st.edge_count);
        CHECK(st.min_degree <= st.max_degree);
    }
}

TEST_CASE("is_bipartite certificates") {
    auto even = is_bipartite(cycle_graph(6));
    CHECK(even.bipartite);
    CHECK((even.side[0] | even.side[1]) == cycle_graph(6).vertex_mask());
    CHECK((even.side[0] & even.side[1]) == 0);

    auto odd = is_bipartite(cycle_graph(5));
    CHECK_FALSE(odd.bipartite);
    CHECK(odd.odd_cycle.size() == 5);

    Rng rng(99);
    for (int i = 0; i < 400; ++i) {
        Graph g = test::random_graph_p(2 + static_cast<int>(rng.below(11)), 1,
                                       1 + rng.below(4), rng);
        auto cert = is_bipartite(g);
        CHECK(cert.bipartite == test::naive_two_colorable(g));
        if (cert.bipartite) {
            // No internal edges on either side.
            for (auto [u, v] : edge_list(g))
                CHECK(((cert.side[0] >> u) & 1) != ((cert.side[0] >> v) & 1));
            CHECK((cert.side[0] | cert.side[1]) == g.vertex_mask());
        } else {
            CHECK(cert.odd_cycle.size() % 2 == 1);
            CHECK(cert.odd_cycle.size() >= 3);
            for (size_t j = 0; j < cert.odd_cycle.size(); ++j)
                CHECK(g.has_edge(cert.odd_cycle[j],
                                 cert.odd_cycle[(j + 1) % cert.odd_cycle.size()]));
        }
    }
}

TEST_CASE("is_two_connected") {
    CHECK(is_two_connected(cycle_graph(4)));
    CHECK_FALSE(is_two_connected(path_graph(3)));  // middle vertex cuts
    CHECK_FALSE(is_two_connected(complete_graph(2)));

    // Two K_4 blocks sharing one vertex: the shared vertex is an articulation
    // point.
    Graph shared(7);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) shared.add_edge(u, v);
    int block2[4] = {3, 4, 5, 6};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) shared.add_edge(block2[i], block2[j]);
    CHECK_FALSE(is_two_connected(shared));
    CHECK(test::naive_two_connected(shared) == false);

    // Agreement with the vertex-deletion definition on random graphs, n <= 8.
    Rng rng(1234);
    for (int i = 0; i < 10000; ++i) {
        Graph g = test::random_graph_p(1 + static_cast<int>(rng.below(8)), 1 + rng.below(3), 4,
                                       rng);
        CHECK(is_two_connected(g) == test::naive_two_connected(g));
    }
}

TEST_CASE("connectivity helpers") {
    CHECK(is_connected(complete_graph(4)));
    CHECK(component_count(complete_graph(4)) == 1);
    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_FALSE(is_connected(two));
    CHECK(component_count(two) == 4);  // isolated vertices count
}

TEST_CASE("graph6 encode/decode") {
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    CHECK(decode_graph6("@") == Graph(1));
    CHECK(decode_graph6("Bw") == complete_graph(3));

    // Against an independently written encoder, and round-trip.
    Rng rng(5150);
    for (int i = 0; i < 1000; ++i) {
        Graph g = test::random_graph(1 + static_cast<int>(rng.below(20)), rng);
        std::string enc = encode_graph6(g);
        CHECK(enc == test::reference_graph6(g));
        CHECK(decode_graph6(enc) == g);
    }

    CHECK_THROWS_AS(decode_graph6(""), Error);
    CHECK_THROWS_AS(decode_graph6("B"), Error);          // truncated
    CHECK_THROWS_AS(decode_graph6("Bww"), Error);        // overlong
    CHECK_THROWS_AS(decode_graph6("B\x1f"), Error);      // byte below range
    CHECK_THROWS_AS(decode_graph6("~??"), Error);        // multibyte header
    CHECK_THROWS_AS(decode_graph6("?"), Error);          // order 0
    // K_2 plus a stray padding bit: 'w' has bits past the single edge slot.
    CHECK_THROWS_AS(decode_graph6("Aw"), Error);
    CHECK(decode_graph6("A_") == complete_graph(2));
    Graph g63(63);
    CHECK_THROWS_AS(encode_graph6(g63), Error);
}

TEST_CASE("coloring partition validation") {
    Graph host = complete_graph(3);
    Graph red(3), blue(3);
    red.add_edge(0, 1);
    blue.add_edge(0, 2);
    blue.add_edge(1, 2);
    TwoColoring c = TwoColoring::from_parts(host, red, blue);
    CHECK(c.red.edge_count() + c.blue.edge_count() == c.host.edge_count());

    Graph overlap = blue;
    overlap.add_edge(0, 1);
    CHECK_THROWS_AS(TwoColoring::from_parts(host, red, overlap), Error);
    Graph hole(3);
    CHECK_THROWS_AS(TwoColoring::from_parts(host, red, hole), Error);
    CHECK_THROWS_AS(TwoColoring::from_parts(host, Graph(4), blue), Error);

    TwoColoring c2 = TwoColoring::from_red_subgraph(host, red);
    CHECK(c2 == c);
}

TEST_CASE("coloring file emit/parse") {
    // Smallest instance, byte-exact.
    Graph k2 = complete_graph(2);
    Graph red = k2;
    TwoColoring c = TwoColoring::from_red_subgraph(k2, red);
    CHECK(emit_coloring(c) == "p rbcolor 2 1\ne 0 1 R\n");
    CHECK(parse_coloring("p rbcolor 2 1\ne 0 1 R\n") == c);
    CHECK(parse_coloring("c leading comment\np rbcolor 2 1\nc mid\ne 0 1 R\n") == c);

    // Round-trip on random colorings.
    Rng rng(77);
    for (int i = 0; i < 300; ++i) {
        Graph host = test::random_graph(1 + static_cast<int>(rng.below(16)), rng);
        Graph r(host.order());
        for (auto [u, v] : edge_list(host))
            if (rng.coin()) r.add_edge(u, v);
        TwoColoring original = TwoColoring::from_red_subgraph(host, r);
        CHECK(parse_coloring(emit_coloring(original)) == original);
    }
}

TEST_CASE("coloring file parse errors") {
    auto rejects = [](const std::string& text, const std::string& needle) {
        try {
            parse_coloring(text);
            FAIL(("expected rejection: " + text));
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    rejects("p rbcolor 2 1\ne 0 1 R\ne 0 1 B\n", "edge colored twice");
    rejects("p rbcolor 2 2\ne 0 1 R\ne 0 1 R\n", "duplicate edge");
    rejects("p rbcolor 2 1\ne 0 2 R\n", "index >= n");
    rejects("p rbcolor 2 1\ne 1 0 R\n", "u < v");
    rejects("p rbcolor 2 2\ne 0 1 R\n", "mismatch");
    rejects("p rbcolor 2 0\ne 0 1 R\n", "more edges");
    rejects("p rbcolor 2 1\ne 0 1 X\n", "color");
    rejects("p rbcolor 2 1\ne 0 1 R", "line feed");
    rejects("p rbcolor 02 1\ne 0 1 R\n", "header");
    rejects("e 0 1 R\n", "header");
    rejects("p rbcolor 65 1\ne 0 1 R\n", "out of range");
}
