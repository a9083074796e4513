#include <doctest.h>

#include <random>

#include "steinerkit/graph.hpp"
#include "support/brute.hpp"

using namespace steinerkit;

TEST_CASE("from_edge_list basics") {
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(2, 1));
    CHECK_FALSE(p3.has_edge(0, 2));

    Graph k1 = Graph::from_edge_list(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    Graph dedup = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}, {2, 3}});
    CHECK(dedup.size() == 2);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(-1, {}), GraphError);
}

TEST_CASE("graph6 parse against frozen reference encodings") {
    Graph k3 = parse_graph6("Bw");
    CHECK(k3 == brute::complete(3));
    Graph p3 = parse_graph6("Bg");
    CHECK(p3 == Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
    Graph k4 = parse_graph6("C~");
    CHECK(k4 == brute::complete(4));
    CHECK(to_graph6(brute::complete(3)) == "Bw");
    CHECK(to_graph6(Graph::from_edge_list(2, {})) == "A?");
    CHECK(parse_graph6(">>graph6<<Bw") == brute::complete(3));
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), GraphError);
    CHECK_THROWS_AS(parse_graph6("B"), GraphError);         // missing body
    CHECK_THROWS_AS(parse_graph6("Bww"), GraphError);       // body too long
    CHECK_THROWS_AS(parse_graph6("B\x1f"), GraphError);     // byte below 63
    CHECK_THROWS_AS(parse_graph6("~??~"), GraphError);      // multi-byte order field
    CHECK_THROWS_AS(parse_graph6(":Bw"), GraphError);       // sparse6 prefix
    // n=2 has one data bit; the remaining five must be zero padding
    CHECK_THROWS_AS(parse_graph6("A~"), GraphError);
    CHECK(parse_graph6("A_").size() == 1);  // 100000 -> the single edge, zero padding
}

TEST_CASE("graph6 round-trip: exhaustive small orders plus random") {
    for (int n = 2; n <= 6; ++n) {
        for (const std::string& line :
             brute::read_lines(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            Graph g = parse_graph6(line);
            std::string enc = to_graph6(g);
            CHECK(enc == line);  // fixture lines are canonical encodings
            CHECK(parse_graph6(enc) == g);
            CHECK(enc == brute::encode_graph6(g));
        }
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 39);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        CHECK(to_graph6(g) == brute::encode_graph6(g));
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    Graph c4 = brute::cycle(4);
    auto sub = induced_subgraph(c4, VertexSet(c4, {0, 1, 2}));
    CHECK(sub.graph == Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
    CHECK(sub.labels == std::vector<int>{0, 1, 2});

    Graph k4 = brute::complete(4);
    CHECK(induced_subgraph(k4, VertexSet(k4, {1, 2, 3})).graph == brute::complete(3));

    Graph p4 = brute::path(4);
    auto ends = induced_subgraph(p4, VertexSet(p4, {0, 3}));
    CHECK(ends.graph.size() == 0);
    CHECK(ends.graph.order() == 2);

    CHECK_THROWS_AS(VertexSet(p4, {0, 4}), GraphError);
    CHECK_THROWS_AS(VertexSet(p4, {0, 0}), GraphError);
}

TEST_CASE("induced subgraph preserves adjacency on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + static_cast<int>(rng() % 10);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) members.push_back(v);
        if (members.size() < 2) continue;
        auto sub = induced_subgraph(g, VertexSet(g, members));
        for (int a = 0; a < sub.graph.order(); ++a)
            for (int b = 0; b < sub.graph.order(); ++b)
                if (a != b)
                    CHECK(sub.graph.has_edge(a, b) ==
                          g.has_edge(sub.labels[static_cast<std::size_t>(a)],
                                     sub.labels[static_cast<std::size_t>(b)]));
    }
}

TEST_CASE("components") {
    Graph p5 = brute::path(5);
    auto view = components(p5, VertexSet(p5, {0, 1, 3, 4}));
    REQUIRE(view.count() == 2);
    CHECK(view.pieces[0] == std::vector<int>{0, 1});
    CHECK(view.pieces[1] == std::vector<int>{3, 4});

    CHECK(components(brute::complete(5)).count() == 1);
    CHECK(components(brute::complete(5)).pieces[0].size() == 5);

    Graph c6 = brute::cycle(6);
    auto v2 = components(c6, VertexSet(c6, {1, 2, 4, 5}));
    REQUIRE(v2.count() == 2);
    CHECK(v2.orders() == std::vector<int>{2, 2});
}

TEST_CASE("edges_between") {
    CHECK(edges_between(brute::complete(4), 0, {1, 2, 3}) == 3);
    CHECK(edges_between(brute::cycle(6), 0, {2, 3, 4}) == 0);
    CHECK(edges_between(brute::star(4), 0, {1, 2}) == 2);
    CHECK_THROWS_AS(edges_between(brute::complete(4), 0, {0, 1}), GraphError);
}

TEST_CASE("edges_between equals degree in the induced augmentation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 8);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        int v = static_cast<int>(rng() % n);
        std::vector<int> c;
        for (int w = 0; w < n; ++w)
            if (w != v && rng() % 2) c.push_back(w);
        std::vector<int> aug = c;
        aug.push_back(v);
        auto sub = induced_subgraph(g, VertexSet(g, aug));
        int pos = -1;
        for (std::size_t i = 0; i < sub.labels.size(); ++i)
            if (sub.labels[i] == v) pos = static_cast<int>(i);
        CHECK(edges_between(g, v, c) == sub.graph.degree(pos));
    }
}

TEST_CASE("edge-list text format") {
    Graph g = parse_edge_list_text("# a path\n5 4\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(g == brute::path(5));
    CHECK_THROWS_AS(parse_edge_list_text("3 2\n0 1\n"), GraphError);       // missing edge
    CHECK_THROWS_AS(parse_edge_list_text("3 1\n0 1\n1 2\n"), GraphError);  // extra edge
    CHECK_THROWS_AS(parse_edge_list_text("3 1\n0 5\n"), GraphError);       // out of range
    CHECK_THROWS_AS(parse_edge_list_text(""), GraphError);                 // no header
}

TEST_CASE("single piece iff connected") {
    for (const Graph& g : brute::load_g6(brute::fixture("conn5.g6")))
        CHECK(components(g).count() == 1);
    Graph two = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(components(two).count() == 2);
}
