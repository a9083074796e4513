#include <doctest.h>

#include "steinerkit/steiner.hpp"
#include "steinerkit/verify.hpp"
#include "support/brute.hpp"

using namespace steinerkit;

namespace {

SteinerResult run(const Graph& g, std::vector<int> terminals, Engine e = Engine::Auto) {
    return steiner_distance(g, VertexSet(g, std::move(terminals)), e);
}

}  // namespace

TEST_CASE("distance sentinel ordering and arithmetic guard") {
    CHECK(Distance::finite(3) < Distance::infinite());
    CHECK(Distance::finite(3) < Distance::finite(4));
    CHECK_FALSE(Distance::infinite() < Distance::infinite());
    CHECK(Distance::infinite() == Distance::infinite());
    CHECK(Distance::infinite().str() == "inf");
    CHECK_THROWS_AS(Distance::infinite().value(), GraphError);
    CHECK_THROWS_AS(Distance::finite(-1), GraphError);
}

TEST_CASE("steiner distance on pairs equals classical distance") {
    Graph c6 = brute::cycle(6);
    CHECK(run(c6, {0, 3}).distance == Distance::finite(3));
    CHECK(run(c6, {0, 1}).distance == Distance::finite(1));
    Graph p5 = brute::path(5);
    CHECK(run(p5, {0, 4}).distance == Distance::finite(4));
}

TEST_CASE("steiner distance on the full vertex set is n-1") {
    for (const Graph& g : brute::load_g6(brute::fixture("conn5.g6")))
        CHECK(run(g, brute::all_vertices(g)).distance == Distance::finite(g.order() - 1));
}

TEST_CASE("frozen example: alternate vertices of the hexagon") {
    Graph c6 = brute::cycle(6);
    CHECK(brute::steiner_distance(c6, {0, 2, 4}) == 4);  // oracle first
    SteinerResult r = run(c6, {0, 2, 4});
    CHECK(r.distance == Distance::finite(4));
    CHECK(check_witness(c6, VertexSet(c6, {0, 2, 4}), r));
}

TEST_CASE("disconnected terminals give the infinite sentinel") {
    Graph tri2 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    SteinerResult a = run(tri2, {0, 3}, Engine::Complement);
    SteinerResult b = run(tri2, {0, 3}, Engine::TerminalDp);
    CHECK(a.distance.is_infinite());
    CHECK(b.distance.is_infinite());
    CHECK(check_witness(tri2, VertexSet(tri2, {0, 3}), a));
}

TEST_CASE("engine guards") {
    Graph g = brute::path(5);
    EngineLimits tight;
    tight.complement_cap = 1;
    CHECK_THROWS_AS(steiner_distance(g, VertexSet(g, {0, 1}), Engine::Complement, tight),
                    GraphError);
    tight.dp_terminal_cap = 2;
    CHECK_THROWS_AS(steiner_distance(g, VertexSet(g, {0, 1, 2}), Engine::TerminalDp, tight),
                    GraphError);
    CHECK_THROWS_AS(run(g, {}), GraphError);
    CHECK(run(g, {2}).distance == Distance::finite(0));
}

TEST_CASE("engine agreement and witness validity, exhaustive n<=6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            for (int k = 1; k <= g.order(); ++k) {
                brute::for_each_combination(g.order(), k, [&](const std::vector<int>& idx) {
                    VertexSet s(g, idx);
                    SteinerResult a = steiner_distance(g, s, Engine::Complement);
                    SteinerResult b = steiner_distance(g, s, Engine::TerminalDp);
                    CHECK(a.distance == b.distance);
                    CHECK(a.distance == Distance::finite(brute::steiner_distance(g, idx)));
                    CHECK(check_witness(g, s, a));
                    CHECK(check_witness(g, s, b));
                    CHECK(a.distance.value() >= k - 1);  // never below |S| - 1
                    return true;
                });
            }
        }
    }
}

TEST_CASE("engine agreement on a deterministic 1-in-50 sample of the n=8 family") {
    auto graphs = brute::load_g6(brute::fixture("conn8.g6"));
    long disagreements = 0;
    for (std::size_t i = 0; i < graphs.size(); i += 50) {
        const Graph& g = graphs[i];
        for (int k = 1; k <= g.order(); ++k) {
            brute::for_each_combination(g.order(), k, [&](const std::vector<int>& idx) {
                VertexSet s(g, idx);
                if (!(steiner_distance(g, s, Engine::Complement).distance ==
                      steiner_distance(g, s, Engine::TerminalDp).distance))
                    ++disagreements;
                return true;
            });
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("engine agreement on seeded random graphs up to n = 14") {
    int idx = 0;
    for (int n : {9, 11, 14}) {
        for (const std::string& line : random_graphs(n, 1, 2, 6, 100 + idx++)) {
            Graph g = parse_graph6(line);
            for (int k : {2, 3, n - 3}) {
                VertexSet s(g, [&] {
                    std::vector<int> t;
                    for (int i = 0; i < k; ++i) t.push_back((i * 7) % n);
                    std::sort(t.begin(), t.end());
                    t.erase(std::unique(t.begin(), t.end()), t.end());
                    return t;
                }());
                SteinerResult a = steiner_distance(g, s, Engine::Complement);
                SteinerResult b = steiner_distance(g, s, Engine::TerminalDp);
                CHECK(a.distance == b.distance);
                CHECK(check_witness(g, s, a));
                CHECK(check_witness(g, s, b));
            }
        }
    }
}

TEST_CASE("deterministic witness: ascending-cardinality ties break lexicographically") {
    Graph c6 = brute::cycle(6);
    SteinerResult r = run(c6, {0, 2, 4}, Engine::Complement);
    // both {1,3} and {1,5} and {3,5} connect; lexicographically first is {1,3}
    CHECK(r.steiner_points == std::vector<int>{1, 3});
    CHECK(r.witness_edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("eccentricities on stars and paths") {
    Graph star4 = brute::star(4);
    CHECK(steiner_eccentricity(star4, 0, 2) == 1);
    CHECK(steiner_eccentricity(star4, 1, 2) == 2);
    CHECK(steiner_eccentricity(brute::path(5), 0, 3) == 4);
    CHECK(steiner_eccentricity(brute::path(5), 0, 3) == brute::eccentricity(brute::path(5), 0, 3));
    CHECK_THROWS_AS(steiner_eccentricity(brute::path(5), 0, 1), GraphError);
    CHECK_THROWS_AS(steiner_eccentricity(brute::path(5), 0, 6), GraphError);
    Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(steiner_eccentricity(split, 0, 2), GraphError);
}

TEST_CASE("eccentricity profiles") {
    EccentricityProfile k5 = eccentricity_profile(brute::complete(5), 3);
    CHECK(k5.radius == 2);
    CHECK(k5.diameter == 2);

    EccentricityProfile p5 = eccentricity_profile(brute::path(5), 2);
    CHECK(p5.radius == 2);
    CHECK(p5.diameter == 4);
    CHECK(p5.center == std::vector<int>{2});

    EccentricityProfile c6 = eccentricity_profile(brute::cycle(6), 3);
    CHECK(c6.diameter == 4);
    CHECK(c6.diameter_witness == std::vector<int>{0, 2, 4});
}

TEST_CASE("steiner centers") {
    CHECK(steiner_center(brute::star(4), 2) == std::vector<int>{0});
    CHECK(steiner_center(brute::cycle(6), 3) == std::vector<int>{0, 1, 2, 3, 4, 5});
    // brute force: every vertex of P_5 has e_3 = 4 (any triple extends to
    // contain both endpoints), so the k=3 center is the whole path
    for (int v = 0; v < 5; ++v) CHECK(brute::eccentricity(brute::path(5), v, 3) == 4);
    CHECK(steiner_center(brute::path(5), 3) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(steiner_center(brute::path(5), 2) == std::vector<int>{2});
}

TEST_CASE("steiner medians") {
    CHECK(steiner_median(brute::star(4), 2) == std::vector<int>{0});
    CHECK(steiner_median(brute::complete(4), 2) == std::vector<int>{0, 1, 2, 3});
    CHECK(steiner_median(brute::path(5), 2) == std::vector<int>{2});
}

TEST_CASE("average steiner distance is an exact rational") {
    CHECK(average_steiner_distance(brute::complete(3), 2) == Rational{1, 1});
    CHECK(average_steiner_distance(brute::path(3), 2) == Rational{4, 3});
    for (const Graph& g : brute::load_g6(brute::fixture("conn5.g6")))
        CHECK(average_steiner_distance(g, g.order()) == Rational{g.order() - 1, 1});
}

TEST_CASE("subset sweep equals the engines on every subset, n<=6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            std::vector<std::int32_t> d = all_set_distances(g);
            for (int k = 1; k <= g.order(); ++k) {
                brute::for_each_combination(g.order(), k, [&](const std::vector<int>& idx) {
                    std::uint32_t mask = 0;
                    for (int v : idx) mask |= std::uint32_t{1} << v;
                    CHECK(d[mask] == run(g, idx).distance.value());
                    return true;
                });
            }
        }
    }
}

TEST_CASE("theorem-style bounds and monotonicity on the n<=6 family") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            int prev = 0;
            for (int k = 2; k <= g.order(); ++k) {
                int sd = steiner_diameter(g, k);
                CHECK(sd >= k - 1);
                CHECK(sd <= g.order() - 1);
                CHECK(sd >= prev);  // monotone in k
                prev = sd;
            }
        }
    }
}
