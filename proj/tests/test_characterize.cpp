#include <doctest.h>

#include "steinerkit/characterize.hpp"
#include "steinerkit/steiner.hpp"
#include "support/brute.hpp"

using namespace steinerkit;

TEST_CASE("lemma1 tree predicate") {
    CHECK(lemma1_tree(brute::path(6), 2));           // two leaves
    CHECK_FALSE(lemma1_tree(brute::star(5), 4));     // five leaves
    Graph sp = brute::spider(3, 2);
    CHECK(brute::sdiam(sp, 3) == sp.order() - 1);    // oracle first
    CHECK(lemma1_tree(sp, 3));
    CHECK_THROWS_AS(lemma1_tree(brute::cycle(4), 2), GraphError);  // not a tree
}

TEST_CASE("lemma1 iff oracle over all trees n<=8, all k") {
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& t : brute::load_g6(brute::fixture("trees" + std::to_string(n) + ".g6")))
            for (int k = 2; k <= n; ++k)
                CHECK(lemma1_tree(t, k) == (brute::sdiam(t, k) == n - 1));
    }
}

TEST_CASE("lemma2 cut-count predicate") {
    CHECK(lemma2_cut_count(brute::path(7), 3));  // five cut vertices
    CHECK_FALSE(lemma2_cut_count(brute::cycle(6), 1));
    Graph bowtie = brute::two_cliques_sharing_vertex(3);
    CHECK(lemma2_cut_count(bowtie, 1));
    CHECK_THROWS_AS(lemma2_cut_count(brute::path(4), 0), GraphError);
    CHECK_THROWS_AS(lemma2_cut_count(brute::path(4), 3), GraphError);
}

TEST_CASE("prop1 connectivity predicate") {
    CHECK(prop1_connectivity(brute::complete(5), 3));
    CHECK(steiner_diameter(brute::complete(5), 3) == 2);
    CHECK(prop1_connectivity(brute::cycle(6), 2));
    CHECK(steiner_diameter(brute::cycle(6), 5) == 4);
    CHECK_FALSE(prop1_connectivity(brute::path(4), 2));
}

TEST_CASE("lemma2 and prop1 contracts, exhaustive n<=6") {
    for (int n = 4; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            for (int k = 1; k <= 3 && k <= n - 2; ++k) {
                CHECK(lemma2_cut_count(g, k) == (brute::sdiam(g, n - k) == n - 1));
                CHECK(prop1_connectivity(g, k) == (brute::sdiam(g, n - k + 1) == n - k));
            }
        }
    }
}

TEST_CASE("classifiers for k = n, n-1, n-2") {
    CHECK(classify_n(brute::cycle(5)).predicted == 4);
    CHECK(classify_n(brute::cycle(5)).rule_chain ==
          std::vector<RuleId>{RuleId::Cor1Connected});

    ClassificationOutcome c5 = classify_n_minus_1(brute::cycle(5));
    CHECK(c5.predicted == 3);
    CHECK(c5.rule_chain == std::vector<RuleId>{RuleId::Cor2TwoConnected});

    ClassificationOutcome k4 = classify_n_minus_2(brute::complete(4));
    CHECK(k4.predicted == 1);
    CHECK(k4.rule_chain == std::vector<RuleId>{RuleId::Thm2KappaGe3});

    ClassificationOutcome p6 = classify_n_minus_2(brute::path(6));
    CHECK(p6.predicted == 5);
    CHECK(p6.rule_chain == std::vector<RuleId>{RuleId::Thm2TwoCutVertices});

    Graph bowtie = brute::two_cliques_sharing_vertex(3);
    ClassificationOutcome bt = classify_n_minus_2(bowtie);
    CHECK(bt.predicted == 3);
    CHECK(bt.rule_chain == std::vector<RuleId>{RuleId::Thm2Kappa2OrOneCut});
    CHECK(brute::sdiam(bowtie, 3) == 3);

    CHECK_THROWS_AS(classify_n_minus_2(brute::path(3)), GraphError);
    CHECK_THROWS_AS(classify_n(Graph::from_edge_list(3, {{0, 1}})), GraphError);
}

TEST_CASE("clean classifiers equal the oracle, exhaustive n<=6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            CHECK(classify_n(g).predicted == brute::sdiam(g, n));
            if (n >= 3) CHECK(classify_n_minus_1(g).predicted == brute::sdiam(g, n - 1));
            if (n >= 4) CHECK(classify_n_minus_2(g).predicted == brute::sdiam(g, n - 2));
        }
    }
}

TEST_CASE("lemma3 on named graphs") {
    Graph twin4 = brute::two_cliques_sharing_vertex(4);  // two K_4 at a vertex
    PredicateResult pr = lemma3_predicate(twin4, Interpretation::Literal);
    CHECK(pr.holds);
    CHECK(brute::sdiam(twin4, twin4.order() - 3) == twin4.order() - 3);

    // vacuous probe: bowtie components have order 2 only
    Graph bowtie = brute::two_cliques_sharing_vertex(3);
    CHECK(lemma3_predicate(bowtie, Interpretation::Literal).holds);
    CHECK(lemma3_predicate(bowtie, Interpretation::Amended).holds);  // exact test agrees
    CHECK(brute::sdiam(bowtie, 2) == 2);                             // = n-3

    CHECK_FALSE(lemma3_predicate(brute::path(5), Interpretation::Literal).holds);
    CHECK_THROWS_AS(lemma3_predicate(brute::cycle(5), Interpretation::Literal), GraphError);
}

TEST_CASE("lemma4 on named graphs") {
    CHECK_THROWS_AS(lemma4_predicate(brute::complete(5), Interpretation::Literal), GraphError);

    Graph c6 = brute::cycle(6);
    CHECK(lemma4_predicate(c6, Interpretation::Literal).holds);           // vacuous pass
    CHECK_FALSE(lemma4_predicate(c6, Interpretation::Amended).holds);     // exact test vetoes
    CHECK(brute::sdiam(c6, 3) == 4);                                      // = n-2, not n-3

    Graph glued = brute::two_cliques_sharing_edge(4);  // two K_4 along an edge
    CHECK(brute::sdiam(glued, glued.order() - 3) == glued.order() - 3);
    CHECK(lemma4_predicate(glued, Interpretation::Literal).holds);
    CHECK(lemma4_predicate(glued, Interpretation::Amended).holds);
}

TEST_CASE("classify k = n-3 on named graphs") {
    ClassificationOutcome k7 = classify_n_minus_3(brute::complete(7), Interpretation::Amended);
    CHECK(k7.predicted == 3);
    CHECK(k7.rule_chain == std::vector<RuleId>{RuleId::Prop2KappaGe4});

    ClassificationOutcome p7 = classify_n_minus_3(brute::path(7), Interpretation::Amended);
    CHECK(p7.predicted == 6);
    CHECK(p7.rule_chain == std::vector<RuleId>{RuleId::Thm3ThreeCutVertices});

    Graph c6 = brute::cycle(6);
    CHECK(classify_n_minus_3(c6, Interpretation::Literal).predicted == 3);
    CHECK(classify_n_minus_3(c6, Interpretation::Amended).predicted == 4);
    CHECK(brute::sdiam(c6, 3) == 4);

    ClassificationOutcome k33 =
        classify_n_minus_3(brute::complete_bipartite(3, 3), Interpretation::Amended);
    CHECK(k33.predicted == 3);
    CHECK(k33.rule_chain == std::vector<RuleId>{RuleId::Prop3Kappa3});
    CHECK(brute::sdiam(brute::complete_bipartite(3, 3), 3) == 3);

    CHECK_THROWS_AS(classify_n_minus_3(brute::complete(4), Interpretation::Literal), GraphError);
}

TEST_CASE("documented finding: printed conditions miss an n-3 graph") {
    // edges {01,12,13,14,23,24}: unique cut vertex 1, diameter 2 = n-3, yet
    // the singleton sub-components fail every printed connectivity bullet
    Graph g = parse_graph6("DjW");
    CHECK(brute::sdiam(g, 2) == 2);
    CHECK(classify_n_minus_3(g, Interpretation::Literal).predicted == 3);
    CHECK(classify_n_minus_3(g, Interpretation::Amended).predicted == 3);
}

TEST_CASE("blocking triple test is exact for the n-3 vs n-2 split, n<=6") {
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            int kappa = vertex_connectivity(g);
            if (kappa >= 4) continue;
            int oracle = brute::sdiam(g, n - 3);
            if (static_cast<int>(cut_vertices(g).size()) >= 3) continue;
            CHECK((oracle == n - 3) == !blocking_triple_exists(g));
        }
    }
}

TEST_CASE("corollary3 cross-check matches the elimination branch, n<=6") {
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            for (Interpretation interp : {Interpretation::Literal, Interpretation::Amended}) {
                ClassificationOutcome out = classify_n_minus_3(g, interp);
                CHECK(corollary3_predicate(g, interp) == (out.predicted == n - 2));
            }
        }
    }
}

TEST_CASE("classification is deterministic") {
    Graph g = parse_graph6("EhEG");  // the hexagon under its fixture labeling
    for (Interpretation interp : {Interpretation::Literal, Interpretation::Amended}) {
        ClassificationOutcome a = classify_n_minus_3(g, interp);
        ClassificationOutcome b = classify_n_minus_3(g, interp);
        CHECK(a.predicted == b.predicted);
        CHECK(a.rule_chain == b.rule_chain);
        REQUIRE(a.witness.has_value() == b.witness.has_value());
        if (a.witness.has_value()) {
            CHECK(a.witness->roles == b.witness->roles);
            CHECK(a.witness->conditions == b.witness->conditions);
        }
    }
}

TEST_CASE("predictions stay inside the k-1 .. n-1 window, n<=6") {
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : brute::load_g6(brute::fixture("conn" + std::to_string(n) + ".g6"))) {
            for (Interpretation interp : {Interpretation::Literal, Interpretation::Amended}) {
                int p = classify_n_minus_3(g, interp).predicted;
                CHECK(p >= n - 4);
                CHECK(p <= n - 1);
            }
        }
    }
}
