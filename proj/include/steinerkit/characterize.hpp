#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steinerkit/connectivity.hpp"
#include "steinerkit/graph.hpp"

namespace steinerkit {

/// How the k = n-3 decision rules read their source conditions.
/// LITERAL evaluates them exactly as printed; AMENDED applies the documented
/// repairs (see Amendments).
enum class Interpretation { Literal, Amended };

std::string interpretation_name(Interpretation i);
Interpretation interpretation_from_name(const std::string& name);

/// The individually toggleable repairs that make up AMENDED:
///   a) vacuous-candidate rule: a candidate cut with no component of order
///      >= 3 is accepted only if the exact blocking-triple condition holds,
///      never vacuously;
///   b) symbol repair in the common-2-cut bullet (documented no-op: both
///      printed symbol sets quantify over the same pairs);
///   c) edge-condition symmetry: the second degenerate bullet counts edges
///      to y instead of the printed x.
struct Amendments {
    bool vacuous_exact = false;  // (a)
    bool symbol_zz = false;      // (b)
    bool edge_target_y = false;  // (c)
};

Amendments amendments_for(Interpretation i);

/// Stable rule vocabulary; the last rule of a chain fixes the prediction.
enum class RuleId {
    Cor1Connected,
    Cor2TwoConnected,
    Cor2CutVertex,
    Thm2KappaGe3,
    Thm2TwoCutVertices,
    Thm2Kappa2OrOneCut,
    Prop2KappaGe4,
    Thm3ThreeCutVertices,
    Prop3Kappa3,
    Prop3K2Lemma4,
    Prop3K1Lemma3,
    EliminationDefault,
};

std::string rule_name(RuleId id);

/// Role-tagged vertices, referenced components, and the closed-vocabulary
/// condition tags (":ok" / ":fail" suffixed) recorded while a predicate ran.
struct StructuralWitness {
    std::vector<std::pair<std::string, int>> roles;
    std::vector<std::vector<int>> components;
    std::vector<std::string> conditions;
};

struct PredicateResult {
    bool holds = false;
    StructuralWitness witness;
};

/// Tree predicate: true iff the tree's Steiner k-diameter is n-1,
/// decided by leaf count <= k. Input must be a tree.
bool lemma1_tree(const Graph& g, int k);

/// True iff g has at least k cut vertices; contract: equivalent to
/// sdiam_{n-k}(g) = n-1. Requires 1 <= k <= n-2 and g connected.
bool lemma2_cut_count(const Graph& g, int k);

/// True iff kappa(g) >= k; contract: equivalent to sdiam_{n-k+1}(g) = n-k.
/// Requires 1 <= k <= n-2 and g connected.
bool prop1_connectivity(const Graph& g, int k);

/// Exact structural equivalent of sdiam_{n-3}(g) <= n-3: some triple
/// {x,y,z} with all three pair-removals and the triple-removal
/// disconnecting would force a spanning set of order > n-2.
bool blocking_triple_exists(const Graph& g);

/// Decision rules for the n-3 = k case at kappa = 1 (resp. kappa = 2).
PredicateResult lemma3_predicate(const Graph& g, Interpretation interp);
PredicateResult lemma3_predicate(const Graph& g, const Amendments& amend);
PredicateResult lemma4_predicate(const Graph& g, Interpretation interp);
PredicateResult lemma4_predicate(const Graph& g, const Amendments& amend);

/// Cross-check predicate for sdiam_{n-3} = n-2: negation of the n-3 rules
/// inside the elimination frame (two cut vertices, or a failed n-3 rule at
/// kappa in {1,2}).
bool corollary3_predicate(const Graph& g, Interpretation interp);

struct ClassificationOutcome {
    int k = 0;
    int predicted = 0;
    std::vector<RuleId> rule_chain;
    Interpretation interpretation = Interpretation::Literal;
    std::optional<StructuralWitness> witness;
};

ClassificationOutcome classify_n(const Graph& g);
ClassificationOutcome classify_n_minus_1(const Graph& g);
ClassificationOutcome classify_n_minus_2(const Graph& g);
ClassificationOutcome classify_n_minus_3(const Graph& g, Interpretation interp);

}  // namespace steinerkit
