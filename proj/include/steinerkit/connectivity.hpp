#pragma once

#include <utility>
#include <vector>

#include "steinerkit/graph.hpp"

namespace steinerkit {

/// Cut structure of a graph. kappa is n-1 for complete graphs, 0 for
/// disconnected graphs and for orders 0..1.
struct ConnectivityProfile {
    int kappa = 0;
    std::vector<int> cut_vertices;            // sorted
    std::vector<std::vector<int>> blocks;     // vertex lists, sorted by smallest member
    int leaf_count = 0;
    bool is_connected = false;
};

bool is_connected(const Graph& g);

/// Articulation points, sorted ascending.
std::vector<int> cut_vertices(const Graph& g);

/// Exact vertex connectivity via unit-capacity max-flow on the vertex-split
/// digraph, minimized over all non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// True iff g has more than k vertices and vertex connectivity >= k.
bool is_k_connected(const Graph& g, int k);

/// All unordered pairs whose deletion disconnects g, in lexicographic order.
/// Requires g connected.
std::vector<std::pair<int, int>> two_cuts(const Graph& g);

ConnectivityProfile profile(const Graph& g);

}  // namespace steinerkit
