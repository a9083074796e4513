#include "steinerkit/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace steinerkit {

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    return induced_connected(g, all);
}

namespace {

// Hopcroft-Tarjan lowpoint DFS; fills articulation points and blocks.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), -1),
          parent(static_cast<std::size_t>(graph.order()), -1),
          is_cut(static_cast<std::size_t>(graph.order()), 0) {}

    void pop_block(int u, int v) {
        std::vector<int> verts;
        std::pair<int, int> top;
        do {
            top = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(top.first);
            verts.push_back(top.second);
        } while (top != std::make_pair(u, v));
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    }

    void dfs(int u) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        int children = 0;
        g.for_each_neighbor(u, [&](int v) {
            if (disc[static_cast<std::size_t>(v)] == -1) {
                ++children;
                parent[static_cast<std::size_t>(v)] = u;
                edge_stack.emplace_back(u, v);
                dfs(v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    if (parent[static_cast<std::size_t>(u)] != -1 || children > 1)
                        is_cut[static_cast<std::size_t>(u)] = 1;
                    pop_block(u, v);
                }
            } else if (v != parent[static_cast<std::size_t>(u)] &&
                       disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                edge_stack.emplace_back(u, v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        });
    }

    void run() {
        for (int v = 0; v < g.order(); ++v) {
            if (disc[static_cast<std::size_t>(v)] == -1) {
                dfs(v);
                if (g.degree(v) == 0) blocks.push_back({v});  // isolated vertex
            }
        }
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front() ||
                      (a.front() == b.front() && a < b); });
    }
};

// Max-flow value from s_out to t_in in the vertex-split digraph, capped by
// `limit`. Internal vertices carry capacity 1; edge arcs are uncapacitated.
int local_connectivity(const Graph& g, int s, int t, int limit) {
    int n = g.order();
    int nodes = 2 * n;  // v_in = 2v, v_out = 2v+1
    const int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                      std::vector<int>(static_cast<std::size_t>(nodes), 0));
    for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = 1;
    cap[static_cast<std::size_t>(2 * s)][static_cast<std::size_t>(2 * s + 1)] = inf;
    cap[static_cast<std::size_t>(2 * t)][static_cast<std::size_t>(2 * t + 1)] = inf;
    for (int u = 0; u < n; ++u)
        g.for_each_neighbor(u, [&](int v) {
            cap[static_cast<std::size_t>(2 * u + 1)][static_cast<std::size_t>(2 * v)] = inf;
        });

    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    std::vector<int> pred(static_cast<std::size_t>(nodes));
    while (flow < limit) {
        std::fill(pred.begin(), pred.end(), -1);
        pred[static_cast<std::size_t>(source)] = source;
        std::vector<int> queue{source};
        for (std::size_t head = 0; head < queue.size() && pred[static_cast<std::size_t>(sink)] == -1; ++head) {
            int u = queue[head];
            for (int v = 0; v < nodes; ++v) {
                if (pred[static_cast<std::size_t>(v)] == -1 &&
                    cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
                    pred[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                }
            }
        }
        if (pred[static_cast<std::size_t>(sink)] == -1) break;
        for (int v = sink; v != source; v = pred[static_cast<std::size_t>(v)]) {
            int u = pred[static_cast<std::size_t>(v)];
            --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
    BlockFinder finder(g);
    finder.run();
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (finder.is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    if (static_cast<long>(g.size()) * 2 == static_cast<long>(n) * (n - 1)) return n - 1;
    int best = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) best = std::min(best, local_connectivity(g, u, v, best));
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 0) throw GraphError("is_k_connected: negative k");
    return g.order() > k && vertex_connectivity(g) >= k;
}

std::vector<std::pair<int, int>> two_cuts(const Graph& g) {
    if (!is_connected(g)) throw GraphError("two_cuts: graph is disconnected");
    std::vector<std::pair<int, int>> out;
    int n = g.order();
    std::vector<int> rest;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            rest.clear();
            for (int v = 0; v < n; ++v)
                if (v != x && v != y) rest.push_back(v);
            if (rest.size() >= 2 && !induced_connected(g, rest)) out.emplace_back(x, y);
        }
    }
    return out;
}

ConnectivityProfile profile(const Graph& g) {
    ConnectivityProfile p;
    p.is_connected = is_connected(g);
    p.kappa = vertex_connectivity(g);
    BlockFinder finder(g);
    finder.run();
    for (int v = 0; v < g.order(); ++v) {
        if (finder.is_cut[static_cast<std::size_t>(v)]) p.cut_vertices.push_back(v);
        if (g.degree(v) == 1) ++p.leaf_count;
    }
    p.blocks = std::move(finder.blocks);
    return p;
}

}  // namespace steinerkit
