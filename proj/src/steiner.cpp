#include "steinerkit/steiner.hpp"

#include "steinerkit/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>

namespace steinerkit {

namespace {

constexpr std::int32_t kUnreachable = -1;

// BFS spanning tree of the subgraph induced on `verts`, rooted at the
// smallest label, neighbors visited in ascending order. Edges come back
// sorted. `verts` must induce a connected subgraph.
std::vector<std::pair<int, int>> bfs_spanning_tree(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return {};
    std::vector<char> in_set(static_cast<std::size_t>(g.order()), 0);
    for (int v : verts) in_set[static_cast<std::size_t>(v)] = 1;
    int root = *std::min_element(verts.begin(), verts.end());
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[static_cast<std::size_t>(root)] = 1;
    std::vector<int> queue{root};
    std::vector<std::pair<int, int>> edges;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        g.for_each_neighbor(v, [&](int w) {
            if (in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                edges.emplace_back(std::min(v, w), std::max(v, w));
                queue.push_back(w);
            }
        });
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool terminals_coreachable(const Graph& g, const std::vector<int>& terminals) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> queue{terminals.front()};
    seen[static_cast<std::size_t>(terminals.front())] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        g.for_each_neighbor(queue[head], [&](int w) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        });
    for (int t : terminals)
        if (!seen[static_cast<std::size_t>(t)]) return false;
    return true;
}

// Candidate Steiner-point sets in ascending cardinality, lexicographic within
// a cardinality; the first connecting set wins. Correct because a Steiner
// tree on S with point set X has exactly |S| + |X| - 1 edges.
SteinerResult complement_engine(const Graph& g, const VertexSet& s) {
    const std::vector<int>& terminals = s.members();
    if (!terminals_coreachable(g, terminals))
        return {Distance::infinite(), {}, {}};

    std::vector<int> pool = VertexSet::complement_of(g, s).members();
    int c = static_cast<int>(pool.size());
    std::vector<int> verts = terminals;
    for (int size = 0; size <= c; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            verts.resize(terminals.size());
            for (int i : idx) verts.push_back(pool[static_cast<std::size_t>(i)]);
            if (induced_connected(g, verts)) {
                std::vector<int> points(verts.begin() + static_cast<long>(terminals.size()),
                                        verts.end());
                std::sort(points.begin(), points.end());
                SteinerResult r;
                r.distance = Distance::finite(static_cast<int>(verts.size()) - 1);
                r.steiner_points = std::move(points);
                r.witness_edges = bfs_spanning_tree(g, verts);
                return r;
            }
            // next lexicographic combination
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == c - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw GraphError("complement engine: exhausted candidates on co-reachable terminals");
}

// Classic dynamic program over (terminal subset, attachment vertex) with unit
// edge weights; tree edges recovered by traceback, then the witness is
// normalized to the BFS spanning tree of the visited vertex set.
SteinerResult dp_engine(const Graph& g, const VertexSet& s) {
    const std::vector<int>& terminals = s.members();
    int n = g.order();
    int k = static_cast<int>(terminals.size());
    if (k == 1) return {Distance::finite(0), {}, {}};

    const std::int32_t inf = std::numeric_limits<std::int32_t>::max() / 4;

    // all-pairs BFS distances from each terminal-relevant start
    std::vector<std::vector<std::int32_t>> dist(
        static_cast<std::size_t>(n), std::vector<std::int32_t>(static_cast<std::size_t>(n), inf));
    for (int src = 0; src < n; ++src) {
        auto& d = dist[static_cast<std::size_t>(src)];
        d[static_cast<std::size_t>(src)] = 0;
        std::vector<int> queue{src};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            g.for_each_neighbor(v, [&](int w) {
                if (d[static_cast<std::size_t>(w)] == inf) {
                    d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            });
        }
    }

    std::size_t nmasks = std::size_t{1} << k;
    auto at = [n](std::size_t mask, int v) {
        return mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    };
    std::vector<std::int32_t> dp(nmasks * static_cast<std::size_t>(n), inf);
    // traceback: >=0 encodes a submask split; -1 base case; -2-u encodes a walk from u
    std::vector<std::int32_t> from(nmasks * static_cast<std::size_t>(n), -1);

    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v)
            dp[at(std::size_t{1} << i, v)] =
                dist[static_cast<std::size_t>(terminals[static_cast<std::size_t>(i)])]
                    [static_cast<std::size_t>(v)];

    std::vector<std::vector<int>> buckets;
    for (std::size_t mask = 1; mask < nmasks; ++mask) {
        if ((mask & (mask - 1)) != 0) {  // skip singletons, already seeded
            std::size_t low = mask & (~mask + 1);
            for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
                if (!(sub & low)) continue;  // canonical split: low bit stays left
                for (int v = 0; v < n; ++v) {
                    std::int32_t a = dp[at(sub, v)], b = dp[at(mask ^ sub, v)];
                    if (a < inf && b < inf && a + b < dp[at(mask, v)]) {
                        dp[at(mask, v)] = a + b;
                        from[at(mask, v)] = static_cast<std::int32_t>(sub);
                    }
                }
            }
        }
        // unit-weight relaxation: bucketed BFS over current labels
        buckets.assign(static_cast<std::size_t>(n), {});
        for (int v = 0; v < n; ++v) {
            std::int32_t d = dp[at(mask, v)];
            if (d < inf && d < n) buckets[static_cast<std::size_t>(d)].push_back(v);
        }
        for (int d = 0; d < n; ++d) {
            for (std::size_t i = 0; i < buckets[static_cast<std::size_t>(d)].size(); ++i) {
                int v = buckets[static_cast<std::size_t>(d)][i];
                if (dp[at(mask, v)] != d) continue;
                g.for_each_neighbor(v, [&](int w) {
                    if (d + 1 < dp[at(mask, w)]) {
                        dp[at(mask, w)] = d + 1;
                        from[at(mask, w)] = -2 - v;
                        if (d + 1 < n) buckets[static_cast<std::size_t>(d + 1)].push_back(w);
                    }
                });
            }
        }
    }

    std::size_t full = nmasks - 1;
    int anchor = terminals.front();
    if (dp[at(full, anchor)] >= inf) return {Distance::infinite(), {}, {}};

    // collect the vertices of one optimal tree
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<std::size_t, int>> stack{{full, anchor}};
    while (!stack.empty()) {
        auto [mask, v] = stack.back();
        stack.pop_back();
        used[static_cast<std::size_t>(v)] = 1;
        std::int32_t tag = from[at(mask, v)];
        if (tag >= 0) {
            auto sub = static_cast<std::size_t>(tag);
            stack.emplace_back(sub, v);
            stack.emplace_back(mask ^ sub, v);
        } else if (tag <= -2) {
            stack.emplace_back(mask, -2 - tag);
        } else if ((mask & (mask - 1)) == 0) {
            // base: walk the BFS distance gradient back to the terminal
            int t = terminals[static_cast<std::size_t>(std::countr_zero(mask))];
            int cur = v;
            const auto& dt = dist[static_cast<std::size_t>(t)];
            while (cur != t) {
                int next = -1;
                g.for_each_neighbor(cur, [&](int w) {
                    if (next == -1 && dt[static_cast<std::size_t>(w)] + 1 ==
                                          dt[static_cast<std::size_t>(cur)])
                        next = w;
                });
                used[static_cast<std::size_t>(next)] = 1;
                cur = next;
            }
        }
    }

    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (used[static_cast<std::size_t>(v)]) verts.push_back(v);
    SteinerResult r;
    r.distance = Distance::finite(dp[at(full, anchor)]);
    for (int v : verts)
        if (!s.contains(v)) r.steiner_points.push_back(v);
    r.witness_edges = bfs_spanning_tree(g, verts);
    if (static_cast<int>(r.witness_edges.size()) != r.distance.value())
        throw GraphError("terminal dp: inconsistent witness reconstruction");
    return r;
}

}  // namespace

SteinerResult steiner_distance(const Graph& g, const VertexSet& s, Engine engine,
                               const EngineLimits& limits) {
    if (s.graph_order() != g.order()) throw GraphError("vertex set belongs to another graph");
    if (s.size() < 1) throw GraphError("steiner_distance: empty terminal set");
    int complement = g.order() - s.size();
    switch (engine) {
        case Engine::Complement:
            if (complement > limits.complement_cap)
                throw GraphError("complement engine: candidate space exceeds cap (" +
                                 std::to_string(complement) + " > " +
                                 std::to_string(limits.complement_cap) + ")");
            return complement_engine(g, s);
        case Engine::TerminalDp:
            if (s.size() > limits.dp_terminal_cap)
                throw GraphError("terminal dp: terminal count exceeds cap (" +
                                 std::to_string(s.size()) + " > " +
                                 std::to_string(limits.dp_terminal_cap) + ")");
            return dp_engine(g, s);
        case Engine::Auto:
            if (complement <= limits.dp_threshold) return complement_engine(g, s);
            if (s.size() <= limits.dp_terminal_cap) return dp_engine(g, s);
            throw GraphError("steiner_distance: instance exceeds both engine guards");
    }
    throw GraphError("steiner_distance: unknown engine");
}

bool check_witness(const Graph& g, const VertexSet& s, const SteinerResult& result) {
    if (result.distance.is_infinite())
        return result.steiner_points.empty() && result.witness_edges.empty() &&
               !terminals_coreachable(g, s.members());

    std::vector<int> verts = s.members();
    verts.insert(verts.end(), result.steiner_points.begin(), result.steiner_points.end());
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
    for (int p : result.steiner_points)
        if (s.contains(p)) return false;

    if (static_cast<int>(result.witness_edges.size()) != result.distance.value()) return false;
    if (result.distance.value() != static_cast<int>(verts.size()) - 1) return false;

    // every edge real and inside the vertex set; acyclic + connected via union-find
    std::vector<int> uf(verts.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[static_cast<std::size_t>(x)] != x) {
            uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
            x = uf[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto index_of = [&](int v) {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v) return -1;
        return static_cast<int>(it - verts.begin());
    };
    for (auto [u, v] : result.witness_edges) {
        if (!g.has_edge(u, v)) return false;
        int a = index_of(u), b = index_of(v);
        if (a < 0 || b < 0) return false;
        a = find(a);
        b = find(b);
        if (a == b) return false;  // cycle
        uf[static_cast<std::size_t>(a)] = b;
    }
    int root = find(0);
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

std::vector<std::int32_t> all_set_distances(const Graph& g) {
    int n = g.order();
    if (n < 1 || n > 20) throw GraphError("all_set_distances supports 1 <= n <= 20");
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        g.for_each_neighbor(v, [&](int w) { adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << w; });

    const std::int32_t inf = std::numeric_limits<std::int32_t>::max() / 4;
    std::vector<std::int32_t> d(std::size_t{1} << n, inf);
    d[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // closure from the lowest member; connected iff it swallows the mask
        std::uint32_t reach = mask & (~mask + 1);
        std::uint32_t frontier = reach;
        while (frontier != 0) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t add = adj[static_cast<std::size_t>(v)] & mask & ~reach;
            reach |= add;
            frontier |= add;
        }
        if (reach == mask) d[mask] = std::popcount(mask) - 1;
        if (mask == full) break;
    }
    for (int i = 0; i < n; ++i) {
        std::uint32_t bit = std::uint32_t{1} << i;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (!(mask & bit)) d[mask] = std::min(d[mask], d[mask | bit]);
            if (mask == full) break;
        }
    }
    for (auto& v : d)
        if (v >= inf) v = kUnreachable;
    return d;
}

namespace {

void require_profile_preconditions(const Graph& g, int k) {
    if (k < 2 || k > g.order())
        throw GraphError("k out of range: need 2 <= k <= n, got k=" + std::to_string(k) +
                         ", n=" + std::to_string(g.order()));
    if (!is_connected(g)) throw GraphError("graph is disconnected");
}

// Lexicographically erste k-combination enumerator over 0..n-1.
struct Combinations {
    int n, k;
    std::vector<int> idx;
    bool done = false;

    Combinations(int n_, int k_) : n(n_), k(k_), idx(static_cast<std::size_t>(k_)) {
        std::iota(idx.begin(), idx.end(), 0);
        done = k_ > n_;
    }
    bool next() {
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    }
};

int set_distance_generic(const Graph& g, const std::vector<int>& verts) {
    VertexSet s(g, verts);
    return steiner_distance(g, s, Engine::Auto).distance.value();
}

}  // namespace

EccentricityProfile eccentricity_profile(const Graph& g, int k) {
    require_profile_preconditions(g, k);
    int n = g.order();
    EccentricityProfile prof;
    prof.k = k;
    prof.per_vertex.assign(static_cast<std::size_t>(n), 0);

    std::vector<std::int32_t> d;
    if (n <= 20) d = all_set_distances(g);

    if (n <= 20) {
        std::uint32_t full = (std::uint32_t{1} << n) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) != k) {
                if (mask == full) break;
                continue;
            }
            std::int32_t dist = d[mask];
            std::uint32_t rest = mask;
            while (rest != 0) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                prof.per_vertex[static_cast<std::size_t>(v)] =
                    std::max(prof.per_vertex[static_cast<std::size_t>(v)], dist);
            }
            if (mask == full) break;
        }
    } else {
        Combinations combo(n, k);
        do {
            int dist = set_distance_generic(g, combo.idx);
            for (int v : combo.idx)
                prof.per_vertex[static_cast<std::size_t>(v)] =
                    std::max(prof.per_vertex[static_cast<std::size_t>(v)], dist);
        } while (combo.next());
    }

    prof.radius = *std::min_element(prof.per_vertex.begin(), prof.per_vertex.end());
    prof.diameter = *std::max_element(prof.per_vertex.begin(), prof.per_vertex.end());
    for (int v = 0; v < n; ++v)
        if (prof.per_vertex[static_cast<std::size_t>(v)] == prof.radius) prof.center.push_back(v);

    // lexicographically smallest attaining k-set
    Combinations combo(n, k);
    do {
        int dist;
        if (n <= 20) {
            std::uint32_t mask = 0;
            for (int v : combo.idx) mask |= std::uint32_t{1} << v;
            dist = d[mask];
        } else {
            dist = set_distance_generic(g, combo.idx);
        }
        if (dist == prof.diameter) {
            prof.diameter_witness = combo.idx;
            break;
        }
    } while (combo.next());
    return prof;
}

int steiner_eccentricity(const Graph& g, int v, int k) {
    require_profile_preconditions(g, k);
    if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
    return eccentricity_profile(g, k).per_vertex[static_cast<std::size_t>(v)];
}

std::vector<int> steiner_center(const Graph& g, int k) {
    return eccentricity_profile(g, k).center;
}

std::vector<int> steiner_median(const Graph& g, int k) {
    require_profile_preconditions(g, k);
    int n = g.order();
    std::vector<long long> total(static_cast<std::size_t>(n), 0);
    if (n <= 20) {
        std::vector<std::int32_t> d = all_set_distances(g);
        std::uint32_t full = (std::uint32_t{1} << n) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) == k) {
                std::uint32_t rest = mask;
                while (rest != 0) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    total[static_cast<std::size_t>(v)] += d[mask];
                }
            }
            if (mask == full) break;
        }
    } else {
        Combinations combo(n, k);
        do {
            int dist = set_distance_generic(g, combo.idx);
            for (int v : combo.idx) total[static_cast<std::size_t>(v)] += dist;
        } while (combo.next());
    }
    long long best = *std::min_element(total.begin(), total.end());
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (total[static_cast<std::size_t>(v)] == best) out.push_back(v);
    return out;
}

Rational make_rational(long long num, long long den) {
    if (den == 0) throw GraphError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

Rational average_steiner_distance(const Graph& g, int k) {
    require_profile_preconditions(g, k);
    int n = g.order();
    long long count = 0;
    long long sum = 0;
    if (n <= 20) {
        std::vector<std::int32_t> d = all_set_distances(g);
        std::uint32_t full = (std::uint32_t{1} << n) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) == k) {
                sum += d[mask];
                ++count;
            }
            if (mask == full) break;
        }
    } else {
        Combinations combo(n, k);
        do {
            sum += set_distance_generic(g, combo.idx);
            ++count;
        } while (combo.next());
    }
    return make_rational(sum, count);
}

int steiner_diameter(const Graph& g, int k) {
    require_profile_preconditions(g, k);
    int n = g.order();
    if (n <= 20) {
        std::vector<std::int32_t> d = all_set_distances(g);
        std::uint32_t full = (std::uint32_t{1} << n) - 1;
        std::int32_t best = 0;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) == k) best = std::max(best, d[mask]);
            if (mask == full) break;
        }
        return best;
    }
    int best = 0;
    Combinations combo(n, k);
    do best = std::max(best, set_distance_generic(g, combo.idx));
    while (combo.next());
    return best;
}

}  // namespace steinerkit
