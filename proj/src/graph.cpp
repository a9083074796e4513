#include "steinerkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace steinerkit {

int Graph::count_trailing_zeros(std::uint64_t x) {
    return std::countr_zero(x);
}

void Graph::add_edge_unchecked(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |=
        std::uint64_t{1} << (u & 63);
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    g.degree_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        if (u == v) throw GraphError("loop edge rejected at vertex " + std::to_string(u));
        if (!g.has_edge(u, v)) {
            g.add_edge_unchecked(u, v);
            ++g.degree_[static_cast<std::size_t>(u)];
            ++g.degree_[static_cast<std::size_t>(v)];
            ++g.m_;
        }
    }
    return g;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

VertexSet::VertexSet(const Graph& g, std::vector<int> members)
    : members_(std::move(members)), graph_order_(g.order()) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 0 || members_[i] >= graph_order_)
            throw GraphError("vertex set member out of range: " + std::to_string(members_[i]));
        if (i > 0 && members_[i] == members_[i - 1])
            throw GraphError("duplicate vertex set member: " + std::to_string(members_[i]));
    }
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::full(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    return VertexSet(g, std::move(all));
}

VertexSet VertexSet::complement_of(const Graph& g, const VertexSet& s) {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(g.order() - s.size()));
    for (int v = 0; v < g.order(); ++v)
        if (!s.contains(v)) rest.push_back(v);
    return VertexSet(g, std::move(rest));
}

namespace {

// BFS over the subgraph induced on `verts`, starting pieces at the smallest
// unvisited label. `in_set` must be sized g.order().
ComponentView components_impl(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in_set(static_cast<std::size_t>(g.order()), 0);
    for (int v : verts) in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    ComponentView view;
    std::vector<int> queue;
    for (int start : verts) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> piece;
        queue.clear();
        queue.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            piece.push_back(v);
            g.for_each_neighbor(v, [&](int w) {
                if (in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            });
        }
        std::sort(piece.begin(), piece.end());
        view.pieces.push_back(std::move(piece));
    }
    return view;
}

}  // namespace

ComponentView components(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    return components_impl(g, all);
}

ComponentView components(const Graph& g, const VertexSet& within) {
    if (within.graph_order() != g.order()) throw GraphError("vertex set belongs to another graph");
    return components_impl(g, within.members());
}

bool induced_connected(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return true;
    std::vector<char> in_set(static_cast<std::size_t>(g.order()), 0);
    for (int v : verts) {
        if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> queue{verts.front()};
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[static_cast<std::size_t>(verts.front())] = 1;
    std::size_t reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        g.for_each_neighbor(queue[head], [&](int w) {
            if (in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        });
    }
    return reached == verts.size();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.graph_order() != g.order()) throw GraphError("vertex set belongs to another graph");
    const std::vector<int>& labels = s.members();
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        position[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        g.for_each_neighbor(labels[i], [&](int w) {
            int j = position[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        });
    }
    return {Graph::from_edge_list(static_cast<int>(labels.size()), edges), labels};
}

int edges_between(const Graph& g, int v, const std::vector<int>& c) {
    int count = 0;
    for (int w : c) {
        if (w == v) throw GraphError("edges_between: v belongs to the target set");
        if (g.has_edge(v, w)) ++count;
    }
    return count;
}

// -- graph6 ------------------------------------------------------------

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
constexpr std::string_view kG6Header = ">>graph6<<";
}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.size() >= kG6Header.size() && line.substr(0, kG6Header.size()) == kG6Header)
        line.remove_prefix(kG6Header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw GraphError("graph6: empty line");

    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first < kG6Lo || first > kG6Hi)
        throw GraphError("graph6: byte outside 63..126 in size field");
    if (first == kG6Hi)
        throw GraphError("graph6: orders above 62 are not supported");
    int n = first - kG6Lo;
    line.remove_prefix(1);

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != nbytes)
        throw GraphError("graph6: body length " + std::to_string(line.size()) +
                         " does not match order " + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < kG6Lo || c > kG6Hi) throw GraphError("graph6: byte outside 63..126 in body");
        int group = c - kG6Lo;
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (group >> b) & 1;
            if (bit >= nbits) {
                if (set) throw GraphError("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // bit index t encodes the pair (row, col) of the upper
                // triangle read column by column: t = col*(col-1)/2 + row
                std::size_t t = bit;
                int col = 1;
                while (static_cast<std::size_t>(col) * (col + 1) / 2 <= t) ++col;
                int row = static_cast<int>(t - static_cast<std::size_t>(col) * (col - 1) / 2);
                edges.emplace_back(row, col);
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw GraphError("graph6: orders above 62 are not supported");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    int group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Lo));
                group = 0;
                filled = 0;
            }
        }
    }
    if (nbits % 6 != 0) {
        group <<= 6 - (nbits % 6);
        out.push_back(static_cast<char>(group + kG6Lo));
    }
    return out;
}

// -- edge-list text ------------------------------------------------------

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    long edges_seen = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        if (n < 0) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            if (!(fields >> n >> m))
                throw GraphError("edge list: malformed header at line " + std::to_string(line_no));
            if (n < 0 || m < 0) throw GraphError("edge list: negative counts in header");
            std::string rest;
            if (fields >> rest) throw GraphError("edge list: trailing tokens in header");
            continue;
        }
        long u, v;
        if (!(fields >> u)) continue;  // blank or comment-only line
        if (!(fields >> v))
            throw GraphError("edge list: malformed edge at line " + std::to_string(line_no));
        std::string rest;
        if (fields >> rest)
            throw GraphError("edge list: trailing tokens at line " + std::to_string(line_no));
        ++edges_seen;
        if (edges_seen > m) throw GraphError("edge list: more edges than declared");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw GraphError("edge list: missing header line");
    if (edges_seen != m)
        throw GraphError("edge list: declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_seen));
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace steinerkit
