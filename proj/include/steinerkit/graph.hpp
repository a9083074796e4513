#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace steinerkit {

/// Raised on any malformed input or violated precondition.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored as packed bit rows; neighbor order is always
/// ascending, so every traversal in the library is deterministic.
class Graph {
public:
    Graph() = default;

    /// Build from an explicit edge list. Duplicate edges collapse silently,
    /// loops and out-of-range endpoints are errors.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        return degree_[static_cast<std::size_t>(v)];
    }

    /// Neighbors of v in ascending order.
    std::vector<int> neighbors(int v) const;

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        check_vertex(v);
        const std::uint64_t* row = &bits_[static_cast<std::size_t>(v) * words_];
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = row[w];
            while (word != 0) {
                int bit = count_trailing_zeros(word);
                f(w * 64 + bit);
                word &= word - 1;
            }
        }
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    static int count_trailing_zeros(std::uint64_t x);
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw GraphError("vertex out of range: " + std::to_string(v));
    }
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
};

/// Validated subset of the vertices of one graph; members sorted ascending.
class VertexSet {
public:
    VertexSet(const Graph& g, std::vector<int> members);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const;
    int graph_order() const { return graph_order_; }

    static VertexSet full(const Graph& g);
    static VertexSet complement_of(const Graph& g, const VertexSet& s);

private:
    std::vector<int> members_;
    int graph_order_ = 0;
};

/// Partition of a vertex subset into maximal connected pieces.
/// Pieces are ordered by smallest original label; vertices ascend within.
struct ComponentView {
    std::vector<std::vector<int>> pieces;

    std::size_t count() const { return pieces.size(); }
    std::vector<int> orders() const {
        std::vector<int> out;
        out.reserve(pieces.size());
        for (const auto& p : pieces) out.push_back(static_cast<int>(p.size()));
        return out;
    }
};

ComponentView components(const Graph& g);
ComponentView components(const Graph& g, const VertexSet& within);

/// True iff the subgraph induced on `verts` (given ascending or not) is
/// connected; an empty set counts as connected.
bool induced_connected(const Graph& g, const std::vector<int>& verts);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;  // labels[new_vertex] = original label
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Number of edges joining v to members of c. v must not belong to c.
int edges_between(const Graph& g, int v, const std::vector<int>& c);

// -- graph6 ------------------------------------------------------------

/// Parse one graph6 line (n <= 62, single-byte size field). An optional
/// ">>graph6<<" prefix is tolerated and stripped.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding (no header). Requires n <= 62.
std::string to_graph6(const Graph& g);

// -- edge-list text format ----------------------------------------------
// First line "n m", then m lines "u v" (0-based), '#' comment lines ignored.

Graph parse_edge_list_text(std::string_view text);

}  // namespace steinerkit
