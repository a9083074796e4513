#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "steinerkit/graph.hpp"

namespace steinerkit {

/// Steiner distance value: a non-negative edge count or the infinite
/// sentinel used when no tree spans the terminals. The sentinel compares
/// greater than every finite value; asking for its numeric value throws.
class Distance {
public:
    static Distance finite(int v) {
        if (v < 0) throw GraphError("negative distance");
        Distance d;
        d.value_ = v;
        return d;
    }
    static Distance infinite() { return Distance{}; }

    bool is_infinite() const { return value_ < 0; }
    int value() const {
        if (is_infinite()) throw GraphError("arithmetic on an infinite distance");
        return value_;
    }

    friend bool operator==(Distance a, Distance b) { return a.value_ == b.value_; }
    friend bool operator!=(Distance a, Distance b) { return !(a == b); }
    friend bool operator<(Distance a, Distance b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(Distance a, Distance b) { return a == b || a < b; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
    int value_ = -1;
};

/// Exact Steiner distance plus a witness tree on S and the chosen Steiner
/// points. For infinite results both vectors are empty.
struct SteinerResult {
    Distance distance;
    std::vector<int> steiner_points;                  // sorted, disjoint from S
    std::vector<std::pair<int, int>> witness_edges;   // sorted pairs (u < v)
};

enum class Engine { Auto, Complement, TerminalDp };

/// Resource guards and the AUTO switch-over point.
struct EngineLimits {
    int dp_threshold = 14;    // AUTO prefers COMPLEMENT while n - |S| <= this
    int complement_cap = 20;  // hard cap on n - |S| for COMPLEMENT
    int dp_terminal_cap = 18; // hard cap on |S| for TERMINAL_DP
};

SteinerResult steiner_distance(const Graph& g, const VertexSet& s, Engine engine = Engine::Auto,
                               const EngineLimits& limits = {});

/// Validity check used by tests and the audit: the witness must be a tree
/// containing S whose edge count equals the distance; infinite results must
/// have genuinely separated terminals.
bool check_witness(const Graph& g, const VertexSet& s, const SteinerResult& result);

/// d[mask] = Steiner distance of the vertex subset encoded by mask, for every
/// mask at once (disconnected sets map to a negative sentinel). Requires
/// n <= 20; singletons get 0.
std::vector<std::int32_t> all_set_distances(const Graph& g);

struct EccentricityProfile {
    int k = 0;
    std::vector<int> per_vertex;       // e_k(v), indexed by vertex
    int radius = 0;
    int diameter = 0;
    std::vector<int> center;           // argmin vertices, ascending
    std::vector<int> diameter_witness; // lexicographically smallest attaining k-set
};

int steiner_eccentricity(const Graph& g, int v, int k);
EccentricityProfile eccentricity_profile(const Graph& g, int k);
std::vector<int> steiner_center(const Graph& g, int k);
std::vector<int> steiner_median(const Graph& g, int k);

/// Exact reduced fraction.
struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

Rational make_rational(long long num, long long den);

Rational average_steiner_distance(const Graph& g, int k);

/// Convenience oracle: sdiam_k via the same machinery as the profile.
int steiner_diameter(const Graph& g, int k);

}  // namespace steinerkit
