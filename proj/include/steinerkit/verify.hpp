#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinerkit/characterize.hpp"
#include "steinerkit/steiner.hpp"

namespace steinerkit {

class VerifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class KPolicy { N, NMinus1, NMinus2, NMinus3, All };

std::string k_policy_name(KPolicy p);
KPolicy k_policy_from_name(const std::string& name);

/// Which interpretations --strict gates for the k = n-3 class.
enum class StrictGate { Literal, Amended, Both };

struct AuditConfig {
    KPolicy policy = KPolicy::NMinus3;
    int workers = 1;
    bool strict = false;
    StrictGate gate = StrictGate::Amended;
    bool expect_exhaustive = false;
    EngineLimits limits{};
    std::optional<std::uint64_t> seed;  // echoed when the stream came from the generator
};

struct AuditSummary {
    struct PerN {
        long graphs = 0;
        long records = 0;
        long match_literal = 0;
        long mismatch_literal = 0;
        long match_amended = 0;
        long mismatch_amended = 0;
    };
    std::map<int, PerN> per_n;
    long graphs = 0;
    long skipped = 0;
    long records = 0;
    long mismatch_literal = 0;
    long mismatch_amended = 0;
    long hard_mismatches = 0;  // clean-theorem classes, plus gated n-3 under strict
    double wall_seconds = 0;   // never serialized into the record stream
    AuditConfig config;

    int exit_code() const { return hard_mismatches > 0 ? 1 : 0; }
};

/// Audit a graph6 stream: one JSON record line per (graph, k), a skip line
/// per unusable input graph, and one final summary line. Output bytes are
/// independent of the worker count. Throws VerifyError on parse failures
/// (with 1-based line number) and on exhaustive-count deviations.
AuditSummary audit_stream(std::istream& in, std::ostream& out, const AuditConfig& cfg);

std::string summary_to_json_line(const AuditSummary& summary);

/// Connected G(n, p) samples, rejection-sampled with a cap of 1000 attempts
/// per emitted graph. Deterministic: mt19937_64 seeded as given, one draw per
/// vertex pair in row-major order (0,1),(0,2),...,(n-2,n-1); the edge is kept
/// iff draw < floor(p * 2^64). Returns graph6 lines.
std::vector<std::string> random_graphs(int n, long long p_num, long long p_den, int count,
                                       std::uint64_t seed);

/// Re-verify one record line: recomputes the oracle value, the witness
/// distance and the match flags from scratch. False on any inconsistency;
/// throws VerifyError on records that do not parse.
bool recheck(const std::string& record_line);

}  // namespace steinerkit
