#include "steinerkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <istream>
#include <ostream>
#include <random>
#include <thread>

#include <json.hpp>

namespace steinerkit {

using nlohmann::json;

std::string k_policy_name(KPolicy p) {
    switch (p) {
        case KPolicy::N: return "n";
        case KPolicy::NMinus1: return "n-1";
        case KPolicy::NMinus2: return "n-2";
        case KPolicy::NMinus3: return "n-3";
        case KPolicy::All: return "all";
    }
    return "?";
}

KPolicy k_policy_from_name(const std::string& name) {
    if (name == "n") return KPolicy::N;
    if (name == "n-1") return KPolicy::NMinus1;
    if (name == "n-2") return KPolicy::NMinus2;
    if (name == "n-3") return KPolicy::NMinus3;
    if (name == "all") return KPolicy::All;
    throw VerifyError("unknown k policy: " + name);
}

namespace {

constexpr int kSchemaVersion = 1;

// published totals of connected graphs per order, used by --expect-exhaustive
const std::map<int, long> kConnectedTotals = {
    {1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}, {8, 11117},
};

struct KCase {
    int k;              // resolved value
    std::string label;  // "n", "n-1", ...
};

std::vector<KCase> cases_for(KPolicy policy, int n) {
    std::vector<KCase> out;
    auto add = [&](int offset, const std::string& label) {
        int k = n - offset;
        int min_order = offset + 2;  // k >= 2
        if (offset == 2) min_order = 4;
        if (offset == 3) min_order = 5;
        if (n >= min_order && k >= 2) out.push_back({k, label});
    };
    switch (policy) {
        case KPolicy::N: add(0, "n"); break;
        case KPolicy::NMinus1: add(1, "n-1"); break;
        case KPolicy::NMinus2: add(2, "n-2"); break;
        case KPolicy::NMinus3: add(3, "n-3"); break;
        case KPolicy::All:
            add(0, "n");
            add(1, "n-1");
            add(2, "n-2");
            add(3, "n-3");
            break;
    }
    return out;
}

int oracle_sdiam(const Graph& g, int k, const std::vector<std::int32_t>* sweep) {
    if (sweep != nullptr) {
        std::uint32_t full = (std::uint32_t{1} << g.order()) - 1;
        std::int32_t best = 0;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (std::popcount(mask) == k) best = std::max(best, (*sweep)[mask]);
            if (mask == full) break;
        }
        return best;
    }
    return steiner_diameter(g, k);
}

// lexicographically smallest k-set attaining the target distance
std::vector<int> witness_set(const Graph& g, int k, int target,
                             const std::vector<std::int32_t>* sweep) {
    int n = g.order();
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        int dist;
        if (sweep != nullptr) {
            std::uint32_t mask = 0;
            for (int v : idx) mask |= std::uint32_t{1} << v;
            dist = (*sweep)[mask];
        } else {
            dist = steiner_distance(g, VertexSet(g, idx)).distance.value();
        }
        if (dist == target) return idx;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) throw VerifyError("no witness set attains the oracle value");
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

json rules_json(const std::vector<RuleId>& chain) {
    json arr = json::array();
    for (RuleId id : chain) arr.push_back(rule_name(id));
    return arr;
}

json witness_roles_json(const StructuralWitness& w) {
    json arr = json::array();
    for (const auto& [name, vertex] : w.roles) arr.push_back(json{{"role", name}, {"vertex", vertex}});
    return arr;
}

struct GraphWork {
    std::string lines;  // record lines for this input graph, '\n'-terminated
    int n = 0;
    bool skipped = false;
    long records = 0;
    long match_literal = 0;
    long mismatch_literal = 0;
    long match_amended = 0;
    long mismatch_amended = 0;
    long hard = 0;
};

GraphWork process_graph(const Graph& g, const std::string& line, long seq,
                        const AuditConfig& cfg) {
    GraphWork work;
    work.n = g.order();

    if (!is_connected(g)) {
        json skip{{"type", "skip"}, {"schema", kSchemaVersion}, {"seq", seq},
                  {"g6", line}, {"reason", "disconnected"}};
        work.lines = skip.dump() + "\n";
        work.skipped = true;
        return work;
    }

    std::vector<KCase> cases = cases_for(cfg.policy, g.order());
    if (cases.empty()) {
        json skip{{"type", "skip"}, {"schema", kSchemaVersion}, {"seq", seq},
                  {"g6", line}, {"reason", "k out of range for this order"}};
        work.lines = skip.dump() + "\n";
        work.skipped = true;
        return work;
    }

    std::vector<std::int32_t> sweep_data;
    const std::vector<std::int32_t>* sweep = nullptr;
    if (g.order() <= 20) {
        sweep_data = all_set_distances(g);
        sweep = &sweep_data;
    }

    std::string lines;
    for (const KCase& kc : cases) {
        ClassificationOutcome lit, amd;
        if (kc.label == "n") {
            lit = amd = classify_n(g);
        } else if (kc.label == "n-1") {
            lit = amd = classify_n_minus_1(g);
        } else if (kc.label == "n-2") {
            lit = amd = classify_n_minus_2(g);
        } else {
            lit = classify_n_minus_3(g, Interpretation::Literal);
            amd = classify_n_minus_3(g, Interpretation::Amended);
        }
        int oracle = oracle_sdiam(g, kc.k, sweep);
        bool match_lit = lit.predicted == oracle;
        bool match_amd = amd.predicted == oracle;

        json rec{{"type", "record"},
                 {"schema", kSchemaVersion},
                 {"seq", seq},
                 {"g6", line},
                 {"n", g.order()},
                 {"m", g.size()},
                 {"k", kc.k},
                 {"k_policy", kc.label},
                 {"oracle", oracle},
                 {"predicted", json{{"literal", lit.predicted}, {"amended", amd.predicted}}},
                 {"match", json{{"literal", match_lit}, {"amended", match_amd}}},
                 {"rules", json{{"literal", rules_json(lit.rule_chain)},
                                {"amended", rules_json(amd.rule_chain)}}}};

        if (!match_lit || !match_amd) {
            std::vector<int> wset = witness_set(g, kc.k, oracle, sweep);
            SteinerResult sr = steiner_distance(g, VertexSet(g, wset), Engine::Auto, cfg.limits);
            json edges = json::array();
            for (auto [a, b] : sr.witness_edges) edges.push_back(json::array({a, b}));
            rec["witness"] = json{{"set", wset},
                                  {"distance", sr.distance.value()},
                                  {"steiner_points", sr.steiner_points},
                                  {"tree", edges}};
            const ClassificationOutcome& wrong = match_lit ? amd : lit;
            if (wrong.witness.has_value())
                rec["rule_witness_roles"] = witness_roles_json(*wrong.witness);
        }

        lines += rec.dump();
        lines += "\n";
        ++work.records;
        if (match_lit) ++work.match_literal; else ++work.mismatch_literal;
        if (match_amd) ++work.match_amended; else ++work.mismatch_amended;

        bool clean_class = kc.label != "n-3";
        if (clean_class) {
            if (!match_lit || !match_amd) ++work.hard;
        } else if (cfg.strict) {
            bool gate_lit = cfg.gate == StrictGate::Literal || cfg.gate == StrictGate::Both;
            bool gate_amd = cfg.gate == StrictGate::Amended || cfg.gate == StrictGate::Both;
            if ((gate_lit && !match_lit) || (gate_amd && !match_amd)) ++work.hard;
        }
    }
    work.lines = std::move(lines);
    return work;
}

// configuration echo; worker count is deliberately absent so that reports
// are byte-identical across worker counts
json config_json(const AuditConfig& cfg) {
    json j{{"policy", k_policy_name(cfg.policy)},
           {"strict", cfg.strict},
           {"strict_gate", cfg.gate == StrictGate::Literal   ? "literal"
                           : cfg.gate == StrictGate::Amended ? "amended"
                                                             : "both"},
           {"expect_exhaustive", cfg.expect_exhaustive},
           {"dp_threshold", cfg.limits.dp_threshold},
           {"complement_cap", cfg.limits.complement_cap},
           {"dp_terminal_cap", cfg.limits.dp_terminal_cap},
           {"amendments", json::array({"vacuous_exact", "symbol_zz", "edge_target_y"})}};
    if (cfg.seed.has_value())
        j["seed"] = *cfg.seed;
    else
        j["seed"] = nullptr;
    return j;
}

}  // namespace

std::string summary_to_json_line(const AuditSummary& s) {
    json per_n = json::object();
    for (const auto& [n, st] : s.per_n) {
        per_n[std::to_string(n)] = json{{"graphs", st.graphs},
                                        {"records", st.records},
                                        {"match_literal", st.match_literal},
                                        {"mismatch_literal", st.mismatch_literal},
                                        {"match_amended", st.match_amended},
                                        {"mismatch_amended", st.mismatch_amended}};
    }
    json j{{"type", "summary"},
           {"schema", kSchemaVersion},
           {"graphs", s.graphs},
           {"skipped", s.skipped},
           {"records", s.records},
           {"mismatch_literal", s.mismatch_literal},
           {"mismatch_amended", s.mismatch_amended},
           {"hard_mismatches", s.hard_mismatches},
           {"per_n", per_n},
           {"config", config_json(s.config)}};
    return j.dump();
}

AuditSummary audit_stream(std::istream& in, std::ostream& out, const AuditConfig& cfg) {
    auto started = std::chrono::steady_clock::now();

    // parse everything up front so failures abort before any output
    std::vector<std::string> lines;
    std::vector<Graph> graphs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const GraphError& e) {
            throw VerifyError("line " + std::to_string(line_no) + ": " + e.what());
        }
        lines.push_back(line);
    }

    std::vector<GraphWork> results(graphs.size());
    int workers = std::max(1, cfg.workers);
    if (workers == 1 || graphs.size() <= 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            results[i] = process_graph(graphs[i], lines[i], static_cast<long>(i), cfg);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= graphs.size()) break;
                    results[i] = process_graph(graphs[i], lines[i], static_cast<long>(i), cfg);
                }
            });
        for (auto& t : pool) t.join();
    }

    AuditSummary summary;
    summary.config = cfg;
    for (const GraphWork& work : results) {
        out << work.lines;
        if (work.skipped) {
            ++summary.skipped;
            continue;
        }
        ++summary.graphs;
        auto& pn = summary.per_n[work.n];
        ++pn.graphs;
        pn.records += work.records;
        pn.match_literal += work.match_literal;
        pn.mismatch_literal += work.mismatch_literal;
        pn.match_amended += work.match_amended;
        pn.mismatch_amended += work.mismatch_amended;
        summary.records += work.records;
        summary.mismatch_literal += work.mismatch_literal;
        summary.mismatch_amended += work.mismatch_amended;
        summary.hard_mismatches += work.hard;
    }

    if (cfg.expect_exhaustive) {
        for (const auto& [n, st] : summary.per_n) {
            auto it = kConnectedTotals.find(n);
            if (it == kConnectedTotals.end())
                throw VerifyError("no published connected-graph total for order " +
                                  std::to_string(n));
            if (st.graphs != it->second)
                throw VerifyError("exhaustive count deviation at order " + std::to_string(n) +
                                  ": saw " + std::to_string(st.graphs) + ", expected " +
                                  std::to_string(it->second));
        }
    }

    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    out << summary_to_json_line(summary) << "\n";
    return summary;
}

std::vector<std::string> random_graphs(int n, long long p_num, long long p_den, int count,
                                       std::uint64_t seed) {
    if (n < 1 || n > 62) throw VerifyError("random_graphs: order must be 1..62");
    if (p_den <= 0 || p_num < 0 || p_num > p_den)
        throw VerifyError("random_graphs: probability must lie in [0,1]");
    if (count < 0) throw VerifyError("random_graphs: negative count");

    bool always = p_num == p_den;
    std::uint64_t threshold = 0;
    if (!always) {
        unsigned __int128 t = static_cast<unsigned __int128>(p_num);
        t <<= 64;
        t /= static_cast<unsigned __int128>(p_den);
        threshold = static_cast<std::uint64_t>(t);
    }

    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(count));
    constexpr int kRetryCap = 1000;
    for (int i = 0; i < count; ++i) {
        int attempts = 0;
        while (true) {
            if (++attempts > kRetryCap)
                throw VerifyError("random_graphs: retry cap exceeded; connected samples at this "
                                  "probability are too rare");
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    std::uint64_t draw = rng();
                    if (always || draw < threshold) edges.emplace_back(u, v);
                }
            Graph g = Graph::from_edge_list(n, edges);
            if (is_connected(g)) {
                out.push_back(to_graph6(g));
                break;
            }
        }
    }
    return out;
}

bool recheck(const std::string& record_line) {
    json rec;
    try {
        rec = json::parse(record_line);
    } catch (const json::exception& e) {
        throw VerifyError(std::string("recheck: unparseable record: ") + e.what());
    }
    if (!rec.is_object() || rec.value("type", "") != "record")
        throw VerifyError("recheck: not a record object");
    try {
        Graph g = parse_graph6(rec.at("g6").get<std::string>());
        if (g.order() != rec.at("n").get<int>()) return false;
        if (g.size() != rec.at("m").get<int>()) return false;
        int k = rec.at("k").get<int>();
        if (k < 2 || k > g.order()) return false;

        int oracle = rec.at("oracle").get<int>();
        if (oracle < k - 1 || oracle > g.order() - 1) return false;
        std::vector<std::int32_t> sweep;
        const std::vector<std::int32_t>* sweep_ptr = nullptr;
        if (g.order() <= 20) {
            sweep = all_set_distances(g);
            sweep_ptr = &sweep;
        }
        if (oracle_sdiam(g, k, sweep_ptr) != oracle) return false;

        int pred_lit = rec.at("predicted").at("literal").get<int>();
        int pred_amd = rec.at("predicted").at("amended").get<int>();
        bool match_lit = rec.at("match").at("literal").get<bool>();
        bool match_amd = rec.at("match").at("amended").get<bool>();
        if (match_lit != (pred_lit == oracle)) return false;
        if (match_amd != (pred_amd == oracle)) return false;

        if (!match_lit || !match_amd) {
            if (!rec.contains("witness")) return false;
            const json& w = rec.at("witness");
            std::vector<int> set = w.at("set").get<std::vector<int>>();
            if (static_cast<int>(set.size()) != k) return false;
            VertexSet s(g, set);
            if (w.at("distance").get<int>() != oracle) return false;
            SteinerResult recomputed = steiner_distance(g, s);
            if (recomputed.distance != Distance::finite(oracle)) return false;
            SteinerResult stored;
            stored.distance = Distance::finite(w.at("distance").get<int>());
            stored.steiner_points = w.at("steiner_points").get<std::vector<int>>();
            for (const auto& e : w.at("tree"))
                stored.witness_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            if (!check_witness(g, s, stored)) return false;
        }
        return true;
    } catch (const json::exception& e) {
        throw VerifyError(std::string("recheck: malformed record: ") + e.what());
    } catch (const GraphError&) {
        return false;
    }
}

}  // namespace steinerkit
