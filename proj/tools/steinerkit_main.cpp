#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinerkit/characterize.hpp"
#include "steinerkit/connectivity.hpp"
#include "steinerkit/graph.hpp"
#include "steinerkit/steiner.hpp"
#include "steinerkit/verify.hpp"

namespace sk = steinerkit;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;  // fixed default, not entropy

struct InputOptions {
    std::string g6;
    std::string edges_path;
    std::string input_path;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    auto* g6 = cmd->add_option("--g6", opts.g6, "inline graph6 string");
    auto* edges = cmd->add_option("--edges", opts.edges_path, "edge-list file (n m header)");
    auto* input = cmd->add_option("--input", opts.input_path, "file with one graph6 line");
    g6->excludes(edges)->excludes(input);
    edges->excludes(input);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sk::GraphError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sk::Graph load_graph(const InputOptions& opts) {
    if (!opts.g6.empty()) return sk::parse_graph6(opts.g6);
    if (!opts.edges_path.empty()) return sk::parse_edge_list_text(read_file(opts.edges_path));
    if (!opts.input_path.empty()) {
        std::string text;
        if (opts.input_path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            text = read_file(opts.input_path);
        }
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (!line.empty()) return sk::parse_graph6(line);
        }
        throw sk::GraphError("no graph6 line in " + opts.input_path);
    }
    throw sk::GraphError("no input given: use --g6, --edges or --input");
}

/// Resolve "n" / "n-1" / "n-2" / "n-3" / absolute integer against the order.
int resolve_k(const std::string& spec, int n) {
    if (spec == "n") return n;
    if (spec == "n-1") return n - 1;
    if (spec == "n-2") return n - 2;
    if (spec == "n-3") return n - 3;
    try {
        std::size_t used = 0;
        int k = std::stoi(spec, &used);
        if (used != spec.size()) throw std::invalid_argument(spec);
        return k;
    } catch (const std::exception&) {
        throw sk::GraphError("cannot parse k: " + spec);
    }
}

std::vector<int> parse_terminals(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw sk::GraphError("empty terminal in list");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw sk::GraphError("empty terminal list");
    return out;
}

sk::Engine engine_from_name(const std::string& name) {
    if (name == "auto") return sk::Engine::Auto;
    if (name == "complement") return sk::Engine::Complement;
    if (name == "terminal-dp") return sk::Engine::TerminalDp;
    throw sk::GraphError("unknown engine: " + name);
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += " ";
        out += std::to_string(xs[i]);
    }
    return out;
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
    json arr = json::array();
    for (auto [a, b] : edges) arr.push_back(json::array({a, b}));
    return arr;
}

// -- compute --------------------------------------------------------------

int run_compute(const InputOptions& in, const std::string& kspec, const std::string& terminals,
                bool average, const std::string& engine_name, const sk::EngineLimits& limits,
                const std::string& format) {
    sk::Graph g = load_graph(in);
    sk::Engine engine = engine_from_name(engine_name);
    bool records = format == "records";

    if (!terminals.empty()) {
        sk::VertexSet s(g, parse_terminals(terminals));
        sk::SteinerResult r = sk::steiner_distance(g, s, engine, limits);
        if (records) {
            json j{{"type", "compute"}, {"n", g.order()}, {"m", g.size()},
                   {"terminals", s.members()},
                   {"distance", r.distance.is_infinite() ? json("inf") : json(r.distance.value())},
                   {"steiner_points", r.steiner_points}, {"tree", edges_json(r.witness_edges)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "terminals " << join_ints(s.members()) << "\n";
            std::cout << "distance " << r.distance.str() << "\n";
            if (!r.distance.is_infinite()) {
                std::cout << "steiner_points " << join_ints(r.steiner_points) << "\n";
                std::cout << "tree";
                for (auto [a, b] : r.witness_edges) std::cout << " (" << a << "," << b << ")";
                std::cout << "\n";
            }
        }
        return 0;
    }

    int k = resolve_k(kspec.empty() ? "n-3" : kspec, g.order());

    if (average) {
        sk::Rational mu = sk::average_steiner_distance(g, k);
        if (records) {
            json j{{"type", "compute"}, {"n", g.order()}, {"m", g.size()}, {"k", k},
                   {"average", json{{"num", mu.num}, {"den", mu.den}}}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "average_steiner_distance " << mu.str() << "\n";
        }
        return 0;
    }

    sk::EccentricityProfile prof = sk::eccentricity_profile(g, k);
    sk::SteinerResult wr =
        sk::steiner_distance(g, sk::VertexSet(g, prof.diameter_witness), engine, limits);
    if (records) {
        json j{{"type", "compute"}, {"n", g.order()}, {"m", g.size()}, {"k", k},
               {"radius", prof.radius}, {"diameter", prof.diameter},
               {"center", prof.center}, {"diameter_witness", prof.diameter_witness},
               {"witness_steiner_points", wr.steiner_points},
               {"witness_tree", edges_json(wr.witness_edges)},
               {"eccentricities", prof.per_vertex}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n " << g.order() << "\nm " << g.size() << "\nk " << k << "\n";
        std::cout << "radius " << prof.radius << "\n";
        std::cout << "diameter " << prof.diameter << "\n";
        std::cout << "center " << join_ints(prof.center) << "\n";
        std::cout << "diameter_witness " << join_ints(prof.diameter_witness) << "\n";
        std::cout << "witness_tree";
        for (auto [a, b] : wr.witness_edges) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
    return 0;
}

// -- classify -------------------------------------------------------------

int run_classify(const InputOptions& in, const std::string& kspec,
                 const std::string& interpretation, bool check, const std::string& format) {
    sk::Graph g = load_graph(in);
    int n = g.order();
    int k = resolve_k(kspec, n);
    sk::Interpretation interp = sk::interpretation_from_name(interpretation);

    sk::ClassificationOutcome outcome;
    if (k == n)
        outcome = sk::classify_n(g);
    else if (k == n - 1)
        outcome = sk::classify_n_minus_1(g);
    else if (k == n - 2)
        outcome = sk::classify_n_minus_2(g);
    else if (k == n - 3)
        outcome = sk::classify_n_minus_3(g, interp);
    else
        throw sk::GraphError("classify supports k in {n, n-1, n-2, n-3}; got k=" +
                             std::to_string(k) + " with n=" + std::to_string(n));

    std::optional<int> oracle;
    if (check) oracle = sk::steiner_diameter(g, k);
    bool match = !oracle.has_value() || *oracle == outcome.predicted;

    json rules = json::array();
    for (sk::RuleId id : outcome.rule_chain) rules.push_back(sk::rule_name(id));

    if (format == "records") {
        json j{{"type", "classify"}, {"n", n}, {"m", g.size()}, {"k", k},
               {"interpretation", sk::interpretation_name(outcome.interpretation)},
               {"predicted", outcome.predicted}, {"rules", rules}};
        if (outcome.witness.has_value()) {
            json roles = json::array();
            for (const auto& [name, v] : outcome.witness->roles)
                roles.push_back(json{{"role", name}, {"vertex", v}});
            j["witness_roles"] = roles;
            j["witness_conditions"] = outcome.witness->conditions;
        }
        if (oracle.has_value()) {
            j["oracle"] = *oracle;
            j["match"] = match;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n " << n << "\nm " << g.size() << "\nk " << k << "\n";
        std::cout << "interpretation " << sk::interpretation_name(outcome.interpretation) << "\n";
        std::cout << "predicted " << outcome.predicted << "\n";
        std::cout << "rules " << rules.dump() << "\n";
        if (outcome.witness.has_value() && !outcome.witness->roles.empty()) {
            std::cout << "witness_roles";
            for (const auto& [name, v] : outcome.witness->roles)
                std::cout << " " << name << "=" << v;
            std::cout << "\n";
        }
        if (oracle.has_value()) {
            std::cout << "oracle " << *oracle << "\n";
            std::cout << "match " << (match ? "true" : "false") << "\n";
        }
    }
    return match ? 0 : 1;
}

// -- audit ----------------------------------------------------------------

struct RandomSpec {
    int n = 0;
    long long p_num = 1, p_den = 2;
    int count = 0;
    std::uint64_t seed = kDefaultSeed;
};

RandomSpec parse_random_spec(const std::string& text) {
    RandomSpec spec;
    bool have_n = false, have_count = false;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw sk::VerifyError("bad --random item: " + item);
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "n") {
            spec.n = std::stoi(value);
            have_n = true;
        } else if (key == "count") {
            spec.count = std::stoi(value);
            have_count = true;
        } else if (key == "seed") {
            spec.seed = std::stoull(value);
        } else if (key == "p") {
            auto slash = value.find('/');
            if (slash != std::string::npos) {
                spec.p_num = std::stoll(value.substr(0, slash));
                spec.p_den = std::stoll(value.substr(slash + 1));
            } else {
                auto dot = value.find('.');
                if (dot == std::string::npos) {
                    spec.p_num = std::stoll(value);
                    spec.p_den = 1;
                } else {
                    std::string digits = value.substr(0, dot) + value.substr(dot + 1);
                    spec.p_num = std::stoll(digits);
                    spec.p_den = 1;
                    for (std::size_t i = dot + 1; i < value.size(); ++i) spec.p_den *= 10;
                }
            }
        } else {
            throw sk::VerifyError("unknown --random key: " + key);
        }
    }
    if (!have_n || !have_count) throw sk::VerifyError("--random needs n= and count=");
    return spec;
}

void print_human_summary(const sk::AuditSummary& s, std::ostream& out) {
    out << "graphs " << s.graphs << " skipped " << s.skipped << " records " << s.records << "\n";
    out << "mismatches literal " << s.mismatch_literal << " amended " << s.mismatch_amended
        << " hard " << s.hard_mismatches << "\n";
    for (const auto& [n, st] : s.per_n)
        out << "  n=" << n << " graphs " << st.graphs << " records " << st.records
            << " mismatch_literal " << st.mismatch_literal << " mismatch_amended "
            << st.mismatch_amended << "\n";
    out << "wall_seconds " << s.wall_seconds << "\n";
}

int run_audit(const std::string& input_path, const std::string& random_spec,
              const std::string& recheck_path, sk::AuditConfig cfg, const std::string& format) {
    if (!recheck_path.empty()) {
        std::ifstream in(recheck_path);
        if (!in) throw sk::VerifyError("cannot open " + recheck_path);
        std::string line;
        long checked = 0, failed = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded() || j.value("type", "") != "record") continue;
            ++checked;
            if (!sk::recheck(line)) {
                ++failed;
                std::cout << "recheck FAIL seq=" << j.value("seq", -1) << " k=" << j.value("k", -1)
                          << "\n";
            }
        }
        std::cout << "recheck " << (checked - failed) << "/" << checked << " ok\n";
        return failed == 0 ? 0 : 1;
    }

    std::istringstream random_stream;
    std::ifstream file_stream;
    std::istream* in = nullptr;
    if (!random_spec.empty()) {
        RandomSpec spec = parse_random_spec(random_spec);
        std::vector<std::string> lines =
            sk::random_graphs(spec.n, spec.p_num, spec.p_den, spec.count, spec.seed);
        std::string blob;
        for (const std::string& l : lines) {
            blob += l;
            blob += "\n";
        }
        random_stream.str(blob);
        in = &random_stream;
        cfg.seed = spec.seed;
    } else if (input_path == "-" || input_path.empty()) {
        in = &std::cin;
    } else {
        file_stream.open(input_path);
        if (!file_stream) throw sk::VerifyError("cannot open " + input_path);
        in = &file_stream;
    }

    if (format == "human") {
        std::ostringstream records;
        sk::AuditSummary summary = sk::audit_stream(*in, records, cfg);
        print_human_summary(summary, std::cout);
        return summary.exit_code();
    }
    sk::AuditSummary summary = sk::audit_stream(*in, std::cout, cfg);
    std::cerr << "audit: " << summary.graphs << " graphs, " << summary.records << " records, "
              << summary.wall_seconds << "s\n";
    return summary.exit_code();
}

// -- profile ----------------------------------------------------------------

int run_profile(const InputOptions& in, const std::string& kspec, const std::string& engine_name,
                int repeat, const sk::EngineLimits& limits) {
    sk::Graph g = load_graph(in);
    int n = g.order();
    std::vector<int> ks;
    if (!kspec.empty()) {
        ks.push_back(resolve_k(kspec, n));
    } else {
        for (int k = 2; k <= n; ++k) ks.push_back(k);
    }
    std::vector<sk::Engine> engines;
    if (engine_name == "both") {
        engines = {sk::Engine::Complement, sk::Engine::TerminalDp};
    } else {
        engines = {engine_from_name(engine_name)};
    }

    std::cout << "n k engine distance mean_ms\n";
    for (int k : ks) {
        if (k < 1 || k > n) throw sk::GraphError("profile: k out of range");
        std::vector<int> terminals(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) terminals[static_cast<std::size_t>(i)] = i;
        sk::VertexSet s(g, terminals);
        std::optional<sk::Distance> previous;
        for (sk::Engine engine : engines) {
            std::string label = engine == sk::Engine::Complement    ? "complement"
                                : engine == sk::Engine::TerminalDp ? "terminal-dp"
                                                                    : "auto";
            try {
                sk::Distance d = sk::Distance::infinite();
                auto t0 = std::chrono::steady_clock::now();
                for (int r = 0; r < std::max(1, repeat); ++r)
                    d = sk::steiner_distance(g, s, engine, limits).distance;
                double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count() /
                            std::max(1, repeat);
                std::cout << n << " " << k << " " << label << " " << d.str() << " " << ms << "\n";
                if (previous.has_value() && !(*previous == d))
                    throw sk::GraphError("engines disagree on d_G(S)");
                previous = d;
            } catch (const sk::GraphError& e) {
                std::cout << n << " " << k << " " << label << " guard \"" << e.what() << "\"\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Steiner distance toolkit and structural-rule audit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Steiner distances, eccentricity profiles, mu_k");
    InputOptions compute_in;
    add_input_options(compute, compute_in);
    std::string compute_k, compute_terminals, compute_engine = "auto", compute_format = "human";
    bool compute_average = false;
    sk::EngineLimits compute_limits;
    compute->add_option("--k", compute_k, "set size: integer or n, n-1, n-2, n-3 (default n-3)");
    compute->add_option("--terminals", compute_terminals, "comma-separated terminal set");
    compute->add_flag("--average", compute_average, "print the average Steiner distance mu_k");
    compute->add_option("--engine", compute_engine, "auto | complement | terminal-dp");
    compute->add_option("--dp-threshold", compute_limits.dp_threshold, "AUTO switch-over point");
    compute->add_option("--complement-cap", compute_limits.complement_cap, "complement guard");
    compute->add_option("--dp-cap", compute_limits.dp_terminal_cap, "terminal-dp guard");
    compute->add_option("--format", compute_format, "human | records");

    // classify
    auto* classify = app.add_subcommand("classify", "structural prediction of sdiam_k");
    InputOptions classify_in;
    add_input_options(classify, classify_in);
    std::string classify_k = "n-3", classify_interp = "amended", classify_format = "human";
    bool classify_check = false;
    classify->add_option("--k", classify_k, "n | n-1 | n-2 | n-3 (or the absolute value)");
    classify->add_option("--interpretation", classify_interp, "literal | amended");
    classify->add_flag("--check", classify_check, "also compute the oracle; exit 1 on mismatch");
    classify->add_option("--format", classify_format, "human | records");

    // audit
    auto* audit = app.add_subcommand("audit", "stream audit: structural rules vs oracle");
    std::string audit_input, audit_random, audit_recheck, audit_k = "n-3",
                audit_gate = "amended", audit_format = "records";
    sk::AuditConfig audit_cfg;
    audit->add_option("--input", audit_input, "graph6 file, or - for stdin");
    audit->add_option("--random", audit_random, "generated stream, e.g. n=9,p=0.4,count=500,seed=7");
    audit->add_option("--recheck", audit_recheck, "re-verify a records file instead of auditing");
    audit->add_option("--k", audit_k, "n | n-1 | n-2 | n-3 | all");
    audit->add_option("--workers", audit_cfg.workers, "worker threads (default 1)");
    audit->add_flag("--strict", audit_cfg.strict, "gate the n-3 class on mismatches too");
    audit->add_option("--interpretation", audit_gate,
                      "which interpretation --strict gates: literal | amended | both");
    audit->add_flag("--expect-exhaustive", audit_cfg.expect_exhaustive,
                    "assert published connected-graph totals per order");
    audit->add_option("--format", audit_format, "records | human");
    audit->add_option("--dp-threshold", audit_cfg.limits.dp_threshold, "AUTO switch-over point");

    // profile
    auto* profile = app.add_subcommand("profile", "engine timing sweep");
    InputOptions profile_in;
    add_input_options(profile, profile_in);
    std::string profile_k, profile_engine = "both";
    int profile_repeat = 3;
    sk::EngineLimits profile_limits;
    profile->add_option("--k", profile_k, "single k (default: sweep 2..n)");
    profile->add_option("--engine", profile_engine, "both | auto | complement | terminal-dp");
    profile->add_option("--repeat", profile_repeat, "timing repetitions per cell");
    profile->add_option("--dp-cap", profile_limits.dp_terminal_cap, "terminal-dp guard");
    profile->add_option("--complement-cap", profile_limits.complement_cap, "complement guard");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(compute_in, compute_k, compute_terminals, compute_average,
                               compute_engine, compute_limits, compute_format);
        if (classify->parsed())
            return run_classify(classify_in, classify_k, classify_interp, classify_check,
                                classify_format);
        if (audit->parsed()) {
            audit_cfg.policy = sk::k_policy_from_name(audit_k);
            if (audit_gate == "literal")
                audit_cfg.gate = sk::StrictGate::Literal;
            else if (audit_gate == "amended")
                audit_cfg.gate = sk::StrictGate::Amended;
            else if (audit_gate == "both")
                audit_cfg.gate = sk::StrictGate::Both;
            else
                throw sk::VerifyError("unknown interpretation gate: " + audit_gate);
            return run_audit(audit_input, audit_random, audit_recheck, audit_cfg, audit_format);
        }
        if (profile->parsed())
            return run_profile(profile_in, profile_k, profile_engine, profile_repeat,
                               profile_limits);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
