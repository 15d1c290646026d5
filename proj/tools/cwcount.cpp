// cwcount: count matchings, path matchings, and related objects in graphs
// described by labeled construction terms (.cwe files).
//
// Subcommands:
//   count   evaluate one counter on one term and print a JSON report
//   check   compare the table engines against brute-force enumeration
//   gen     write generated terms for standard graph families
//   bench   time an engine over a family sweep

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwcount/big_count.hpp"
#include "cwcount/expression.hpp"
#include "cwcount/expression_io.hpp"
#include "cwcount/generators.hpp"
#include "cwcount/labeled_graph.hpp"
#include "cwcount/matching_dp.hpp"
#include "cwcount/oracle.hpp"
#include "cwcount/path_dp.hpp"
#include "cwcount/tables.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cwcount;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const std::vector<std::string> kObjects = {
    "matchings",
    "maximal-matchings",
    "perfect-matchings",
    "min-maximal-matchings",
    "matching-covers",
    "path-matchings",
    "paths",
};

bool known_object(const std::string& name) {
    for (const auto& o : kObjects)
        if (o == name) return true;
    return false;
}

// Oracle size caps, overridable through CWCOUNT_ORACLE_MAX.
struct OracleCaps {
    int matching = kOracleMatchingCap;
    int path = kOraclePathCap;
};

OracleCaps caps_from_env() {
    OracleCaps caps;
    if (const char* raw = std::getenv("CWCOUNT_ORACLE_MAX")) {
        try {
            int v = std::stoi(raw);
            if (v < 1) throw std::invalid_argument("non-positive");
            caps.matching = v;
            caps.path = v;
        } catch (const std::exception&) {
            throw std::runtime_error(
                "CWCOUNT_ORACLE_MAX must be a positive integer, got \"" + std::string(raw) + "\"");
        }
    }
    return caps;
}

// ---- term loading -----------------------------------------------------------

struct LoadedTerm {
    ExprPtr expr;
    int width = 0;
    bool dropped_null_eta = false;
};

// Parses a .cwe file and enforces irredundancy; with allow_null_eta,
// fully null edge operations are removed first.
LoadedTerm load_term(const std::string& path, bool allow_null_eta) {
    ParseResult parsed = load_expression_file(path);
    LoadedTerm term;
    term.expr = parsed.expr;
    term.width = parsed.width;

    auto violations = validate_irredundant(term.expr);
    if (!violations.empty()) {
        if (!allow_null_eta) {
            const auto& v = violations.front();
            throw std::runtime_error(
                path + ": term is not irredundant: edge operation at preorder " +
                std::to_string(v.node_preorder) + " over labels (" +
                std::to_string(v.label_a) + "," + std::to_string(v.label_b) +
                ") re-adds " + std::to_string(v.existing_pairs) + " of " +
                std::to_string(v.total_pairs) +
                " cross pairs (rerun with --allow-null-eta to drop fully null operations)");
        }
        term.expr = drop_null_edge_ops(term.expr);
        term.dropped_null_eta = true;
        auto leftover = validate_irredundant(term.expr);
        if (!leftover.empty())
            throw std::runtime_error(path + ": term is not irredundant even after dropping null edge operations");
    }
    return term;
}

// ---- count ------------------------------------------------------------------

struct CountOptions {
    std::string object;
    std::string input;
    bool by_size = false;
    bool allow_null_eta = false;
    bool json = false;
};

ordered_json size_map_json(const std::map<int, BigCount>& by_size) {
    ordered_json out = ordered_json::object();
    for (const auto& [size, cnt] : by_size)
        out[std::to_string(size)] = to_decimal(cnt);
    return out;
}

BigCount size_map_total(const std::map<int, BigCount>& by_size) {
    BigCount total = 0;
    for (const auto& [size, cnt] : by_size) total += cnt;
    return total;
}

int run_count(const CountOptions& opt) {
    LoadedTerm term = load_term(opt.input, opt.allow_null_eta);
    const int n = term.expr->leaf_count();

    ordered_json report;
    report["object"] = opt.object;
    report["n"] = n;
    report["width"] = term.width;

    auto t0 = Clock::now();
    ordered_json counts = ordered_json::object();

    if (opt.object == "matchings") {
        auto by_size = count_matchings(term.expr, term.width);
        report["count"] = to_decimal(size_map_total(by_size));
        counts = opt.by_size ? size_map_json(by_size)
                             : ordered_json{{"total", to_decimal(size_map_total(by_size))}};
    } else if (opt.object == "maximal-matchings") {
        auto by_size = count_maximal_matchings(term.expr, term.width);
        report["count"] = to_decimal(size_map_total(by_size));
        counts = opt.by_size ? size_map_json(by_size)
                             : ordered_json{{"total", to_decimal(size_map_total(by_size))}};
    } else if (opt.object == "perfect-matchings") {
        BigCount c = count_perfect_matchings(term.expr, term.width);
        report["count"] = to_decimal(c);
        counts["total"] = to_decimal(c);
    } else if (opt.object == "min-maximal-matchings") {
        MinMaximal mm = count_min_maximal_matchings(term.expr, term.width);
        report["count"] = to_decimal(mm.count);
        report["size"] = mm.size;
        counts[std::to_string(mm.size)] = to_decimal(mm.count);
    } else if (opt.object == "matching-covers") {
        MCNodeResult root = run_mc(term.expr, term.width);
        BigCount mass = table_mass(root.table);
        report["count"] = to_decimal(mass);
        counts["total"] = to_decimal(mass);
    } else if (opt.object == "path-matchings") {
        PathMatchingTotals totals = count_path_matchings(term.expr, term.width);
        report["count"] = to_decimal(totals.including_empty);
        counts["including_empty"] = to_decimal(totals.including_empty);
        counts["excluding_empty"] = to_decimal(totals.excluding_empty);
    } else if (opt.object == "paths") {
        BigCount c = count_paths(term.expr, term.width);
        report["count"] = to_decimal(c);
        counts["total"] = to_decimal(c);
    } else {
        throw std::runtime_error("unknown object \"" + opt.object + "\"");
    }

    report["counts"] = counts;
    report["elapsed_ms"] = elapsed_ms(t0);
    report["flags"] = ordered_json{{"by_size", opt.by_size},
                                   {"allow_null_eta", opt.allow_null_eta},
                                   {"json", opt.json}};
    std::cout << report.dump() << "\n";
    return 0;
}

// ---- check ------------------------------------------------------------------

struct CheckOptions {
    std::string object = "all";
    std::string input;
    std::vector<int> random_params;  // n, l, count
    std::uint64_t seed = 0;
    int jobs = 1;
};

std::string describe(const MCKey& key) { return key.to_string(); }
std::string describe(const LabelVector& key) { return key.to_string(); }
std::string describe(const PairVector& key) { return key.to_string(); }

template <class Table>
std::optional<std::string> diff_tables(const char* what, const Table& engine, const Table& oracle) {
    auto key = first_difference(engine, oracle);
    if (!key) return std::nullopt;
    return std::string(what) + " mismatch at " + describe(*key) + ": engine " +
           to_decimal(lookup(engine, *key)) + ", oracle " + to_decimal(lookup(oracle, *key));
}

std::optional<std::string> diff_size_maps(const char* what, const std::map<int, BigCount>& engine,
                                          const std::map<int, BigCount>& oracle) {
    std::set<int> sizes;
    for (const auto& [s, c] : engine) sizes.insert(s);
    for (const auto& [s, c] : oracle) sizes.insert(s);
    for (int s : sizes) {
        auto value = [s](const std::map<int, BigCount>& m) {
            auto it = m.find(s);
            return it == m.end() ? BigCount(0) : it->second;
        };
        BigCount e = value(engine), o = value(oracle);
        if (e != o)
            return std::string(what) + " mismatch at size " + std::to_string(s) + ": engine " +
                   to_decimal(e) + ", oracle " + to_decimal(o);
    }
    return std::nullopt;
}

std::optional<std::string> diff_scalar(const char* what, const BigCount& engine, const BigCount& oracle) {
    if (engine == oracle) return std::nullopt;
    return std::string(what) + " mismatch: engine " + to_decimal(engine) + ", oracle " + to_decimal(oracle);
}

bool object_requested(const CheckOptions& opt, const char* name) {
    return opt.object == "all" || opt.object == name;
}

// Runs every requested engine/oracle pair on one term; returns the first
// disagreement, or nullopt when all requested objects agree.
std::optional<std::string> check_term(const CheckOptions& opt, const ExprPtr& expr, int width,
                                      const OracleCaps& caps) {
    LabeledGraph g = evaluate(expr, width);

    if (object_requested(opt, "matchings")) {
        MatchedTable engine = run_matchings(expr, width);
        MatchedTable oracle = enumerate_matchings(g, caps.matching);
        if (auto d = diff_tables("matchings", engine, oracle)) return d;
    }
    if (object_requested(opt, "matching-covers")) {
        MCTable engine = run_mc(expr, width).table;
        MCTable oracle = enumerate_mc(g, caps.matching);
        if (auto d = diff_tables("matching-covers", engine, oracle)) return d;
    }
    if (object_requested(opt, "maximal-matchings")) {
        auto engine = count_maximal_matchings(expr, width);
        auto oracle = enumerate_maximal_matchings(g, caps.matching);
        if (auto d = diff_size_maps("maximal-matchings", engine, oracle)) return d;
    }
    if (object_requested(opt, "perfect-matchings")) {
        BigCount engine = count_perfect_matchings(expr, width);
        BigCount oracle = 0;
        for (const auto& [key, cnt] : enumerate_matchings(g, caps.matching))
            if (key.sum() == g.vertex_count()) oracle += cnt;
        if (auto d = diff_scalar("perfect-matchings", engine, oracle)) return d;
    }
    if (object_requested(opt, "min-maximal-matchings")) {
        MinMaximal engine = count_min_maximal_matchings(expr, width);
        auto oracle_map = enumerate_maximal_matchings(g, caps.matching);
        auto it = oracle_map.begin();
        if (it == oracle_map.end()) return std::string("min-maximal-matchings: oracle found no maximal matching");
        if (engine.size != it->first || engine.count != it->second)
            return "min-maximal-matchings mismatch: engine (" + std::to_string(engine.size) + ", " +
                   to_decimal(engine.count) + "), oracle (" + std::to_string(it->first) + ", " +
                   to_decimal(it->second) + ")";
    }
    if (object_requested(opt, "path-matchings")) {
        PMTable engine = run_pm(expr, width).table;
        PMTable oracle = enumerate_pm(g, caps.path);
        if (auto d = diff_tables("path-matchings", engine, oracle)) return d;
    }
    if (object_requested(opt, "paths")) {
        BigCount engine = count_paths(expr, width);
        BigCount oracle = enumerate_paths(g, caps.path);
        if (auto d = diff_scalar("paths", engine, oracle)) return d;
    }
    return std::nullopt;
}

int run_check(const CheckOptions& opt) {
    if (opt.object != "all" && !known_object(opt.object))
        throw std::runtime_error("unknown object \"" + opt.object + "\"");
    if (opt.input.empty() == opt.random_params.empty())
        throw std::runtime_error("check needs exactly one of --input or --random");
    OracleCaps caps = caps_from_env();

    if (!opt.input.empty()) {
        LoadedTerm term = load_term(opt.input, false);
        if (auto failure = check_term(opt, term.expr, term.width, caps)) {
            std::cerr << opt.input << ": " << *failure << "\n";
            return 1;
        }
        std::cout << "checked 1 term: engines and oracle agree\n";
        return 0;
    }

    const int max_n = opt.random_params[0];
    const int max_width = opt.random_params[1];
    const int count = opt.random_params[2];
    if (max_n < 1 || max_width < 1 || count < 1)
        throw std::runtime_error("check --random arguments must be positive");

    std::atomic<int> next{0};
    std::mutex failure_mutex;
    std::vector<std::string> failures;

    auto worker = [&]() {
        for (int t = next.fetch_add(1); t < count; t = next.fetch_add(1)) {
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failures.empty()) return;
            }
            CorpusInstance inst = random_corpus_instance(opt.seed + static_cast<std::uint64_t>(t),
                                                         max_n, max_width);
            std::optional<std::string> failure;
            try {
                failure = check_term(opt, inst.expr, inst.width, caps);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            if (failure) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failures.push_back("seed " + std::to_string(inst.seed) + " (n=" +
                                   std::to_string(inst.n) + ", width=" + std::to_string(inst.width) +
                                   "): " + *failure);
            }
        }
    };

    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    if (!failures.empty()) {
        for (const auto& f : failures) std::cerr << f << "\n";
        return 1;
    }
    std::cout << "checked " << count << " random terms (n<=" << max_n << ", width<=" << max_width
              << ", seeds " << opt.seed << ".." << (opt.seed + static_cast<std::uint64_t>(count) - 1)
              << "): engines and oracle agree\n";
    return 0;
}

// ---- gen --------------------------------------------------------------------

struct GenOptions {
    std::string family;
    std::vector<int> params;
    std::string out;
    std::uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
    auto need = [&](size_t k, const char* usage) {
        if (opt.params.size() != k)
            throw std::runtime_error("gen " + opt.family + " expects parameters: " + usage);
        for (int p : opt.params)
            if (p < 1) throw std::runtime_error("gen parameters must be positive");
    };

    ExprPtr expr;
    int width = 0;
    if (opt.family == "path") {
        need(1, "<n>");
        expr = gen_path(opt.params[0]);
    } else if (opt.family == "clique") {
        need(1, "<n>");
        expr = gen_clique(opt.params[0]);
    } else if (opt.family == "complete-bipartite") {
        need(2, "<a> <b>");
        expr = gen_complete_bipartite(opt.params[0], opt.params[1]);
    } else if (opt.family == "cograph") {
        need(1, "<n>");
        expr = gen_cograph(opt.params[0], opt.seed);
    } else if (opt.family == "random") {
        need(2, "<n> <width>");
        expr = gen_random(opt.params[0], opt.params[1], opt.seed);
        width = opt.params[1];
    } else {
        throw std::runtime_error("unknown family \"" + opt.family +
                                 "\" (families: path, clique, complete-bipartite, cograph, random)");
    }
    width = std::max(width, expr->max_label());

    std::ofstream out(opt.out);
    if (!out) throw std::runtime_error("cannot open " + opt.out + " for writing");
    out << ";width " << width << "\n" << serialize_expression(expr) << "\n";
    if (!out) throw std::runtime_error("failed writing " + opt.out);
    std::cout << "wrote " << opt.out << " (n=" << expr->leaf_count() << ", width=" << width << ")\n";
    return 0;
}

// ---- bench ------------------------------------------------------------------

struct BenchOptions {
    std::string object;
    std::string family;
    std::string range;
    int width = 2;
    std::uint64_t seed = 0;
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        if (a < 1 || b < a) throw std::invalid_argument("bad range");
        return {a, b};
    } catch (const std::exception&) {
        throw std::runtime_error("--n expects <a>..<b> with 1 <= a <= b, got \"" + text + "\"");
    }
}

int run_bench(const BenchOptions& opt) {
    auto [lo, hi] = parse_range(opt.range);

    auto build = [&](int n) -> ExprPtr {
        if (opt.family == "path") return gen_path(n);
        if (opt.family == "clique") return gen_clique(n);
        if (opt.family == "complete-bipartite") return gen_complete_bipartite(n / 2, n - n / 2);
        if (opt.family == "cograph") return gen_cograph(n, opt.seed + static_cast<std::uint64_t>(n));
        if (opt.family == "random") return gen_random(n, opt.width, opt.seed + static_cast<std::uint64_t>(n));
        throw std::runtime_error("unknown family \"" + opt.family + "\"");
    };

    std::printf("%-6s %-12s %-14s %s\n", "n", "elapsed_ms", "table_states", "total");
    for (int n = lo; n <= hi; ++n) {
        ExprPtr expr = build(n);
        int width = std::max(opt.family == "random" ? opt.width : 0, expr->max_label());
        auto t0 = Clock::now();
        size_t states = 0;
        BigCount total = 0;
        if (opt.object == "matching-covers" || opt.object == "maximal-matchings" ||
            opt.object == "perfect-matchings" || opt.object == "min-maximal-matchings") {
            MCNodeResult r = run_mc(expr, width);
            states = r.table.size();
            total = table_mass(r.table);
        } else if (opt.object == "path-matchings" || opt.object == "paths") {
            PMNodeResult r = run_pm(expr, width);
            states = r.table.size();
            total = table_mass(r.table);
        } else if (opt.object == "matchings") {
            MatchedTable t = run_matchings(expr, width);
            states = t.size();
            total = table_mass(t);
        } else {
            throw std::runtime_error("unknown object \"" + opt.object + "\"");
        }
        double ms = elapsed_ms(t0);
        std::printf("%-6d %-12.2f %-14zu %s\n", n, ms, states, to_decimal(total).c_str());
        std::fflush(stdout);
    }
    return 0;
}

}  // namespace

// ---- main -------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"count matchings, path matchings, and related objects in graphs given as labeled construction terms"};
    app.require_subcommand(1);

    CountOptions count_opt;
    CLI::App* count = app.add_subcommand("count", "evaluate one counter on one .cwe term");
    count->add_option("--object", count_opt.object, "what to count: " + CLI::detail::join(kObjects))
        ->required();
    count->add_option("--input", count_opt.input, "path to a .cwe file")->required();
    count->add_flag("--by-size", count_opt.by_size, "report a size-indexed map where applicable");
    count->add_flag("--allow-null-eta", count_opt.allow_null_eta,
                    "drop edge operations that add no new edge instead of failing");
    count->add_flag("--json", count_opt.json, "emit the JSON report (always on; kept for scripts)");

    CheckOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "compare table engines against brute-force enumeration");
    check->add_option("--object", check_opt.object, "object to check, or \"all\"");
    auto* check_input = check->add_option("--input", check_opt.input, "check one .cwe file");
    check->add_option("--random", check_opt.random_params,
                      "check random irredundant terms: <max-n> <max-width> <count>")
        ->expected(3)
        ->excludes(check_input);
    check->add_option("--seed", check_opt.seed, "base seed for --random (default 0)");
    check->add_option("--jobs", check_opt.jobs, "worker threads for --random (default 1)");

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "write a generated .cwe term");
    gen->add_option("family", gen_opt.family,
                    "path | clique | complete-bipartite | cograph | random")
        ->required();
    gen->add_option("params", gen_opt.params, "family parameters (see --help)");
    gen->add_option("--out", gen_opt.out, "output file")->required();
    gen->add_option("--seed", gen_opt.seed, "seed for randomized families (default 0)");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "time an engine over a family sweep");
    bench->add_option("--object", bench_opt.object, "engine to time")->required();
    bench->add_option("--family", bench_opt.family,
                      "path | clique | complete-bipartite | cograph | random")
        ->required();
    bench->add_option("--n", bench_opt.range, "size range <a>..<b>")->required();
    bench->add_option("--width", bench_opt.width, "label budget for random family (default 2)");
    bench->add_option("--seed", bench_opt.seed, "seed for randomized families (default 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*count) return run_count(count_opt);
        if (*check) return run_check(check_opt);
        if (*gen) return run_gen(gen_opt);
        if (*bench) return run_bench(bench_opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
