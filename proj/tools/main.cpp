// Command-line frontend: compute game chromatic numbers, solve single
// positions, run verification suites, and enumerate forests.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource exhaustion.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamechrom/classifier.hpp"
#include "gamechrom/constructions.hpp"
#include "gamechrom/enumeration.hpp"
#include "gamechrom/solver.hpp"
#include "gamechrom/strategies.hpp"
#include "gamechrom/structure.hpp"
#include "gamechrom/textio.hpp"

using namespace gamechrom;
using Clock = std::chrono::steady_clock;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0, kExitVerifyFail = 1, kExitUsage = 2, kExitResource = 3;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
        return fallback;
    }
}

// ---------------------------------------------------------------- chig ----

int cmd_chig(const std::string& input) {
    auto t0 = Clock::now();
    Position p = load_position(input);
    Classification c = classify(p.forest);
    std::cout << c.value << " (" << name(c.method);
    if (!c.rule.empty()) std::cout << ": " << c.rule;
    std::cout << ")";
    if (c.b_vertex) std::cout << " b-vertex " << *c.b_vertex;
    std::cout << "  [" << seconds_since(t0) << "s]\n";
    return kExitOk;
}

// --------------------------------------------------------------- solve ----

int cmd_solve(const std::string& input, const std::string& rules, int t, int k,
              const std::string& first, int depth, const std::string& cache_path) {
    Position p = load_position(input);

    Ruleset r;
    if (rules == "std") r = Ruleset::standard(t);
    else if (rules == "mcg") r = Ruleset::mcg(t);
    else if (rules == "ecg") r = Ruleset::ecg(t);
    else if (rules == "rcg") r = Ruleset::rcg(t, k > 0 ? k : t);
    else throw CLI::ValidationError("--rules", "unknown ruleset " + rules);

    std::optional<Player> mover;
    if (first == "alice") mover = Player::Alice;
    else if (first == "bob") mover = Player::Bob;
    else if (!first.empty()) throw CLI::ValidationError("--first", "expected alice or bob");

    GameState s = GameState::from_position(std::move(p), r, mover);
    Solver solver;

    if (!cache_path.empty()) {
        std::ifstream in(cache_path);
        if (in) solver.table().load(in, r.hash());
    }

    auto t0 = Clock::now();
    if (depth >= 0) {
        bool certified = solver.bob_wins_within(s, depth);
        std::cout << (certified ? "certified BobWin" : "inconclusive") << " within " << depth
                  << " moves";
    } else {
        Winner w = solver.solve(s);
        std::cout << name(w);
    }
    std::cout << "  nodes " << solver.stats().nodes << ", table " << solver.table().size()
              << " entries (" << solver.table().hits() << " hits, "
              << solver.table().misses() << " misses)  [" << seconds_since(t0) << "s]\n";

    if (!cache_path.empty()) {
        std::ofstream out(cache_path);
        solver.table().save(out, r.hash());
    }
    return kExitOk;
}

// -------------------------------------------------------------- verify ----

struct Instance {
    std::string label;
    std::function<bool(std::string& detail)> run;
};

// Tree counts by order, cross-checked against the forest counts through the
// multiset (Euler) transform so the two streams verify each other.
const std::vector<long long> kTreeCounts = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};

std::vector<long long> forest_counts_from_trees(int max_n) {
    // multiset composition: for each tree shape, any number of copies;
    // one geometric-series convolution per shape
    std::vector<long long> acc(max_n + 1, 0);
    acc[0] = 1;
    for (int size = 1; size <= max_n; ++size)
        for (long long shape = 0; shape < kTreeCounts[size]; ++shape)
            for (int n = size; n <= max_n; ++n) acc[n] += acc[n - size];
    return acc;
}

std::vector<Position> leaf_coloring_starts(const Forest& f) {
    std::vector<Position> out;
    out.push_back(Position::uncolored(f));
    for (Vertex v = 0; v < f.order(); ++v) {
        if (f.degree(v) != 1) continue;
        Position p = Position::uncolored(f);
        p.color[v] = 0;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Instance> suite_two_color(int max_n) {
    std::vector<Instance> out;
    int idx = 0;
    for (const Forest& f : forests_up_to(0, max_n)) {
        out.push_back({"forest-" + std::to_string(idx++), [f](std::string& d) {
                           bool rule = is_chi_g_2(f).first;
                           bool exact = game_chromatic_number(f).value == 2;
                           d = rule == exact ? "agree" : "rule and solver disagree";
                           return rule == exact;
                       }});
    }
    return out;
}

std::vector<Instance> suite_three_color_bound(int max_n) {
    std::vector<Instance> out;
    int idx = 0;
    for (const Forest& f : trees_up_to(1, max_n)) {
        out.push_back({"tree-" + std::to_string(idx++), [f](std::string& d) {
                           ChiG c = game_chromatic_number(f);
                           d = "value " + std::to_string(c.value);
                           return c.value <= 3 && !c.theorem_capped;
                       }});
    }
    return out;
}

std::vector<Instance> suite_small_trunk(int max_n) {
    std::vector<Instance> out;
    int idx = 0;
    for (const Forest& f : trees_up_to(1, max_n))
        for (const Position& p : leaf_coloring_starts(f)) {
            out.push_back({"start-" + std::to_string(idx++), [p](std::string& d) {
                               GameState s = GameState::from_position(p, Ruleset::mcg(3));
                               bool solver_ok = solve(s) == Winner::Alice;
                               bool policy_ok =
                                   verify_policy(alice_small_trunk_3mcg, Player::Alice, s);
                               d = solver_ok ? (policy_ok ? "policy wins" : "policy loses")
                                             : "solver says Bob";
                               return solver_ok && policy_ok;
                           }});
        }
    return out;
}

std::vector<Instance> suite_no_deg3(int max_n) {
    std::vector<Instance> out;
    int idx = 0;
    for (const Forest& f : trees_up_to(1, max_n)) {
        bool deg3 = false;
        for (Vertex v = 0; v < f.order(); ++v) deg3 |= f.degree(v) == 3;
        if (deg3) continue;
        out.push_back({"tree-" + std::to_string(idx++), [f](std::string& d) {
                           int cls = classify_no_deg3(f).value;
                           int exact = game_chromatic_number(f).value;
                           d = "classified " + std::to_string(cls) + ", exact " +
                               std::to_string(exact);
                           return cls == exact;
                       }});
    }
    return out;
}

std::vector<Instance> suite_gadgets_ext(int) {
    std::vector<Instance> out;
    out.push_back({"p5-ext2", [](std::string& d) {
                       bool ok = solve(GameState::initial(path_graph(5), Ruleset::ecg(2))) ==
                                 Winner::Bob;
                       d = ok ? "BobWin" : "not BobWin";
                       return ok;
                   }});
    out.push_back({"p4plus-ext2", [](std::string& d) {
                       bool ok = solve(GameState::initial(p4_plus(), Ruleset::ecg(2))) ==
                                 Winner::Bob;
                       d = ok ? "BobWin" : "not BobWin";
                       return ok;
                   }});
    const std::pair<const char*, std::optional<Fig3Site>> sites[] = {
        {"fig3-base", std::nullopt},
        {"fig3-x1p", Fig3Site::X1Prime},
        {"fig3-x1pp", Fig3Site::X1DoublePrime},
        {"fig3-x2p", Fig3Site::X2Prime},
        {"fig3-x2pp", Fig3Site::X2DoublePrime},
    };
    for (auto [label, site] : sites) {
        out.push_back({label, [site](std::string& d) {
                           GameState s =
                               GameState::from_position(fig3_position(site), Ruleset::ecg(3));
                           bool ok = bob_wins_within(s, 3);
                           d = ok ? "certified in 3" : "inconclusive";
                           return ok;
                       }});
    }
    return out;
}

std::vector<Instance> suite_gadgets_deg3(int) {
    std::vector<Instance> out;
    out.push_back({"double-danger", [](std::string& d) {
                       GameState s = GameState::from_position(deg3_gadget_suite().t1,
                                                              Ruleset::standard(3), Player::Bob);
                       bool ok = bob_wins_within(s, 2);
                       d = ok ? "certified in 2" : "inconclusive";
                       return ok;
                   }});
    out.push_back({"surrounded-p4", [](std::string& d) {
                       GameState s = GameState::from_position(surrounded_p4_trap(),
                                                              Ruleset::standard(3));
                       bool ok = bob_wins_within(s, 2);
                       d = ok ? "certified in 2" : "inconclusive";
                       return ok;
                   }});
    return out;
}

std::vector<Instance> suite_enumeration_counts(int max_n) {
    std::vector<Instance> out;
    int cap = std::min<int>(max_n, static_cast<int>(kTreeCounts.size()) - 1);
    std::vector<long long> forest_ref = forest_counts_from_trees(cap);
    for (int n = 1; n <= cap; ++n) {
        long long want = kTreeCounts[n];
        out.push_back({"trees-" + std::to_string(n), [n, want](std::string& d) {
                           long long got = static_cast<long long>(trees_of_order(n).size());
                           d = std::to_string(got) + " of " + std::to_string(want);
                           return got == want;
                       }});
    }
    for (int n = 0; n <= std::min(cap, 8); ++n) {
        long long want = forest_ref[n];
        out.push_back({"forests-" + std::to_string(n), [n, want](std::string& d) {
                           long long got = static_cast<long long>(forests_of_order(n).size());
                           d = std::to_string(got) + " of " + std::to_string(want);
                           return got == want;
                       }});
    }
    return out;
}

struct SuiteSpec {
    const char* name;
    int default_max_n;
    std::vector<Instance> (*build)(int max_n);
};

const SuiteSpec kSuites[] = {
    {"two-color", 8, suite_two_color},
    {"three-color-bound", 11, suite_three_color_bound},
    {"small-trunk", 7, suite_small_trunk},
    {"no-deg3", 12, suite_no_deg3},
    {"gadgets-ext", 0, suite_gadgets_ext},
    {"gadgets-deg3", 0, suite_gadgets_deg3},
    {"enumeration-counts", 10, suite_enumeration_counts},
};

struct InstanceResult {
    bool ok = false;
    std::string detail;
    double secs = 0;
};

int cmd_verify(const std::string& suite, int max_n, int jobs, const std::string& format) {
    const SuiteSpec* spec = nullptr;
    for (const SuiteSpec& s : kSuites)
        if (suite == s.name) spec = &s;
    if (!spec) throw CLI::ValidationError("suite", "unknown suite " + suite);

    int n = max_n > 0 ? max_n : spec->default_max_n;
    std::vector<Instance> instances = spec->build(n);
    std::vector<InstanceResult> results(instances.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1)) {
            auto t0 = Clock::now();
            results[i].ok = instances[i].run(results[i].detail);
            results[i].secs = seconds_since(t0);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    std::size_t failed = 0;
    for (const InstanceResult& r : results) failed += !r.ok;

    if (format == "json") {
        json doc;
        doc["suite"] = suite;
        doc["max_n"] = n;
        doc["instances"] = json::array();
        for (std::size_t i = 0; i < instances.size(); ++i)
            doc["instances"].push_back({{"label", instances[i].label},
                                        {"ok", results[i].ok},
                                        {"detail", results[i].detail},
                                        {"seconds", results[i].secs}});
        doc["total"] = instances.size();
        doc["failed"] = failed;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "label,ok,detail,seconds\n";
        for (std::size_t i = 0; i < instances.size(); ++i)
            std::cout << instances[i].label << "," << (results[i].ok ? "1" : "0") << ",\""
                      << results[i].detail << "\"," << results[i].secs << "\n";
    } else {
        for (std::size_t i = 0; i < instances.size(); ++i)
            std::cout << (results[i].ok ? "ok   " : "FAIL ") << instances[i].label << "  "
                      << results[i].detail << "\n";
        std::cout << suite << ": " << (instances.size() - failed) << "/" << instances.size()
                  << " passed, " << failed << " failed\n";
    }
    return failed ? kExitVerifyFail : kExitOk;
}

// ----------------------------------------------------------- enumerate ----

int cmd_enumerate(int n, bool forests) {
    std::vector<Forest> graphs = forests ? forests_of_order(n) : trees_of_order(n);
    std::vector<Position> ps;
    ps.reserve(graphs.size());
    for (Forest& f : graphs) ps.push_back(Position::uncolored(std::move(f)));
    write_position_stream(std::cout, ps);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coloring-game workbench for forests"};
    app.require_subcommand(1);

    std::string input, rules = "std", first, cache_path, suite, format = "text";
    int t = 3, k = 0, depth = -1, max_n = 0, n = 1;
    bool forests = false;
    int jobs = env_int("GAMECHROM_JOBS", 1);

    CLI::App* chig = app.add_subcommand("chig", "Game chromatic number of a forest file");
    chig->add_option("input", input, "forest/position file")->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a single position");
    solve_cmd->add_option("input", input, "forest/position file")->required();
    solve_cmd->add_option("--rules", rules, "std|mcg|ecg|rcg")->capture_default_str();
    solve_cmd->add_option("--t", t, "palette size")->capture_default_str();
    solve_cmd->add_option("--k", k, "degree threshold for rcg (default: t)");
    solve_cmd->add_option("--first", first, "alice|bob (default: ruleset's first mover)");
    solve_cmd->add_option("--depth", depth, "certify a Bob win within D of his moves");
    solve_cmd->add_option("--cache", cache_path, "verdict cache file (loaded and updated)");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite_names;
    for (const SuiteSpec& s : kSuites) suite_names += std::string(suite_names.empty() ? "" : "|") + s.name;
    verify->add_option("suite", suite, suite_names)->required();
    verify->add_option("--max-n", max_n, "largest order (0 = suite default)");
    verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify->add_option("--format", format, "text|csv|json")->capture_default_str();

    CLI::App* enumerate = app.add_subcommand("enumerate", "Stream trees or forests of order n");
    enumerate->add_option("--n", n, "number of vertices")->required();
    enumerate->add_flag("--forests", forests, "forests instead of trees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (chig->parsed()) return cmd_chig(input);
        if (solve_cmd->parsed()) return cmd_solve(input, rules, t, k, first, depth, cache_path);
        if (verify->parsed()) return cmd_verify(suite, max_n, std::max(1, jobs), format);
        if (enumerate->parsed()) return cmd_enumerate(n, forests);
    } catch (const MemoCapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
