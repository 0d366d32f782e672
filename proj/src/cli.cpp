#include "apcover/cli.hpp"

#include "apcover/below_guarantee.hpp"
#include "apcover/cap.hpp"
#include "apcover/checks.hpp"
#include "apcover/errors.hpp"
#include "apcover/gen.hpp"
#include "apcover/io.hpp"
#include "apcover/oracle.hpp"
#include "apcover/xcap.hpp"
#include "apcover/zp.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace apcover {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json witness_json(const std::vector<Ap>& aps) {
    json arr = json::array();
    for (const Ap& ap : aps) {
        arr.push_back({ap.first().str(), ap.diff().str(), ap.length()});
    }
    return arr;
}

json zp_witness_json(const std::vector<ZpAp>& aps) {
    json arr = json::array();
    for (const ZpAp& ap : aps) {
        arr.push_back({ap.start.str(), ap.diff.str(), ap.len});
    }
    return arr;
}

int env_threads() {
    if (const char* env = std::getenv("AP_COVER_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct SolveArgs {
    std::string problem;
    std::string file;
    std::optional<int> k;
    bool minimize = false;
    bool no_witness = false;
    std::uint64_t seed = 0;
    std::string mode = "exhaustive";
    std::uint64_t trials = 0;
    int threads = 0;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    json report;
    report["problem"] = args.problem;
    report["mode"] = args.minimize ? "minimize" : "decide";

    bool yes = false;
    if (args.problem == "cap" || args.problem == "xcap") {
        Instance X = parse_instance_file(args.file);
        int k_used = 0;
        std::optional<Solution> witness;
        std::uint64_t nodes = 0;
        if (args.problem == "cap") {
            if (args.minimize) {
                auto [k_min, res] = cover_minimize(X);
                k_used = k_min;
                yes = true;
                witness = std::move(res.witness);
                nodes = res.nodes;
            } else {
                CapResult res = cover_decide(X, *args.k);
                k_used = *args.k;
                yes = res.yes;
                witness = std::move(res.witness);
                nodes = res.nodes;
            }
        } else {
            if (args.minimize) {
                auto [k_min, res] = exact_cover_minimize(X);
                k_used = k_min;
                yes = true;
                witness = std::move(res.witness);
                nodes = res.nodes;
            } else {
                XcapResult res = exact_cover_decide(X, *args.k);
                k_used = *args.k;
                yes = res.yes;
                witness = std::move(res.witness);
                nodes = res.nodes;
            }
        }
        report["k"] = k_used;
        report["decision"] = yes;
        if (yes && witness && !args.no_witness) report["witness"] = witness_json(witness->aps);
        report["nodes"] = nodes;
    } else if (args.problem == "zp-cap" || args.problem == "zp-xcap") {
        ZpInstance inst = parse_zp_instance_file(args.file);
        const bool exact = args.problem == "zp-xcap";
        auto res = exact ? zp_exact_cover_minimize(inst) : zp_cover_minimize(inst);
        if (!res) {
            err << "instance has no cover by modular APs\n";
            return exit_no;
        }
        int k_used = args.minimize ? res->k_min : *args.k;
        yes = args.minimize || res->k_min <= *args.k;
        report["k"] = k_used;
        report["decision"] = yes;
        if (yes && !args.no_witness) report["witness"] = zp_witness_json(res->witness);
        report["nodes"] = zp_enumerate_aps(inst).size();
    } else {
        // Below-guarantee problems.
        TuscOptions opts;
        opts.mode = args.mode == "randomized" ? ColoringMode::randomized : ColoringMode::exhaustive;
        opts.trials = args.trials;
        opts.seed = args.seed;
        opts.threads = args.threads > 0 ? args.threads : env_threads();
        // With worker threads the early exit makes the examined-coloring count
        // racy; keep reports byte-stable by only counting serial runs.
        std::uint64_t colorings = 0;
        if (opts.threads == 1) opts.colorings_out = &colorings;
        int k_used = 0;
        if (args.problem == "tusc") {
            TuscFile file = parse_tusc_file(args.file);
            k_used = args.k ? *args.k : file.k;
            yes = tusc_below_decide(file.instance, k_used, opts);
        } else {  // cap-below
            Instance X = parse_instance_file(args.file);
            k_used = *args.k;
            yes = cap_below_decide(X, k_used, opts);
        }
        report["k"] = k_used;
        report["decision"] = yes;
        report["nodes"] = colorings;
    }
    report["elapsed_ms"] = ms_since(start);
    out << report.dump(2) << '\n';
    return yes ? exit_yes : exit_no;
}

int cmd_verify(const std::string& problem, const std::string& instance_path,
               const std::string& solution_path, std::ostream& out, std::ostream& err) {
    Instance X = parse_instance_file(instance_path);
    Solution sol;
    sol.kind = problem == "xcap" ? CoverKind::exact_cover : CoverKind::cover;
    sol.aps = parse_solution_file(solution_path);
    VerifyResult res = verify_solution(X, sol);
    if (res.ok) {
        out << "valid\n";
        return exit_yes;
    }
    err << res.diagnostic << '\n';
    return exit_no;
}

int cmd_proptest(const std::string& suite, std::uint64_t seed, std::uint64_t budget,
                 std::ostream& out) {
    auto results = run_suites(suite, seed, budget);
    bool all_pass = true;
    for (const SuiteResult& r : results) {
        out << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (checked=" << r.checked
            << " violations=" << r.violations << ")\n";
        if (!r.pass) {
            all_pass = false;
            out << "counterexample: " << r.counterexample << '\n';
        }
    }
    return all_pass ? exit_yes : exit_no;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covering integer sets by arithmetic progressions"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide or minimize a covering problem");
    solve->add_option("problem", solve_args.problem, "Problem kind")
        ->required()
        ->check(CLI::IsMember({"cap", "xcap", "zp-cap", "zp-xcap", "tusc", "cap-below"}));
    solve->add_option("file", solve_args.file, "Input file")->required();
    int k_value = -1;
    auto* k_opt = solve->add_option("--k", k_value, "Budget for the decision problem");
    solve->add_flag("--minimize", solve_args.minimize, "Find the smallest feasible k");
    solve->add_flag("--no-witness", solve_args.no_witness, "Suppress the witness in the report");
    solve->add_option("--seed", solve_args.seed, "Seed for randomized coloring");
    solve->add_option("--mode", solve_args.mode, "Coloring mode for below-guarantee problems")
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    solve->add_option("--trials", solve_args.trials, "Randomized coloring trials (0 = auto)");
    solve->add_option("--threads", solve_args.threads, "Worker threads for coloring loops");

    std::string verify_problem, verify_instance, verify_solution_path;
    auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
    verify->add_option("problem", verify_problem, "Problem kind")
        ->required()
        ->check(CLI::IsMember({"cap", "xcap"}));
    verify->add_option("instance", verify_instance, "Instance file")->required();
    verify->add_option("solution", verify_solution_path, "Solution file")->required();

    std::string gen_kind;
    int gen_k = 2, gen_len = 5, gen_n = 8;
    std::string gen_max_value = "1000", gen_lo = "0", gen_hi = "100";
    std::uint64_t gen_seed = 0;
    bool gen_disjoint = false;
    auto* gen = app.add_subcommand("gen", "Generate an instance file on stdout");
    gen->add_option("kind", gen_kind, "Generator kind")
        ->required()
        ->check(CLI::IsMember({"union-of-aps", "no3ap", "random", "powers"}));
    gen->add_option("--k", gen_k, "Number of planted APs");
    gen->add_option("--len", gen_len, "Length of each planted AP");
    gen->add_option("--n", gen_n, "Number of elements");
    gen->add_option("--max-value", gen_max_value, "Value range bound");
    gen->add_option("--lo", gen_lo, "Smallest value (random)");
    gen->add_option("--hi", gen_hi, "Largest value (random)");
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_flag("--disjoint", gen_disjoint, "Plant pairwise-disjoint APs");

    std::string reduce_file;
    auto* reduce = app.add_subcommand("reduce-zp", "Project an instance modulo a suitable prime");
    reduce->add_option("file", reduce_file, "Instance file")->required();

    std::string prop_suite = "all";
    std::uint64_t prop_seed = 0, prop_budget = 200;
    auto* prop = app.add_subcommand("proptest", "Run the property suites");
    prop->add_option("suite", prop_suite, "Suite name")
        ->check(CLI::IsMember({"all", "ap-core", "cap", "xcap", "zp", "tusc", "theorems"}));
    prop->add_option("--seed", prop_seed, "Suite seed");
    prop->add_option("--budget", prop_budget, "Iteration budget");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_yes;
        }
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (solve->parsed()) {
            if (k_opt->count() > 0) solve_args.k = k_value;
            const bool needs_k = !solve_args.minimize && solve_args.problem != "tusc";
            if (solve_args.minimize &&
                (solve_args.problem == "tusc" || solve_args.problem == "cap-below")) {
                err << "--minimize does not apply to below-guarantee problems\n";
                return exit_usage;
            }
            if (needs_k && !solve_args.k) {
                err << "--k is required unless --minimize is given\n";
                return exit_usage;
            }
            if (solve_args.k && *solve_args.k < 0) {
                err << "--k must be >= 0\n";
                return exit_usage;
            }
            return cmd_solve(solve_args, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_problem, verify_instance, verify_solution_path, out, err);
        }
        if (gen->parsed()) {
            if (gen_kind == "union-of-aps") {
                auto [X, planted] = gen_union_of_aps(gen_k, gen_len, Integer(gen_max_value),
                                                     gen_seed, gen_disjoint);
                // Planted property: each AP must sit inside the emitted set.
                Solution plant{gen_disjoint ? CoverKind::exact_cover : CoverKind::cover, planted};
                if (!verify_solution(X, plant).ok) {
                    throw std::logic_error("gen union-of-aps: plant failed self-check");
                }
                print_instance(out, X);
            } else if (gen_kind == "no3ap") {
                print_instance(out, gen_no3ap(gen_n));
            } else if (gen_kind == "random") {
                print_instance(out, gen_random(gen_n, Integer(gen_lo), Integer(gen_hi), gen_seed));
            } else {
                print_instance(out, gen_powers(gen_n));
            }
            return exit_yes;
        }
        if (reduce->parsed()) {
            Instance X = parse_instance_file(reduce_file);
            ReduceStats stats;
            auto [p, inst] = reduce_mod_p(X, &stats);
            print_zp_instance(out, inst);
            err << "# suitable prime " << p << " found after testing " << stats.primes_tested
                << " primes against " << stats.pair_values << " pair and " << stats.triple_values
                << " triple values\n";
            return exit_yes;
        }
        if (prop->parsed()) {
            return cmd_proptest(prop_suite, prop_seed, prop_budget, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return exit_capacity;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_usage;
    }
    err << "no subcommand given\n";
    return exit_usage;
}

}  // namespace apcover
