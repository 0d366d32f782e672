#include "apcover/checks.hpp"

#include "apcover/ap.hpp"
#include "apcover/cap.hpp"
#include "apcover/gen.hpp"
#include "apcover/oracle.hpp"
#include "apcover/set_cover.hpp"
#include "apcover/xcap.hpp"
#include "apcover/zp.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace apcover {

void SuiteResult::merge(const SuiteResult& other) {
    checked += other.checked;
    violations += other.violations;
    if (!other.pass && pass) {
        pass = false;
        counterexample = other.counterexample;
    }
}

std::string instance_to_line(const Instance& X) {
    std::ostringstream os;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (i) os << ' ';
        os << X[i];
    }
    return os.str();
}

std::string shrink_instance(Instance X, const std::function<bool(const Instance&)>& still_fails) {
    bool shrunk = true;
    while (shrunk && X.size() > 1) {
        shrunk = false;
        for (std::size_t drop = 0; drop < X.size(); ++drop) {
            std::vector<Integer> fewer;
            for (std::size_t i = 0; i < X.size(); ++i) {
                if (i != drop) fewer.push_back(X[i]);
            }
            Instance candidate(std::move(fewer));
            bool fails = false;
            try {
                fails = still_fails(candidate);
            } catch (...) {
                fails = false;
            }
            if (fails) {
                X = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return instance_to_line(X);
}

Instance random_instance(std::mt19937_64& rng, int max_n, std::int64_t max_value) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    std::uniform_int_distribution<std::int64_t> v_dist(0, max_value);
    const int n = n_dist(rng);
    std::set<Integer> values;
    while (static_cast<int>(values.size()) < n) values.insert(Integer(v_dist(rng)));
    return Instance(std::vector<Integer>(values.begin(), values.end()));
}

namespace {

// Estimated coloring work for one below-guarantee decision, covering both
// modes: per (k, s2), max(S(|outside|, h), e^h * ln(1000)) colorings times
// 2^(g+h) mask relaxations each.
double coloring_work_estimate(const TuscInstance& inst) {
    double total = 0.0;
    for (int k = 1; k <= 3; ++k) {
        GreedyOutcome greedy = greedy_phase(inst, k);
        if (greedy.early_yes) continue;
        const int g = static_cast<int>(greedy.covered.count());
        if (g == 0) continue;
        const int outside = inst.universe - g;
        const long long budget = (inst.universe + inst.t - 1) / inst.t - k;
        for (int s2 = 1; s2 <= g && s2 <= budget; ++s2) {
            const long long h = static_cast<long long>(inst.universe) - g -
                                (budget - s2) * static_cast<long long>(inst.t);
            if (h <= 0 || h > outside) continue;
            // Stirling numbers via the simple recurrence, small sizes only.
            std::vector<double> row(static_cast<std::size_t>(h) + 1, 0.0);
            row[0] = 1.0;
            for (int i = 1; i <= outside; ++i) {
                for (int j = std::min<long long>(i, h); j >= 1; --j) {
                    row[j] = j * row[j] + row[j - 1];
                }
                row[0] = 0.0;
            }
            const double colorings = std::max(row[static_cast<std::size_t>(h)],
                                              std::exp(static_cast<double>(h)) * 6.91);
            total += colorings * std::pow(2.0, g + static_cast<double>(h));
        }
    }
    return total;
}

}  // namespace

TuscInstance random_tusc_instance(std::mt19937_64& rng, int max_n, int max_sets, double max_work) {
    while (true) {
        TuscInstance inst;
        inst.t = 2;
        inst.universe = std::uniform_int_distribution<int>(4, max_n)(rng);
        const int sets = std::uniform_int_distribution<int>(0, max_sets)(rng);
        for (int s = 0; s < sets; ++s) {
            boost::dynamic_bitset<> bits(inst.universe);
            const int size = std::uniform_int_distribution<int>(
                2, std::min(inst.universe, 8))(rng);
            while (static_cast<int>(bits.count()) < size) {
                bits.set(std::uniform_int_distribution<int>(0, inst.universe - 1)(rng));
            }
            inst.explicit_sets.push_back(std::move(bits));
        }
        if (coloring_work_estimate(inst) <= max_work) return inst;
    }
}

namespace {

Ap random_ap(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, int max_len) {
    std::uniform_int_distribution<std::int64_t> v_dist(lo, hi);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<std::int64_t> d_dist(1, 10);
    int len = len_dist(rng);
    if (len == 1) return Ap::singleton(Integer(v_dist(rng)));
    return Ap(Integer(v_dist(rng)), Integer(d_dist(rng)), len);
}

void record_failure(SuiteResult& r, const std::string& what) {
    ++r.violations;
    if (r.pass) {
        r.pass = false;
        r.counterexample = what;
    }
}

}  // namespace

SuiteResult suite_ap_core(std::uint64_t seed, std::uint64_t budget) {
    SuiteResult r;
    r.name = "ap-core";
    std::mt19937_64 rng(seed);

    for (std::uint64_t it = 0; it < budget; ++it) {
        // Intersection against the brute-force set intersection.
        Ap a = random_ap(rng, -50, 50, 12);
        Ap b = random_ap(rng, -50, 50, 12);
        auto got = intersect(a, b);
        std::vector<Integer> ea = a.elements(), eb = b.elements(), expect;
        std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                              std::back_inserter(expect));
        std::vector<Integer> got_elems = got ? got->elements() : std::vector<Integer>{};
        ++r.checked;
        if (got_elems != expect) {
            record_failure(r, "intersect mismatch: " + a.to_string() + " vs " + b.to_string());
        }
        if (got) {
            ++r.checked;
            if (!is_ap(got_elems)) record_failure(r, "intersect produced a non-AP");
        }

        // make_ap maximality and containment.
        Instance X = random_instance(rng, 10, 40);
        std::uniform_int_distribution<std::size_t> pick(0, X.size() - 1);
        Integer start = X[pick(rng)];
        Integer d(std::uniform_int_distribution<int>(1, 12)(rng));
        Ap m = make_ap(X, start, d);
        ++r.checked;
        bool inside = true;
        for (const Integer& v : m.elements()) inside = inside && X.contains(v);
        Integer step = m.length() == 1 ? d : m.diff();
        if (!inside || X.contains(m.first() - step) || X.contains(m.last() + step)) {
            record_failure(r, "make_ap not maximal on " + instance_to_line(X));
        }

        // prefix_meet: result is a prefix fully inside X minus blocked, and
        // the next step is excluded.
        std::set<Integer> blocked;
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) blocked.insert(X[i]);
        }
        Integer pm_start = X[pick(rng)];
        Integer pm_d(std::uniform_int_distribution<int>(0, 6)(rng));
        auto pm = prefix_meet(pm_start, pm_d, X, blocked);
        ++r.checked;
        bool ok = true;
        if (pm) {
            for (const Integer& v : pm->elements()) {
                ok = ok && X.contains(v) && blocked.count(v) == 0;
            }
            if (pm_d > 0) {
                Integer next = pm->last() + pm_d;
                ok = ok && (!X.contains(next) || blocked.count(next) != 0);
            }
        } else {
            ok = !X.contains(pm_start) || blocked.count(pm_start) != 0;
        }
        if (!ok) record_failure(r, "prefix_meet property failed on " + instance_to_line(X));
    }

    // enumerate_all_aps equals the exhaustive subset filter on small sets.
    std::mt19937_64 rng2(seed + 1);
    for (int it = 0; it < 50; ++it) {
        Instance X = random_instance(rng2, 8, 20);
        auto all = enumerate_all_aps(X);
        std::set<std::vector<Integer>> got;
        for (const Ap& ap : all) got.insert(ap.elements());
        std::set<std::vector<Integer>> expect;
        const std::size_t n = X.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Integer> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) subset.push_back(X[i]);
            }
            if (!is_ap(subset)) continue;
            // Contiguity in its own difference is automatic for a sorted
            // constant-difference subset.
            expect.insert(subset);
        }
        ++r.checked;
        if (got != expect) record_failure(r, "enumerate_all_aps mismatch on " + instance_to_line(X));
        ++r.checked;
        if (std::set<Ap>(all.begin(), all.end()).size() != all.size()) {
            record_failure(r, "enumerate_all_aps returned duplicates");
        }
    }
    return r;
}

SuiteResult suite_cap(std::uint64_t seed, std::uint64_t budget) {
    SuiteResult r;
    r.name = "cap";
    std::mt19937_64 rng(seed);
    for (std::uint64_t it = 0; it < budget; ++it) {
        Instance X = random_instance(rng, 12, 40);
        int expect = brute_cap(X);
        const int upper = static_cast<int>((X.size() + 1) / 2);
        bool prev = false;
        for (int k = 0; k <= upper; ++k) {
            CapResult res = cover_decide(X, k);
            ++r.checked;
            if (res.yes != (expect <= k)) {
                auto fails = [k](const Instance& Y) {
                    return cover_decide(Y, k).yes != (brute_cap(Y) <= k);
                };
                record_failure(r, "cap oracle mismatch at k=" + std::to_string(k) + ": " +
                                      shrink_instance(X, fails));
            }
            ++r.checked;
            if (prev && !res.yes) record_failure(r, "cap monotonicity violated");
            prev = res.yes;
            if (res.yes) {
                ++r.checked;
                if (!res.witness || !verify_solution(X, *res.witness).ok) {
                    record_failure(r, "cap witness unsound on " + instance_to_line(X));
                }
            }
        }
    }

    // Recursion-size sanity budget on planted instances: nodes stay within
    // 1024 * 2^(k*k). A desk-scale budget, not a bound from first principles.
    std::mt19937_64 rng2(seed + 1);
    for (int k = 1; k <= 4; ++k) {
        for (int rep = 0; rep < 3; ++rep) {
            auto [X, planted] = gen_union_of_aps(k, 8, Integer(1'000'000), rng2());
            CapResult res = cover_decide(X, k);
            ++r.checked;
            if (!res.yes) {
                record_failure(r, "planted cap instance not decided yes");
                continue;
            }
            ++r.checked;
            const double limit = 1024.0 * std::pow(2.0, k * k);
            if (static_cast<double>(res.nodes) > limit) {
                record_failure(r, "cap node budget exceeded: " + std::to_string(res.nodes));
            }
        }
    }
    return r;
}

SuiteResult suite_xcap(std::uint64_t seed, std::uint64_t budget) {
    SuiteResult r;
    r.name = "xcap";
    std::mt19937_64 rng(seed);
    XcapOptions strict;
    strict.check_invariants = true;
    for (std::uint64_t it = 0; it < budget; ++it) {
        Instance X = random_instance(rng, 10, 30);
        auto [expect, brute_sol] = brute_xcap_witness(X);
        const int upper = static_cast<int>((X.size() + 1) / 2);
        for (int k = 0; k <= upper; ++k) {
            XcapResult res = exact_cover_decide(X, k, it % 8 == 0 ? strict : XcapOptions{});
            ++r.checked;
            if (res.yes != (expect <= k)) {
                auto fails = [k](const Instance& Y) {
                    return exact_cover_decide(Y, k).yes != (brute_xcap(Y) <= k);
                };
                record_failure(r, "xcap oracle mismatch at k=" + std::to_string(k) + ": " +
                                      shrink_instance(X, fails));
            }
            if (res.yes) {
                ++r.checked;
                if (!res.witness || !verify_solution(X, *res.witness).ok ||
                    res.witness->kind != CoverKind::exact_cover) {
                    record_failure(r, "xcap witness unsound on " + instance_to_line(X));
                }
            }
        }
        // The interruption bound holds for the brute-force solution.
        ++r.checked;
        if (!check_interruption_bound(X, brute_sol)) {
            record_failure(r, "interruption bound violated on " + instance_to_line(X));
        }
    }
    return r;
}

SuiteResult suite_zp(std::uint64_t seed, std::uint64_t budget) {
    SuiteResult r;
    r.name = "zp";
    std::mt19937_64 rng(seed);
    const std::int64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 97, 1009};

    for (std::uint64_t it = 0; it < budget; ++it) {
        // Integer APs project to modular APs.
        Ap a = random_ap(rng, -1000, 1000, 10);
        Integer p(primes[std::uniform_int_distribution<std::size_t>(0, std::size(primes) - 1)(rng)]);
        std::vector<Integer> seq;
        for (const Integer& v : a.elements()) seq.push_back(mod_floor(v, p));
        ++r.checked;
        bool constant_diff = true;
        for (std::size_t i = 2; i < seq.size(); ++i) {
            if (mod_floor(seq[i] - seq[i - 1], p) != mod_floor(seq[1] - seq[0], p)) {
                constant_diff = false;
            }
        }
        if (!constant_diff) record_failure(r, "projected AP lost constant difference");

        // Identity preserves three-term APs.
        Instance X = random_instance(rng, 7, 60);
        ++r.checked;
        if (!is_three_ap_preserving(X, X.values())) {
            record_failure(r, "identity not three-AP-preserving on " + instance_to_line(X));
        }
        // Affine images preserve three-term APs.
        Integer c(std::uniform_int_distribution<int>(1, 5)(rng));
        if (std::uniform_int_distribution<int>(0, 1)(rng)) c = -c;
        Integer b(std::uniform_int_distribution<int>(-20, 20)(rng));
        std::vector<Integer> affine;
        for (const Integer& v : X.values()) affine.push_back(c * v + b);
        ++r.checked;
        if (!is_three_ap_preserving(X, affine)) {
            record_failure(r, "affine image not three-AP-preserving on " + instance_to_line(X));
        }
    }

    // Reduction round-trip at a reduced budget: suitable prime, injective
    // projection, matching cover and exact-cover minima.
    std::mt19937_64 rng2(seed + 1);
    const std::uint64_t reductions = std::max<std::uint64_t>(budget / 10, 5);
    for (std::uint64_t it = 0; it < reductions; ++it) {
        Instance X = random_instance(rng2, 8, 1 << 20);
        auto [p, zp_inst] = reduce_mod_p(X);
        ++r.checked;
        if (!is_suitable_prime(p, X)) {
            record_failure(r, "reduce_mod_p returned unsuitable prime for " + instance_to_line(X));
            continue;
        }
        ++r.checked;
        if (zp_inst.elements.size() != X.size()) {
            record_failure(r, "projection not injective on " + instance_to_line(X));
            continue;
        }
        auto zp_cover = zp_cover_minimize(zp_inst);
        auto zp_exact = zp_exact_cover_minimize(zp_inst);
        ++r.checked;
        if (!zp_cover || zp_cover->k_min != brute_cap(X)) {
            record_failure(r, "zp cover minimum mismatch on " + instance_to_line(X));
        }
        ++r.checked;
        if (!zp_exact || zp_exact->k_min != brute_xcap(X)) {
            record_failure(r, "zp exact cover minimum mismatch on " + instance_to_line(X));
        }
    }
    return r;
}

SuiteResult suite_tusc(std::uint64_t seed, std::uint64_t budget) {
    SuiteResult r;
    r.name = "tusc";
    std::mt19937_64 rng(seed);
    const std::uint64_t instances = std::max<std::uint64_t>(budget / 10, 5);

    for (std::uint64_t it = 0; it < instances; ++it) {
        TuscInstance inst = random_tusc_instance(rng, 12, 8, 2e6);

        // Brute-force minimum with the pair sets materialized.
        SetCoverInstance sc;
        sc.universe_size = inst.universe;
        int id = 0;
        for (const auto& S : inst.explicit_sets) {
            std::uint32_t mask = 0;
            for (int v = static_cast<int>(S.find_first()); v >= 0;
                 v = static_cast<int>(S.find_next(v))) {
                mask |= 1u << v;
            }
            sc.add_set(mask, id++);
        }
        for (int a = 0; a < inst.universe; ++a) {
            for (int b = a + 1; b < inst.universe; ++b) {
                sc.add_set((1u << a) | (1u << b), id++);
            }
        }
        auto brute = min_set_cover(sc);

        for (int k = 0; k <= 3; ++k) {
            const int target = (inst.universe + inst.t - 1) / inst.t - k;
            const bool expect = brute && brute->size <= target;
            TuscOptions opts;
            bool got = tusc_below_decide(inst, k, opts);
            ++r.checked;
            if (got != expect) {
                record_failure(r, "tusc equivalence failed (n=" + std::to_string(inst.universe) +
                                      ", k=" + std::to_string(k) + ")");
            }
            // Randomized mode is one-sided: never yes on a no-instance.
            TuscOptions rand_opts;
            rand_opts.mode = ColoringMode::randomized;
            rand_opts.seed = rng();
            bool rand_got = tusc_below_decide(inst, k, rand_opts);
            ++r.checked;
            if (rand_got && !expect) record_failure(r, "randomized tusc said yes on a no-instance");
        }

        // Greedy bounds whenever the early exit did not fire.
        for (int k = 1; k <= 3; ++k) {
            GreedyOutcome greedy = greedy_phase(inst, k);
            if (greedy.early_yes) continue;
            ++r.checked;
            const std::size_t tk = static_cast<std::size_t>(inst.t) * k;
            if (greedy.covered.count() > tk * inst.t + tk || greedy.picked.size() > tk) {
                record_failure(r, "greedy bound violated");
            }
        }
    }

    // cap_below against the brute-force cover minimum.
    std::mt19937_64 rng2(seed + 1);
    for (std::uint64_t it = 0; it < instances; ++it) {
        Instance X = random_instance(rng2, 12, 40);
        int opt = brute_cap(X);
        const int guarantee = static_cast<int>((X.size() + 1) / 2);
        for (int k = 0; k <= 3; ++k) {
            ++r.checked;
            if (cap_below_decide(X, k) != (opt <= guarantee - k)) {
                record_failure(r, "cap_below mismatch (k=" + std::to_string(k) + ") on " +
                                      instance_to_line(X));
            }
        }
    }
    return r;
}

SuiteResult suite_theorems(std::uint64_t seed, std::uint64_t budget) {
    SuiteResult r;
    r.name = "theorems";
    std::mt19937_64 rng(seed);

    // Sampled families never violate the prefix-covering implication.
    for (std::uint64_t it = 0; it < budget; ++it) {
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<ResidueClass> family;
        for (int i = 0; i < k; ++i) {
            std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 8)(rng);
            std::int64_t res = std::uniform_int_distribution<std::int64_t>(0, m - 1)(rng);
            family.push_back({res, m});
        }
        ++r.checked;
        if (!check_cve_property(k, family, 10'000)) {
            record_failure(r, "cve implication violated (k=" + std::to_string(k) + ")");
        }
    }

    // Structural bound: exhaustively for k <= 2, sampled for k = 3.
    for (int k = 0; k <= 2; ++k) {
        Lemma3Stats stats = check_lemma3_exhaustive(k, (1 << k) + 4, (1 << k) + 4, (1 << k) + 6);
        ++r.checked;
        if (stats.violations != 0) {
            record_failure(r, "difference bound violated at k=" + std::to_string(k));
        }
    }
    Lemma3Stats sampled = check_lemma3_sampled(3, std::max<std::uint64_t>(budget, 10'000), seed);
    ++r.checked;
    if (sampled.violations != 0) record_failure(r, "difference bound violated at k=3");
    return r;
}

std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed,
                                    std::uint64_t budget) {
    std::vector<SuiteResult> results;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    bool known = which == "all";
    if (want("ap-core")) results.push_back(suite_ap_core(seed, budget)), known = true;
    if (want("cap")) results.push_back(suite_cap(seed, std::max<std::uint64_t>(budget / 10, 5))), known = true;
    if (want("xcap")) results.push_back(suite_xcap(seed, std::max<std::uint64_t>(budget / 20, 3))), known = true;
    if (want("zp")) results.push_back(suite_zp(seed, budget)), known = true;
    if (want("tusc")) results.push_back(suite_tusc(seed, budget)), known = true;
    if (want("theorems")) results.push_back(suite_theorems(seed, budget)), known = true;
    if (!known) throw std::invalid_argument("unknown property suite: " + which);
    return results;
}

}  // namespace apcover
