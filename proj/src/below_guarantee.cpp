#include "apcover/below_guarantee.hpp"

#include "apcover/ap.hpp"
#include "apcover/errors.hpp"
#include "apcover/set_cover.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace apcover {

namespace {

using Bitset = boost::dynamic_bitset<>;

// Set partitions of m items into at most max_blocks nonempty blocks, iterated
// as restricted growth strings. The caller filters on the exact block count.
struct PartitionIter {
    std::vector<int> assign;
    int max_blocks;

    PartitionIter(int m, int max_blocks) : assign(static_cast<std::size_t>(m), 0), max_blocks(max_blocks) {}

    int block_count() const {
        int mx = -1;
        for (int a : assign) mx = std::max(mx, a);
        return mx + 1;
    }

    bool next() {
        const int m = static_cast<int>(assign.size());
        for (int i = m - 1; i >= 1; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, assign[j]);
            if (assign[i] <= mx && assign[i] + 1 <= max_blocks - 1) {
                ++assign[i];
                std::fill(assign.begin() + i + 1, assign.end(), 0);
                return true;
            }
        }
        return false;
    }
};

// Stirling numbers of the second kind, as doubles, for the enumeration guard.
double stirling2(int m, int h) {
    if (h > m || h < 0) return 0.0;
    if (m == 0) return h == 0 ? 1.0 : 0.0;
    std::vector<std::vector<double>> s(m + 1, std::vector<double>(h + 1, 0.0));
    s[0][0] = 1.0;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= std::min(i, h); ++j) {
            s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    return s[m][h];
}

// Shared reduction machinery: the reduced universe has |G| element bits
// followed by h block bits; every explicit set maps to its G part plus the
// blocks its outside elements land in, and every t-subset of the reduced
// universe is a candidate as well.
struct Reducer {
    const TuscInstance& inst;
    std::vector<int> g_index;           // universe position -> G bit, or -1
    std::vector<int> outside;           // universe positions outside G
    std::vector<int> outside_pos;       // universe position -> outside index, or -1
    int g = 0;
    int h = 0;
    std::vector<std::uint32_t> explicit_g_masks;
    std::vector<std::vector<int>> explicit_outside;  // outside indices per set
    std::vector<std::uint32_t> t_subset_masks;

    Reducer(const TuscInstance& instance, const Bitset& G, int h_colors)
        : inst(instance), h(h_colors) {
        const int n = inst.universe;
        g_index.assign(n, -1);
        outside_pos.assign(n, -1);
        for (int v = 0; v < n; ++v) {
            if (G.test(v)) {
                g_index[v] = g++;
            } else {
                outside_pos[v] = static_cast<int>(outside.size());
                outside.push_back(v);
            }
        }
        for (const auto& S : inst.explicit_sets) {
            std::uint32_t gm = 0;
            std::vector<int> out_idx;
            for (int v = static_cast<int>(S.find_first()); v >= 0;
                 v = static_cast<int>(S.find_next(v))) {
                if (g_index[v] >= 0) {
                    gm |= 1u << g_index[v];
                } else {
                    out_idx.push_back(outside_pos[v]);
                }
            }
            explicit_g_masks.push_back(gm);
            explicit_outside.push_back(std::move(out_idx));
        }
        // All t-subsets of the reduced universe; they are realizable images of
        // family t-subsets as long as the universe has t elements at all.
        if (inst.universe >= inst.t) {
            const int u = g + h;
            if (inst.t <= u) {
                std::vector<int> comb(inst.t);
                for (int i = 0; i < inst.t; ++i) comb[i] = i;
                while (true) {
                    std::uint32_t mask = 0;
                    for (int c : comb) mask |= 1u << c;
                    t_subset_masks.push_back(mask);
                    int i = inst.t - 1;
                    while (i >= 0 && comb[i] == u - inst.t + i) --i;
                    if (i < 0) break;
                    ++comb[i];
                    for (int j = i + 1; j < inst.t; ++j) comb[j] = comb[j - 1] + 1;
                }
            }
        }
    }

    // blockof: outside index -> block in [0, h)
    bool covers_with(const std::vector<int>& blockof, int budget, int cap) const {
        SetCoverInstance sc;
        sc.universe_size = g + h;
        sc.max_universe = cap;
        for (std::size_t s = 0; s < explicit_g_masks.size(); ++s) {
            std::uint32_t mask = explicit_g_masks[s];
            for (int oi : explicit_outside[s]) {
                mask |= 1u << (g + blockof[oi]);
            }
            sc.add_set(mask, static_cast<int>(s));
        }
        for (std::uint32_t mask : t_subset_masks) {
            sc.add_set(mask, -1);
        }
        auto res = min_set_cover(sc);
        return res && res->size <= budget;
    }
};

// Covering G alone with explicit sets and t-subset projections; used when the
// outside requirement is already met (h <= 0).
bool cover_g_alone(const TuscInstance& inst, const Bitset& G, int budget, int cap) {
    const int g = static_cast<int>(G.count());
    if (g == 0) return true;
    std::vector<int> g_index(inst.universe, -1);
    int next = 0;
    for (int v = 0; v < inst.universe; ++v) {
        if (G.test(v)) g_index[v] = next++;
    }
    SetCoverInstance sc;
    sc.universe_size = g;
    sc.max_universe = cap;
    for (std::size_t s = 0; s < inst.explicit_sets.size(); ++s) {
        std::uint32_t mask = 0;
        const auto& S = inst.explicit_sets[s];
        for (int v = static_cast<int>(S.find_first()); v >= 0;
             v = static_cast<int>(S.find_next(v))) {
            if (g_index[v] >= 0) mask |= 1u << g_index[v];
        }
        if (mask) sc.add_set(mask, static_cast<int>(s));
    }
    if (inst.universe >= inst.t) {
        // Any subset of G of size min(t, |G|) is the G part of some t-subset.
        const int r = std::min(inst.t, g);
        std::vector<int> comb(r);
        for (int i = 0; i < r; ++i) comb[i] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int c : comb) mask |= 1u << c;
            sc.add_set(mask, -1);
            int i = r - 1;
            while (i >= 0 && comb[i] == g - r + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    auto res = min_set_cover(sc);
    return res && res->size <= budget;
}

}  // namespace

GreedyOutcome greedy_phase(const TuscInstance& inst, int k) {
    GreedyOutcome out;
    out.covered.resize(inst.universe);
    while (true) {
        int best = -1;
        std::size_t best_new = 0;
        for (std::size_t s = 0; s < inst.explicit_sets.size(); ++s) {
            std::size_t fresh = (inst.explicit_sets[s] - out.covered).count();
            if (fresh > best_new) {
                best_new = fresh;
                best = static_cast<int>(s);
            }
        }
        if (best < 0 || best_new < static_cast<std::size_t>(inst.t) + 1) break;
        out.covered |= inst.explicit_sets[best];
        out.picked.push_back(best);
        const std::size_t s = out.picked.size();
        if (out.covered.count() >= s * inst.t + static_cast<std::size_t>(inst.t) * k) {
            out.early_yes = true;
            break;
        }
    }
    return out;
}

bool color_coding_search(const TuscInstance& inst, const Bitset& G, int s2, int k,
                         const TuscOptions& opts) {
    if (s2 < 1) throw std::invalid_argument("color_coding_search: s2 must be >= 1");
    const int t = inst.t;
    const int g = static_cast<int>(G.count());
    // Exact form of the outside-coverage requirement: after using s2 sets on
    // G, the remaining budget must pad everything still uncovered outside
    // with t-subsets. This equals s2*t + t*k - |G| whenever t divides n.
    const long long budget = (inst.universe + t - 1) / t - k;
    if (budget < s2) return false;
    const long long h =
        static_cast<long long>(inst.universe) - g - (budget - s2) * static_cast<long long>(t);

    if (h <= 0) {
        return cover_g_alone(inst, G, s2, opts.setcover_max_universe);
    }
    const int outside_count = inst.universe - g;
    if (h > outside_count) return false;
    if (g + h > opts.setcover_max_universe) {
        throw CapacityError("color_coding_search: reduced universe exceeds the set-cover cap");
    }

    Reducer reducer(inst, G, static_cast<int>(h));
    const int m = outside_count;
    std::atomic<bool> found{false};
    std::atomic<std::uint64_t> colorings{0};
    const int threads = std::max(1, opts.threads);

    if (opts.mode == ColoringMode::exhaustive) {
        if (stirling2(m, static_cast<int>(h)) > static_cast<double>(opts.max_colorings)) {
            throw CapacityError("color_coding_search: exhaustive coloring count exceeds cap");
        }
        auto worker = [&](int wid) {
            PartitionIter iter(m, static_cast<int>(h));
            std::uint64_t index = 0;
            do {
                if (found.load(std::memory_order_relaxed)) return;
                if (index++ % static_cast<std::uint64_t>(threads) != static_cast<std::uint64_t>(wid)) continue;
                if (iter.block_count() != h) continue;
                colorings.fetch_add(1, std::memory_order_relaxed);
                if (reducer.covers_with(iter.assign, s2, opts.setcover_max_universe)) {
                    found.store(true);
                    return;
                }
            } while (iter.next());
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
            for (auto& th : pool) th.join();
        }
    } else {
        std::uint64_t trials = opts.trials;
        if (trials == 0) {
            const double derived =
                std::ceil(std::exp(static_cast<double>(h)) * std::log(1.0 / opts.delta));
            if (derived > static_cast<double>(opts.max_colorings)) {
                throw CapacityError("color_coding_search: randomized trial count exceeds cap");
            }
            trials = static_cast<std::uint64_t>(derived);
        }
        // One engine seed per trial, drawn up front, so the trial sequence is
        // identical regardless of the thread count.
        std::mt19937_64 master(opts.seed);
        std::vector<std::uint64_t> trial_seeds(trials);
        for (auto& s : trial_seeds) s = master();
        auto worker = [&](int wid) {
            std::vector<int> blockof(m);
            for (std::uint64_t trial = wid; trial < trials; trial += threads) {
                if (found.load(std::memory_order_relaxed)) return;
                std::mt19937_64 rng(trial_seeds[trial]);
                std::uniform_int_distribution<int> dist(0, static_cast<int>(h) - 1);
                std::vector<bool> used(static_cast<std::size_t>(h), false);
                for (int i = 0; i < m; ++i) {
                    blockof[i] = dist(rng);
                    used[blockof[i]] = true;
                }
                if (std::find(used.begin(), used.end(), false) != used.end()) continue;
                colorings.fetch_add(1, std::memory_order_relaxed);
                if (reducer.covers_with(blockof, s2, opts.setcover_max_universe)) {
                    found.store(true);
                    return;
                }
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
            for (auto& th : pool) th.join();
        }
    }
    if (opts.colorings_out) *opts.colorings_out += colorings.load();
    return found.load();
}

bool tusc_below_decide(const TuscInstance& inst, int k, const TuscOptions& opts) {
    if (inst.t < 1) throw std::invalid_argument("tusc_below_decide: t must be >= 1");
    if (k < 0) throw std::invalid_argument("tusc_below_decide: k must be >= 0");
    // ceil(n/t) sets always suffice (t-subset padding), so k = 0 is a yes.
    if (k == 0) return true;
    if (inst.universe == 0) return false;

    GreedyOutcome greedy = greedy_phase(inst, k);
    if (greedy.early_yes) return true;
    const int g = static_cast<int>(greedy.covered.count());
    if (g == 0) return false;  // every set covers <= t elements, the bound is tight

    for (int s2 = 1; s2 <= g; ++s2) {
        if (color_coding_search(inst, greedy.covered, s2, k, opts)) return true;
    }
    return false;
}

bool cap_below_decide(const Instance& X, int k, const TuscOptions& opts) {
    TuscInstance inst;
    inst.universe = static_cast<int>(X.size());
    inst.t = 2;
    for (const Ap& ap : enumerate_maximal_aps(X)) {
        boost::dynamic_bitset<> bits(X.size());
        Integer v = ap.first();
        for (std::int64_t i = 0; i < ap.length(); ++i) {
            bits.set(*X.index_of(v));
            v += ap.diff();
        }
        inst.explicit_sets.push_back(std::move(bits));
    }
    return tusc_below_decide(inst, k, opts);
}

}  // namespace apcover
