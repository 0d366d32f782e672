#pragma once

#include "apcover/instance.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace apcover {

// t-Uniform Set Cover instance: the family implicitly contains every
// t-subset of the universe (never materialized) plus the explicit sets.
struct TuscInstance {
    int universe = 0;
    int t = 1;
    std::vector<boost::dynamic_bitset<>> explicit_sets;
};

struct GreedyOutcome {
    std::vector<int> picked;           // indices into explicit_sets, pick order
    boost::dynamic_bitset<> covered;   // the set G
    bool early_yes = false;            // |G| >= |picked|*t + t*k at some pick
};

enum class ColoringMode { exhaustive, randomized };

struct TuscOptions {
    ColoringMode mode = ColoringMode::exhaustive;
    std::uint64_t trials = 0;          // randomized mode; 0 = derive from delta
    double delta = 1e-3;               // randomized failure bound per search
    std::uint64_t seed = 0;
    int threads = 1;
    std::uint64_t max_colorings = 50'000'000;  // exhaustive-mode safety cap
    int setcover_max_universe = 25;
    std::uint64_t* colorings_out = nullptr;    // optional instrumentation
};

// Greedy stage: repeatedly pick the explicit set covering the most new
// elements while some set covers at least t+1 new ones (ties: lowest index).
// Implicit t-subsets never qualify. Sets early_yes per the
// |G| >= s*t + t*k test after each pick and stops immediately when it fires.
GreedyOutcome greedy_phase(const TuscInstance& inst, int k);

// Color-coding search for s2 sets (explicit or implicit t-subsets) covering G
// plus enough elements outside G that t-subset padding finishes the cover
// within the budget ceil(n/t) - k. The required outside count equals
// s2*t + t*k - |G| whenever t divides n. Exhaustive mode enumerates colorings
// of the outside elements (up to color relabeling); randomized mode samples
// them and has one-sided error: it never answers yes on a no-instance.
bool color_coding_search(const TuscInstance& inst, const boost::dynamic_bitset<>& G, int s2,
                         int k, const TuscOptions& opts = {});

// Decides whether a cover of size at most ceil(n/t) - k exists.
bool tusc_below_decide(const TuscInstance& inst, int k, const TuscOptions& opts = {});

// The t = 2 specialization: universe = positions of X, explicit sets = the
// maximal APs of X, pairs are the implicit 2-subsets.
bool cap_below_decide(const Instance& X, int k, const TuscOptions& opts = {});

}  // namespace apcover
