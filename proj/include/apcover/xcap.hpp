#pragma once

#include "apcover/ap.hpp"
#include "apcover/instance.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace apcover {

struct XcapOptions {
    bool check_invariants = false;  // re-validate the search state at every node
};

struct XcapResult {
    bool yes = false;
    std::optional<Solution> witness;  // present and verified iff yes
    std::uint64_t nodes = 0;
};

// Candidate differences for a slot whose two committed elements are a_alpha <
// a_beta: for every tuple (b_1..b_k) in {0..2^k+1}^k, g = gcd(a_beta - a_alpha,
// b_1 d_1, ..., b_k d_k) with zero terms ignored, and every integral g/m for
// m = 1..k(k+1) is a candidate. Returns the deduplicated union, decreasing.
std::vector<Integer> xcap_candidate_differences(const Integer& a_alpha, const Integer& a_beta,
                                                const std::vector<Integer>& diffs, int k);

// Truncates the potential set at the first element claimed by T:
// returns { p in P : p < min(P inter T) }, or P unchanged when disjoint.
// Both inputs sorted ascending.
std::vector<Integer> update_potential(const std::vector<Integer>& P, const std::vector<Integer>& T);

// Decides whether X can be partitioned into at most k pairwise-disjoint APs
// contained in X. On yes, returns a verified witness; unused slots are
// dropped, so the witness may have fewer than k APs.
XcapResult exact_cover_decide(const Instance& X, int k, const XcapOptions& opts = {});

// Smallest k admitting an exact cover, by iterative deepening.
std::pair<int, XcapResult> exact_cover_minimize(const Instance& X, const XcapOptions& opts = {});

}  // namespace apcover
