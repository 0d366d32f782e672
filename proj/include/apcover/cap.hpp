#pragma once

#include "apcover/ap.hpp"
#include "apcover/instance.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace apcover {

struct CapOptions {
    int setcover_max_universe = 25;  // cap for the small-instance fallback
};

struct CapResult {
    bool yes = false;
    std::optional<Solution> witness;  // present and verified iff yes
    std::uint64_t nodes = 0;          // recursion tree size
};

// Candidate differences for one branching step: divisors d of span with
// d >= span / 2^k, i.e. span / l over l = 1..2^k with l | span.
// Returned in decreasing order.
std::vector<Integer> cap_candidate_differences(const Integer& span, int k);

// Decides whether X can be covered by at most k APs contained in X.
// On yes, returns a witness verified against verify_solution.
CapResult cover_decide(const Instance& X, int k, const CapOptions& opts = {});

// Smallest k with cover_decide(X, k) yes, by iterative deepening; always
// terminates because ceil(n/2) pair-APs suffice.
std::pair<int, CapResult> cover_minimize(const Instance& X, const CapOptions& opts = {});

}  // namespace apcover
