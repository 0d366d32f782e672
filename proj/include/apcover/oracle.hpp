#pragma once

#include "apcover/ap.hpp"
#include "apcover/instance.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace apcover {

// Brute-force reference solvers. These deliberately share no search code with
// the FPT solvers (only the ap enumeration primitives), so that equivalence
// tests between the two are meaningful.

// Exact minimum number of APs contained in X whose union is X.
// Throws CapacityError when X has more than max_n elements.
int brute_cap(const Instance& X, int max_n = 14);

// As above with the APs required to be pairwise disjoint.
int brute_xcap(const Instance& X, int max_n = 12);

// Witness variants used by the checks that need the actual APs.
std::pair<int, Solution> brute_cap_witness(const Instance& X, int max_n = 14);
std::pair<int, Solution> brute_xcap_witness(const Instance& X, int max_n = 12);

// An infinite AP given as a residue class: covers every x with
// x = residue (mod modulus). modulus >= 1.
struct ResidueClass {
    std::int64_t residue = 0;
    std::int64_t modulus = 1;
};

// Desk-scale check of the covering theorem behind the difference bound:
// if the family covers {1,...,2^k} it must cover {1,...,N}. Returns true when
// the implication holds (vacuously when the premise fails); false would mean
// an implementation-level misunderstanding, not a disproof of the theorem.
bool check_cve_property(int k, const std::vector<ResidueClass>& family, std::int64_t horizon);

// Falsification harness for the structural bound t < 2^k: a configuration is
// a reference progression s0 = 0,1,...,t plus k upward-infinite progressions
// (start, diff) that jointly cover {0,...,t-1}, each missing t. The harness
// reports a violation for every configuration found with t >= 2^k.
struct Lemma3Stats {
    std::uint64_t configurations = 0;  // premise satisfied
    std::uint64_t violations = 0;      // premise satisfied with t >= 2^k
};

// Exhaustive scan over t in [1, t_max], starts in [-start_range, t-1],
// diffs in [1, diff_max]. Intended for k <= 2.
Lemma3Stats check_lemma3_exhaustive(int k, int t_max, int start_range, int diff_max);

// Randomized scan with the given number of sampled configurations.
Lemma3Stats check_lemma3_sampled(int k, std::uint64_t samples, std::uint64_t seed);

// Desk check of the interruption bound used by the exact-cover difference
// branching: for an exact cover s_1..s_k of X and any AP s inside X whose
// intersection with some s_i has >= k+1 elements, at most 2^(k-1)-1 elements
// of s lie strictly between consecutive intersection elements.
bool check_interruption_bound(const Instance& X, const Solution& exact_cover);

}  // namespace apcover
