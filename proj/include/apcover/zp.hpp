#pragma once

#include "apcover/instance.hpp"
#include "apcover/integer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace apcover {

// Deterministic Miller-Rabin; the fixed witness set is valid for every
// candidate below 3.3e24, far above anything the prime search can reach.
bool is_prime(const Integer& n);

// A subset of Z_p for a prime modulus p.
struct ZpInstance {
    Integer p;
    std::vector<Integer> elements;  // distinct residues in [0, p), ascending
};

// A modular progression start, start+diff, ... (mod p) of the given length.
// For diff != 0 the elements are distinct as long as len <= p.
struct ZpAp {
    Integer start;
    Integer diff;
    std::int64_t len = 1;
};

struct ZpEnumLimits {
    int max_elements = 25;          // solver masks must fit the set-cover DP
    std::int64_t max_modulus = 1'000'000;
};

// The multiset of residues x mod p over x in X, sorted, duplicates preserved.
std::vector<Integer> mod_project(const Instance& X, const Integer& p);

// A prime is suitable when it divides no nonzero 2x-y-z over input triples
// (x, y, z not necessarily distinct) and no x-y over distinct pairs. Suitable
// primes make the projection decision-preserving and injective.
bool is_suitable_prime(const Integer& p, const Instance& X);

struct ReduceStats {
    std::uint64_t primes_tested = 0;    // candidates that were prime
    std::uint64_t pair_values = 0;      // distinct nonzero |x - y|
    std::uint64_t triple_values = 0;    // distinct nonzero |2x - y - z|
};

// Searches primes in increasing order and returns the first suitable one with
// the projected set. A suitable prime always exists.
std::pair<Integer, ZpInstance> reduce_mod_p(const Instance& X, ReduceStats* stats = nullptr);

// All modular APs whose element sets lie inside the instance, deduplicated by
// element set (a full cycle has p representations), including wrap-arounds.
std::vector<ZpAp> zp_enumerate_aps(const ZpInstance& inst, const ZpEnumLimits& limits = {});

// Desk-scale decision procedures over the enumerated family.
bool zp_cover_decide(const ZpInstance& inst, int k, const ZpEnumLimits& limits = {});
bool zp_exact_cover_decide(const ZpInstance& inst, int k, const ZpEnumLimits& limits = {});

struct ZpSolveResult {
    int k_min = 0;
    std::vector<ZpAp> witness;
};

std::optional<ZpSolveResult> zp_cover_minimize(const ZpInstance& inst, const ZpEnumLimits& limits = {});
std::optional<ZpSolveResult> zp_exact_cover_minimize(const ZpInstance& inst, const ZpEnumLimits& limits = {});

// True iff for every index triple i<j<k the set {x_i, x_j, x_k} forms a
// three-term AP exactly when {a_i, a_j, a_k} does. a is given in index
// correspondence with X's sorted elements and need not be sorted itself.
bool is_three_ap_preserving(const Instance& X, const std::vector<Integer>& a);

// Exhaustive search for a three-AP-preserving image of the doubling family
// {0, 1, 2, 4, ..., 2^n} with all values in [0, bound]. Returns the
// lexicographically smallest preserver in index correspondence, or nullopt.
// Feasible for n + 2 <= 8 and bound <= 4096.
std::optional<std::vector<Integer>> search_small_preserver(int n, const Integer& bound);

// The doubling family itself: x_1 = 0, x_i = 2^(i-2), as an Instance of
// n + 2 elements.
Instance powers_family(int n);

}  // namespace apcover
