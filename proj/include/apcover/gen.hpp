#pragma once

#include "apcover/ap.hpp"
#include "apcover/instance.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace apcover {

// Planted yes-instance: the union of k random APs, each of the given length.
// With disjoint = true the APs are laid out in separated value bands, so the
// instance is an exact-cover yes-instance for k as well. The planted APs are
// returned alongside the instance.
std::pair<Instance, std::vector<Ap>> gen_union_of_aps(int k, int len, const Integer& max_value,
                                                      std::uint64_t seed, bool disjoint = false);

// Greedy three-AP-free set of size n (the base-3 digit construction emerges);
// post-checked against has_three_term_ap.
Instance gen_no3ap(int n);

// n distinct values sampled uniformly from [lo, hi].
Instance gen_random(int n, const Integer& lo, const Integer& hi, std::uint64_t seed);

// {0} together with the first n powers of two.
Instance gen_powers(int n);

}  // namespace apcover
