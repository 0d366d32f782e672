#pragma once

#include "apcover/below_guarantee.hpp"
#include "apcover/instance.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace apcover {

// One property suite outcome. checked counts individual assertions, and the
// first violation is kept as a printable, greedily shrunk counterexample.
struct SuiteResult {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::string counterexample;

    void merge(const SuiteResult& other);
};

SuiteResult suite_ap_core(std::uint64_t seed, std::uint64_t budget);
SuiteResult suite_cap(std::uint64_t seed, std::uint64_t budget);
SuiteResult suite_xcap(std::uint64_t seed, std::uint64_t budget);
SuiteResult suite_zp(std::uint64_t seed, std::uint64_t budget);
SuiteResult suite_tusc(std::uint64_t seed, std::uint64_t budget);
SuiteResult suite_theorems(std::uint64_t seed, std::uint64_t budget);

// which: all | ap-core | cap | xcap | zp | tusc | theorems.
// Throws std::invalid_argument on an unknown suite name.
std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed,
                                    std::uint64_t budget);

// Random instance with 1..max_n elements drawn from [0, max_value].
Instance random_instance(std::mt19937_64& rng, int max_n, std::int64_t max_value);

// Random t-uniform instance kept small enough for exhaustive coloring:
// instances whose estimated coloring work exceeds the bound are redrawn.
TuscInstance random_tusc_instance(std::mt19937_64& rng, int max_n, int max_sets,
                                  double max_work = 2e8);

// Greedily removes elements while the predicate still fails, then prints the
// instance on one line. Used to report minimized counterexamples.
std::string shrink_instance(Instance X, const std::function<bool(const Instance&)>& still_fails);

std::string instance_to_line(const Instance& X);

}  // namespace apcover
