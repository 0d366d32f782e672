#include "apcover/oracle.hpp"

#include "apcover/ap.hpp"
#include "apcover/errors.hpp"
#include "apcover/gen.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace apcover;

namespace {

Instance inst(std::vector<long long> values) {
    std::vector<Integer> v(values.begin(), values.end());
    return Instance(std::move(v));
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute_cap examples") {
    CHECK(brute_cap(inst({0, 4, 6, 7, 8, 9})) == 2);
    CHECK(brute_cap(Instance{}) == 0);
    CHECK(brute_cap(inst({1, 2, 4, 8, 16, 32})) == 3);
    CHECK_THROWS_AS(brute_cap(inst({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}), 14),
                    CapacityError);
}

TEST_CASE("brute_xcap examples") {
    CHECK(brute_xcap(inst({0, 4, 6, 7, 8, 9})) == 2);
    CHECK(brute_xcap(inst({0, 1, 2})) == 1);
    CHECK(brute_xcap(inst({0, 3, 4, 5, 6, 9})) == 2);  // {0,3,6,9} + {4,5}
}

TEST_CASE("brute witnesses verify") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 60; ++it) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        std::set<Integer> vals;
        while (static_cast<int>(vals.size()) < n) {
            vals.insert(std::uniform_int_distribution<int>(0, 25)(rng));
        }
        Instance X(std::vector<Integer>(vals.begin(), vals.end()));
        auto [kc, cover] = brute_cap_witness(X);
        auto [kx, exact] = brute_xcap_witness(X);
        CHECK(static_cast<int>(cover.aps.size()) == kc);
        CHECK(static_cast<int>(exact.aps.size()) == kx);
        CHECK(verify_solution(X, cover).ok);
        CHECK(verify_solution(X, exact).ok);
        // Every exact cover is a cover, and pairs always suffice.
        CHECK(kc <= kx);
        CHECK(kc <= static_cast<int>((X.size() + 1) / 2));
        CHECK(kx <= static_cast<int>((X.size() + 1) / 2));
    }
}

TEST_CASE("cve property checker") {
    // Parity partition covers [1, 4] and everything after.
    CHECK(check_cve_property(2, {{0, 2}, {1, 2}}, 10'000));
    // All integers with difference 1.
    CHECK(check_cve_property(1, {{0, 1}}, 10'000));
    // Premise fails: one odd class never covers 2.
    CHECK(check_cve_property(2, {{1, 2}}, 10'000));
    CHECK_THROWS_AS(check_cve_property(1, {{0, 0}}, 100), std::invalid_argument);
}

TEST_CASE("lemma3 harness") {
    SUBCASE("k=0 has no configurations") {
        auto stats = check_lemma3_exhaustive(0, 5, 4, 5);
        CHECK(stats.violations == 0);
    }
    SUBCASE("k=1 exhaustive: a single progression cannot stall at t >= 2") {
        auto stats = check_lemma3_exhaustive(1, 6, 6, 8);
        CHECK(stats.configurations > 0);  // t = 1 configurations exist
        CHECK(stats.violations == 0);
    }
    SUBCASE("k=2 exhaustive") {
        auto stats = check_lemma3_exhaustive(2, 8, 8, 10);
        CHECK(stats.configurations > 0);
        CHECK(stats.violations == 0);
    }
    SUBCASE("k=3 sampled") {
        auto stats = check_lemma3_sampled(3, 20'000, 42);
        CHECK(stats.violations == 0);
    }
}

TEST_CASE("interruption bound on brute solutions") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 40; ++it) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        std::set<Integer> vals;
        while (static_cast<int>(vals.size()) < n) {
            vals.insert(std::uniform_int_distribution<int>(0, 30)(rng));
        }
        Instance X(std::vector<Integer>(vals.begin(), vals.end()));
        auto [k, sol] = brute_xcap_witness(X);
        (void)k;
        CHECK(check_interruption_bound(X, sol));
    }
}

TEST_SUITE_END();
