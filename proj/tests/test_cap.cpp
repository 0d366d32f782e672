#include "apcover/cap.hpp"

#include "apcover/gen.hpp"
#include "apcover/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace apcover;

namespace {

Instance inst(std::vector<long long> values) {
    std::vector<Integer> v(values.begin(), values.end());
    return Instance(std::move(v));
}

}  // namespace

TEST_SUITE_BEGIN("cap");

TEST_CASE("candidate differences") {
    // span 12, k = 2: l in {1,2,3,4} all divide 12.
    std::vector<Integer> expect{12, 6, 4, 3};
    CHECK(cap_candidate_differences(12, 2) == expect);
    // Non-divisors are skipped.
    std::vector<Integer> expect9{9, 3};  // l in {1,3} among 1..4
    CHECK(cap_candidate_differences(9, 2) == expect9);
    CHECK(cap_candidate_differences(1, 3) == std::vector<Integer>{1});
    CHECK_THROWS_AS(cap_candidate_differences(0, 2), std::invalid_argument);
}

TEST_CASE("cover_decide examples") {
    Instance X = inst({0, 4, 6, 7, 8, 9});
    auto yes = cover_decide(X, 2);
    CHECK(yes.yes);
    REQUIRE(yes.witness.has_value());
    CHECK(verify_solution(X, *yes.witness).ok);
    CHECK(yes.witness->aps.size() <= 2);

    Instance no3 = inst({1, 2, 4, 8, 16, 32});
    CHECK(!cover_decide(no3, 2).yes);
    CHECK(cover_decide(no3, 3).yes);

    CHECK(cover_decide(Instance{}, 0).yes);
    CHECK(!cover_decide(inst({5}), 0).yes);
}

TEST_CASE("hand-traced k=1 branch") {
    // Pair (0,3) gives span 3, l in {1} (2 does not divide 3, l <= 2), so the
    // first candidate is d = 3 and make_ap(0,3) covers everything.
    Instance X = inst({0, 3, 6});
    auto res = cover_decide(X, 1);
    CHECK(res.yes);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->aps == std::vector<Ap>{Ap(0, 3, 3)});
}

TEST_CASE("cover_minimize examples") {
    CHECK(cover_minimize(inst({0, 1, 2, 3, 4, 5, 6, 7, 8, 9})).first == 1);
    CHECK(cover_minimize(inst({0, 4, 6, 7, 8, 9})).first == 2);
    CHECK(cover_minimize(inst({1, 2, 4, 8, 16, 32})).first == 3);
    CHECK(cover_minimize(Instance{}).first == 0);
}

TEST_CASE("oracle equivalence on random instances") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 120; ++it) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        std::set<Integer> vals;
        while (static_cast<int>(vals.size()) < n) {
            vals.insert(std::uniform_int_distribution<int>(0, 40)(rng));
        }
        Instance X(std::vector<Integer>(vals.begin(), vals.end()));
        const int expect = brute_cap(X);
        bool prev = false;
        for (int k = 0; k <= static_cast<int>((X.size() + 1) / 2); ++k) {
            CapResult res = cover_decide(X, k);
            CHECK(res.yes == (expect <= k));
            if (prev) CHECK(res.yes);  // monotone
            prev = res.yes;
            if (res.yes) {
                REQUIRE(res.witness.has_value());
                CHECK(verify_solution(X, *res.witness).ok);
                CHECK(static_cast<int>(res.witness->aps.size()) <= k);
            }
        }
    }
}

TEST_CASE("planted instances decided within the node budget") {
    std::mt19937_64 rng(5);
    for (int k = 1; k <= 4; ++k) {
        auto [X, planted] = gen_union_of_aps(k, 10, Integer(1'000'000'000), rng());
        CapResult res = cover_decide(X, k);
        CHECK(res.yes);
        CHECK(static_cast<double>(res.nodes) <= 1024.0 * std::pow(2.0, k * k));
    }
}

TEST_SUITE_END();
