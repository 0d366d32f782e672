#include "apcover/ap.hpp"
#include "apcover/instance.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace apcover;

namespace {

Instance inst(std::vector<long long> values) {
    std::vector<Integer> v(values.begin(), values.end());
    return Instance(std::move(v));
}

std::vector<Integer> ints(std::vector<long long> values) {
    return {values.begin(), values.end()};
}

std::set<std::vector<Integer>> element_sets(const std::vector<Ap>& aps) {
    std::set<std::vector<Integer>> out;
    for (const Ap& ap : aps) out.insert(ap.elements());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("ap_core");

TEST_CASE("instance validates and sorts") {
    Instance X = inst({9, 0, 4, 6, 7, 8});
    CHECK(X.size() == 6);
    CHECK(X[0] == 0);
    CHECK(X[5] == 9);
    CHECK(X.contains(7));
    CHECK(!X.contains(5));
    CHECK(*X.index_of(4) == 1);
    CHECK_THROWS_AS(inst({1, 1, 2}), std::invalid_argument);
    CHECK(Instance{}.empty());
}

TEST_CASE("ap canonical form") {
    CHECK_THROWS_AS(Ap(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Ap(0, 2, 1), std::invalid_argument);   // singleton must have diff 0
    CHECK_THROWS_AS(Ap(0, 0, 3), std::invalid_argument);   // multi needs positive diff
    CHECK_THROWS_AS(Ap(0, -2, 3), std::invalid_argument);  // ascending orientation
    Ap ap(3, 4, 3);
    CHECK(ap.last() == 11);
    CHECK(ap.elements() == ints({3, 7, 11}));
    CHECK(ap.contains(7));
    CHECK(!ap.contains(5));
    CHECK(!ap.contains(15));
}

TEST_CASE("is_ap") {
    CHECK(is_ap(ints({3, 5, 7})));
    CHECK(!is_ap(ints({1, 2, 4})));
    CHECK(is_ap({}));
    CHECK(is_ap(ints({42})));
}

TEST_CASE("make_ap") {
    Instance X = inst({0, 4, 6, 7, 8, 9});
    CHECK(make_ap(X, 0, 4) == Ap(0, 4, 3));  // {0,4,8}
    CHECK(make_ap(X, 6, 1) == Ap(6, 1, 4));  // {6,7,8,9}
    CHECK(make_ap(X, 8, 4) == Ap(0, 4, 3));  // extends left through 4 to 0
    Instance single = inst({5});
    CHECK(make_ap(single, 5, 3) == Ap::singleton(5));
    CHECK_THROWS_AS(make_ap(X, 5, 2), std::invalid_argument);  // 5 not in X
    CHECK_THROWS_AS(make_ap(X, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_ap(X, 4, -2), std::invalid_argument);
}

TEST_CASE("intersect examples") {
    SUBCASE("congruence intersection") {
        auto r = intersect(Ap(0, 2, 10), Ap(0, 3, 7));
        REQUIRE(r.has_value());
        CHECK(r->elements() == ints({0, 6, 12, 18}));
    }
    SUBCASE("parity disjoint") {
        CHECK(!intersect(Ap(0, 2, 3), Ap(1, 2, 3)).has_value());
    }
    SUBCASE("idempotence") {
        Ap a(5, 7, 4);
        auto r = intersect(a, a);
        REQUIRE(r.has_value());
        CHECK(*r == a);
    }
    SUBCASE("singletons") {
        CHECK(*intersect(Ap::singleton(6), Ap(0, 2, 5)) == Ap::singleton(6));
        CHECK(!intersect(Ap::singleton(7), Ap(0, 2, 5)).has_value());
    }
}

TEST_CASE("prefix_meet") {
    Instance X = inst({0, 4, 6, 7, 8, 9});
    CHECK(*prefix_meet(6, 1, X) == Ap(6, 1, 4));             // {6,7,8,9}
    CHECK(*prefix_meet(8, 2, X) == Ap::singleton(8));        // 10 not in X
    CHECK(*prefix_meet(6, 1, X, {Integer(8)}) == Ap(6, 1, 2));  // {6,7}
    CHECK(!prefix_meet(5, 1, X).has_value());                // start outside X
    CHECK(!prefix_meet(6, 1, X, {Integer(6)}).has_value());  // start blocked
    CHECK(*prefix_meet(4, 0, X) == Ap::singleton(4));        // constant probe
}

TEST_CASE("enumerate_maximal_aps") {
    CHECK(element_sets(enumerate_maximal_aps(inst({0, 2, 4}))) ==
          std::set<std::vector<Integer>>{ints({0, 2, 4}), ints({0, 4})});
    CHECK(element_sets(enumerate_maximal_aps(inst({7}))) ==
          std::set<std::vector<Integer>>{ints({7})});
    CHECK(element_sets(enumerate_maximal_aps(inst({1, 2, 4, 8}))) ==
          std::set<std::vector<Integer>>{ints({1, 2}), ints({2, 4}), ints({4, 8}), ints({1, 4}),
                                         ints({2, 8}), ints({1, 8})});
}

TEST_CASE("enumerate_all_aps") {
    auto aps = enumerate_all_aps(inst({0, 2, 4}));
    CHECK(aps.size() == 7);
    CHECK(element_sets(aps) ==
          std::set<std::vector<Integer>>{ints({0}), ints({2}), ints({4}), ints({0, 2}),
                                         ints({2, 4}), ints({0, 4}), ints({0, 2, 4})});
    CHECK(enumerate_all_aps(Instance{}).empty());
    // Non-maximal progressions are kept as distinct entries.
    auto sets = element_sets(enumerate_all_aps(inst({0, 4, 6, 7, 8, 9})));
    CHECK(sets.count(ints({0, 4})) == 1);
    CHECK(sets.count(ints({0, 4, 8})) == 1);
}

TEST_CASE("has_three_term_ap") {
    CHECK(has_three_term_ap(inst({3, 5, 7})));
    CHECK(!has_three_term_ap(inst({1, 2, 4, 8, 16, 32})));
    CHECK(!has_three_term_ap(Instance{}));
}

TEST_CASE("verify_solution") {
    Instance X = inst({0, 4, 6, 7, 8, 9});
    Solution exact{CoverKind::exact_cover, {Ap(0, 4, 2), Ap(6, 1, 4)}};
    CHECK(verify_solution(X, exact).ok);

    Solution overlapping{CoverKind::exact_cover, {Ap(0, 4, 3), Ap(6, 1, 4)}};
    auto r = verify_solution(X, overlapping);
    CHECK(!r.ok);
    CHECK(r.diagnostic.find("overlap") != std::string::npos);

    Solution as_cover{CoverKind::cover, {Ap(0, 4, 3), Ap(6, 1, 4)}};
    CHECK(verify_solution(X, as_cover).ok);

    Solution outside{CoverKind::cover, {Ap(0, 1, 2), Ap(4, 1, 6)}};
    auto r2 = verify_solution(X, outside);
    CHECK(!r2.ok);
    CHECK(r2.diagnostic.find("not contained") != std::string::npos);

    Solution incomplete{CoverKind::cover, {Ap(6, 1, 4)}};
    auto r3 = verify_solution(X, incomplete);
    CHECK(!r3.ok);
    CHECK(r3.diagnostic.find("uncovered") != std::string::npos);
}

TEST_SUITE_END();
