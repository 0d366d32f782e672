#include "apcover/zp.hpp"

#include "apcover/errors.hpp"
#include "apcover/oracle.hpp"

#include <doctest.h>

#include <random>
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

ZpInstance zp(long long p, std::vector<long long> elements) {
    ZpInstance out;
    out.p = p;
    for (long long e : elements) out.elements.push_back(e);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("zp");

TEST_CASE("deterministic primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(Integer(-7)));
    CHECK(is_prime(1009));
    CHECK(!is_prime(1001));
    CHECK(is_prime(Integer("1000000007")));
    CHECK(is_prime(Integer("2305843009213693951")));   // 2^61 - 1
    CHECK(!is_prime(Integer("2305843009213693953")));
    // Strong pseudoprime to several bases.
    CHECK(!is_prime(Integer("3215031751")));
}

TEST_CASE("mod_project") {
    CHECK(mod_project(inst({3, 6, 18}), 3) == ints({0, 0, 0}));
    CHECK(mod_project(inst({0, 1, 2, 4}), 11) == ints({0, 1, 2, 4}));
    CHECK(mod_project(Instance{}, 5).empty());
    CHECK(mod_project(inst({-1, -12}), 5) == ints({3, 4}));
}

TEST_CASE("suitable primes") {
    Instance X = inst({0, 1, 2, 4});
    CHECK(!is_suitable_prime(7, X));  // 2*4 - 0 - 1 = 7
    CHECK(is_suitable_prime(11, X));
    CHECK(is_suitable_prime(3, inst({0, 1})));
    CHECK(!is_suitable_prime(2, inst({0, 1})));  // 2 | 2*0 - 1 - 1
    // The multiset collapse example: 3 divides every pairwise difference.
    CHECK(!is_suitable_prime(3, inst({3, 6, 18})));
}

TEST_CASE("reduce_mod_p") {
    SUBCASE("smallest suitable prime for the doubling prefix") {
        auto [p, zi] = reduce_mod_p(inst({0, 1, 2, 4}));
        CHECK(p == 11);
        CHECK(zi.elements == ints({0, 1, 2, 4}));
    }
    SUBCASE("pair instance") {
        auto [p, zi] = reduce_mod_p(inst({0, 1}));
        CHECK(p == 3);
        CHECK(zi.elements.size() == 2);
    }
    SUBCASE("singleton: nothing constrains p") {
        auto [p, zi] = reduce_mod_p(inst({5}));
        CHECK(p == 2);
        CHECK(zi.elements == ints({1}));
    }
    SUBCASE("projection stays injective") {
        std::mt19937_64 rng(8);
        for (int it = 0; it < 30; ++it) {
            std::set<Integer> vals;
            const int n = std::uniform_int_distribution<int>(1, 8)(rng);
            while (static_cast<int>(vals.size()) < n) {
                vals.insert(std::uniform_int_distribution<long long>(0, 1 << 20)(rng));
            }
            Instance X(std::vector<Integer>(vals.begin(), vals.end()));
            auto [p, zi] = reduce_mod_p(X);
            CHECK(is_suitable_prime(p, X));
            CHECK(zi.elements.size() == X.size());
        }
    }
}

TEST_CASE("zp_enumerate_aps") {
    SUBCASE("full cycle") {
        auto aps = zp_enumerate_aps(zp(5, {0, 1, 2, 3, 4}));
        bool has_cycle = false;
        for (const ZpAp& ap : aps) has_cycle = has_cycle || ap.len == 5;
        CHECK(has_cycle);
    }
    SUBCASE("no 3-term modular AP on {0,1,3} mod 7") {
        auto aps = zp_enumerate_aps(zp(7, {0, 1, 3}));
        for (const ZpAp& ap : aps) CHECK(ap.len <= 2);
    }
    SUBCASE("singleton") {
        auto aps = zp_enumerate_aps(zp(3, {0}));
        REQUIRE(aps.size() == 1);
        CHECK(aps[0].len == 1);
    }
    SUBCASE("wrap-around progressions are found") {
        // 4, 6, 1 (mod 7) is an AP with difference 2.
        auto aps = zp_enumerate_aps(zp(7, {1, 4, 6}));
        bool has_triple = false;
        for (const ZpAp& ap : aps) has_triple = has_triple || ap.len == 3;
        CHECK(has_triple);
    }
    CHECK_THROWS_AS(zp_enumerate_aps(zp(1'000'003, {0})), CapacityError);
}

TEST_CASE("zp solvers") {
    CHECK(zp_cover_decide(zp(5, {0, 1, 2, 3, 4}), 1));
    CHECK(!zp_cover_decide(zp(7, {0, 1, 3}), 1));
    CHECK(zp_cover_decide(zp(7, {0, 1, 3}), 2));
    // The collapsed projection of {3,6,18} under the unsuitable prime 3.
    CHECK(zp_cover_decide(zp(3, {0}), 1));
    CHECK(!zp_exact_cover_decide(zp(7, {0, 1, 3}), 1));
    CHECK(zp_exact_cover_decide(zp(7, {0, 1, 3}), 2));
}

TEST_CASE("integer APs project to modular APs") {
    std::mt19937_64 rng(5);
    const long long primes[] = {2, 3, 5, 7, 13, 101};
    for (int it = 0; it < 300; ++it) {
        long long a = std::uniform_int_distribution<long long>(-500, 500)(rng);
        long long d = std::uniform_int_distribution<long long>(1, 40)(rng);
        int len = std::uniform_int_distribution<int>(1, 10)(rng);
        long long p = primes[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
        Integer diff_mod;
        bool constant = true;
        for (int i = 1; i < len; ++i) {
            Integer step = mod_floor(Integer(a + i * d) - Integer(a + (i - 1) * d), p);
            if (i == 1) {
                diff_mod = step;
            } else if (step != diff_mod) {
                constant = false;
            }
        }
        CHECK(constant);
    }
}

TEST_CASE("reduction equivalence on small instances") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 25; ++it) {
        std::set<Integer> vals;
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        while (static_cast<int>(vals.size()) < n) {
            vals.insert(std::uniform_int_distribution<long long>(0, 1 << 20)(rng));
        }
        Instance X(std::vector<Integer>(vals.begin(), vals.end()));
        auto [p, zi] = reduce_mod_p(X);
        (void)p;
        auto cover = zp_cover_minimize(zi);
        auto exact = zp_exact_cover_minimize(zi);
        REQUIRE(cover.has_value());
        REQUIRE(exact.has_value());
        CHECK(cover->k_min == brute_cap(X));
        CHECK(exact->k_min == brute_xcap(X));
    }
}

TEST_CASE("three-AP preservation checker") {
    Instance X = inst({0, 1, 2, 4});
    CHECK(is_three_ap_preserving(X, ints({0, 2, 4, 8})));
    CHECK(!is_three_ap_preserving(X, ints({0, 1, 2, 5})));
    CHECK(is_three_ap_preserving(X, X.values()));
    // Affine images preserve, including negated ones.
    CHECK(is_three_ap_preserving(X, ints({7, 4, 1, -5})));  // -3x + 7
    CHECK_THROWS_AS(is_three_ap_preserving(X, ints({0, 1})), std::invalid_argument);

    // Agreement with definitional triple enumeration on random pairs.
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        const int n = std::uniform_int_distribution<int>(3, 7)(rng);
        std::set<Integer> xs;
        while (static_cast<int>(xs.size()) < n) {
            xs.insert(std::uniform_int_distribution<int>(0, 40)(rng));
        }
        Instance XX(std::vector<Integer>(xs.begin(), xs.end()));
        std::vector<Integer> a;
        for (int i = 0; i < n; ++i) {
            a.push_back(std::uniform_int_distribution<int>(0, 40)(rng));
        }
        auto ap3 = [](const Integer& u, const Integer& v, const Integer& w) {
            return u + v == 2 * w || u + w == 2 * v || v + w == 2 * u;
        };
        bool expect = true;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    if (ap3(XX[i], XX[j], XX[k]) != ap3(a[i], a[j], a[k])) expect = false;
                }
            }
        }
        CHECK(is_three_ap_preserving(XX, a) == expect);
    }
}

TEST_CASE("powers family") {
    CHECK(powers_family(1).values() == ints({0, 1, 2}));
    CHECK(powers_family(2).values() == ints({0, 1, 2, 4}));
    CHECK(powers_family(4).values() == ints({0, 1, 2, 4, 8, 16}));
}

TEST_CASE("search_small_preserver") {
    SUBCASE("n=1 within 10: identity-scale solutions exist") {
        auto found = search_small_preserver(1, 10);
        REQUIRE(found.has_value());
        CHECK(is_three_ap_preserving(powers_family(1), *found));
    }
    SUBCASE("n=2 within 8") {
        auto found = search_small_preserver(2, 8);
        REQUIRE(found.has_value());
        CHECK(is_three_ap_preserving(powers_family(2), *found));
    }
    SUBCASE("caps") {
        CHECK_THROWS_AS(search_small_preserver(7, 10), CapacityError);
        CHECK_THROWS_AS(search_small_preserver(2, Integer(100'000)), CapacityError);
    }
}

TEST_SUITE_END();
