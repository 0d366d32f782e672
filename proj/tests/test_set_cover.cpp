#include "apcover/set_cover.hpp"

#include "apcover/errors.hpp"

#include <doctest.h>

#include <bit>
#include <random>

using namespace apcover;

namespace {

SetCoverInstance make(int u, std::vector<std::uint32_t> masks) {
    SetCoverInstance inst;
    inst.universe_size = u;
    for (std::size_t i = 0; i < masks.size(); ++i) inst.add_set(masks[i], static_cast<int>(i));
    return inst;
}

// Exhaustive scan over all sub-families.
int brute_min(const SetCoverInstance& inst, bool exact) {
    const std::uint32_t full = (1u << inst.universe_size) - 1;
    int best = -1;
    for (std::uint32_t pick = 0; pick < (1u << inst.masks.size()); ++pick) {
        std::uint32_t covered = 0;
        bool disjoint = true;
        int count = 0;
        for (std::size_t s = 0; s < inst.masks.size(); ++s) {
            if (!(pick & (1u << s))) continue;
            if (covered & inst.masks[s]) disjoint = false;
            covered |= inst.masks[s];
            ++count;
        }
        if (covered != full) continue;
        if (exact && !disjoint) continue;
        if (best < 0 || count < best) best = count;
    }
    return best;
}

}  // namespace

TEST_SUITE_BEGIN("set_cover");

TEST_CASE("min_set_cover examples") {
    // u=3, sets {110, 011, 001} as element bitmasks.
    auto r = min_set_cover(make(3, {0b110, 0b011, 0b001}));
    REQUIRE(r.has_value());
    CHECK(r->size == 2);
    CHECK(r->chosen == std::vector<int>{0, 1});

    auto empty = min_set_cover(make(0, {}));
    REQUIRE(empty.has_value());
    CHECK(empty->size == 0);

    CHECK(!min_set_cover(make(2, {0b10})).has_value());
}

TEST_CASE("min_exact_cover examples") {
    auto r = min_exact_cover(make(3, {0b100, 0b011, 0b110, 0b001}));
    REQUIRE(r.has_value());
    CHECK(r->size == 2);
    CHECK(r->chosen == std::vector<int>{0, 1});

    auto one = min_exact_cover(make(2, {0b11, 0b10, 0b01}));
    REQUIRE(one.has_value());
    CHECK(one->size == 1);

    // Overlapping pair rejected; the singleton full set still wins.
    auto pair = min_exact_cover(make(2, {0b11, 0b10}));
    REQUIRE(pair.has_value());
    CHECK(pair->size == 1);

    CHECK(!min_exact_cover(make(3, {0b110, 0b011})).has_value());
}

TEST_CASE("capacity") {
    SetCoverInstance inst;
    inst.universe_size = 26;
    CHECK_THROWS_AS(min_set_cover(inst), CapacityError);
    inst.universe_size = 12;
    inst.max_universe = 10;
    CHECK_THROWS_AS(min_set_cover(inst), CapacityError);
}

TEST_CASE("witnesses verify and match brute force") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 400; ++it) {
        const int u = std::uniform_int_distribution<int>(1, 10)(rng);
        const int m = std::uniform_int_distribution<int>(1, 12)(rng);
        const std::uint32_t full = (1u << u) - 1;
        SetCoverInstance inst;
        inst.universe_size = u;
        for (int s = 0; s < m; ++s) {
            inst.add_set(std::uniform_int_distribution<std::uint32_t>(1, full)(rng), s);
        }
        for (bool exact : {false, true}) {
            auto got = exact ? min_exact_cover(inst) : min_set_cover(inst);
            int expect = brute_min(inst, exact);
            if (expect < 0) {
                CHECK(!got.has_value());
                continue;
            }
            REQUIRE(got.has_value());
            CHECK(got->size == expect);
            CHECK(got->chosen.size() == static_cast<std::size_t>(expect));
            std::uint32_t covered = 0;
            bool disjoint = true;
            for (int id : got->chosen) {
                if (covered & inst.masks[id]) disjoint = false;
                covered |= inst.masks[id];
            }
            CHECK(covered == full);
            if (exact) CHECK(disjoint);
        }
    }
}

TEST_CASE("monotone under added sets") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const int u = std::uniform_int_distribution<int>(1, 8)(rng);
        const std::uint32_t full = (1u << u) - 1;
        SetCoverInstance inst;
        inst.universe_size = u;
        const int m = std::uniform_int_distribution<int>(2, 8)(rng);
        for (int s = 0; s < m; ++s) {
            inst.add_set(std::uniform_int_distribution<std::uint32_t>(1, full)(rng), s);
        }
        auto before = min_set_cover(inst);
        inst.add_set(std::uniform_int_distribution<std::uint32_t>(1, full)(rng), m);
        auto after = min_set_cover(inst);
        if (before.has_value()) {
            REQUIRE(after.has_value());
            CHECK(after->size <= before->size);
        }
    }
}

TEST_SUITE_END();
