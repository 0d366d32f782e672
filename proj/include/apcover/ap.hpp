#pragma once

#include "apcover/instance.hpp"
#include "apcover/integer.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace apcover {

// A finite arithmetic progression in canonical form:
//   - length >= 1,
//   - a singleton has difference 0,
//   - a progression of length >= 2 is stored ascending with difference > 0.
// The canonical form makes equality and deduplication trivial.
class Ap {
public:
    Ap(Integer first, Integer diff, std::int64_t length);

    static Ap singleton(Integer value) { return Ap(std::move(value), 0, 1); }

    const Integer& first() const { return first_; }
    const Integer& diff() const { return diff_; }
    std::int64_t length() const { return len_; }

    Integer last() const { return first_ + diff_ * (len_ - 1); }
    Integer element(std::int64_t i) const { return first_ + diff_ * i; }

    bool contains(const Integer& v) const;
    std::vector<Integer> elements() const;

    bool operator==(const Ap& other) const {
        return first_ == other.first_ && diff_ == other.diff_ && len_ == other.len_;
    }
    bool operator<(const Ap& other) const;

    std::string to_string() const;

private:
    Integer first_;
    Integer diff_;
    std::int64_t len_;
};

enum class CoverKind { cover, exact_cover };

struct Solution {
    CoverKind kind = CoverKind::cover;
    std::vector<Ap> aps;
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;  // names the first violated condition when !ok
};

// True iff the sorted distinct sequence is empty, a singleton, or has constant
// consecutive difference.
bool is_ap(const std::vector<Integer>& sorted_values);

// The inclusion-maximal AP through a with difference d > 0 whose elements all
// lie in X. Throws std::invalid_argument if a is not in X or d <= 0.
Ap make_ap(const Instance& X, const Integer& a, const Integer& d);

// Element-set intersection of two APs, computed by CRT on the two congruences
// and clipped to the overlapping range. Empty intersection -> nullopt.
std::optional<Ap> intersect(const Ap& a, const Ap& b);

// Longest prefix start, start+d, start+2d, ... whose elements are all in X and
// none of which is blocked. d = 0 degenerates to a singleton probe.
// Returns nullopt when even the first element is excluded.
std::optional<Ap> prefix_meet(const Integer& start, const Integer& diff, const Instance& X,
                              const std::set<Integer>& blocked = {});

// All inclusion-maximal APs contained in X, deduplicated and sorted.
// Singletons appear only when not inside any multi-element maximal AP.
std::vector<Ap> enumerate_maximal_aps(const Instance& X);

// Every AP contained in X (all contiguous sub-progressions of maximal APs,
// plus all singletons), deduplicated and sorted. Intended for small oracles.
std::vector<Ap> enumerate_all_aps(const Instance& X);

// True iff some x < y < z in X satisfies x + z = 2y.
bool has_three_term_ap(const Instance& X);

VerifyResult verify_solution(const Instance& X, const Solution& s);

}  // namespace apcover
