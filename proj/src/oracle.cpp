#include "apcover/oracle.hpp"

#include "apcover/errors.hpp"
#include "apcover/set_cover.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace apcover {

namespace {

std::uint32_t ap_mask(const Instance& X, const Ap& ap) {
    std::uint32_t mask = 0;
    Integer v = ap.first();
    for (std::int64_t i = 0; i < ap.length(); ++i) {
        mask |= 1u << *X.index_of(v);
        v += ap.diff();
    }
    return mask;
}

std::pair<int, Solution> brute_by_family(const Instance& X, const std::vector<Ap>& family,
                                         CoverKind kind) {
    SetCoverInstance inst;
    inst.universe_size = static_cast<int>(X.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        inst.add_set(ap_mask(X, family[i]), static_cast<int>(i));
    }
    auto res = kind == CoverKind::cover ? min_set_cover(inst) : min_exact_cover(inst);
    if (!res) throw std::logic_error("brute solver: instance unexpectedly infeasible");
    Solution sol;
    sol.kind = kind;
    for (int id : res->chosen) sol.aps.push_back(family[id]);
    return {res->size, sol};
}

}  // namespace

std::pair<int, Solution> brute_cap_witness(const Instance& X, int max_n) {
    if (static_cast<int>(X.size()) > max_n) {
        throw CapacityError("brute_cap: instance larger than cap " + std::to_string(max_n));
    }
    if (X.empty()) return {0, Solution{CoverKind::cover, {}}};
    return brute_by_family(X, enumerate_maximal_aps(X), CoverKind::cover);
}

std::pair<int, Solution> brute_xcap_witness(const Instance& X, int max_n) {
    if (static_cast<int>(X.size()) > max_n) {
        throw CapacityError("brute_xcap: instance larger than cap " + std::to_string(max_n));
    }
    if (X.empty()) return {0, Solution{CoverKind::exact_cover, {}}};
    return brute_by_family(X, enumerate_all_aps(X), CoverKind::exact_cover);
}

int brute_cap(const Instance& X, int max_n) { return brute_cap_witness(X, max_n).first; }

int brute_xcap(const Instance& X, int max_n) { return brute_xcap_witness(X, max_n).first; }

bool check_cve_property(int k, const std::vector<ResidueClass>& family, std::int64_t horizon) {
    if (k < 0 || k > 20) throw std::invalid_argument("check_cve_property: k out of range");
    for (const auto& rc : family) {
        if (rc.modulus < 1) throw std::invalid_argument("check_cve_property: modulus must be >= 1");
    }
    auto covered = [&](std::int64_t x) {
        for (const auto& rc : family) {
            if ((x - rc.residue) % rc.modulus == 0) return true;
        }
        return false;
    };
    const std::int64_t prefix = std::int64_t{1} << k;
    for (std::int64_t x = 1; x <= prefix; ++x) {
        if (!covered(x)) return true;  // premise fails, implication vacuous
    }
    for (std::int64_t x = 1; x <= horizon; ++x) {
        if (!covered(x)) return false;
    }
    return true;
}

namespace {

// Premise test for one configuration: the upward-infinite progressions cover
// {0,...,t-1} and none of them contains t. Starts above t-1 never help.
bool lemma3_premise(int t, const std::vector<std::pair<int, int>>& aps) {
    for (const auto& [a, d] : aps) {
        if (a <= t && (t - a) % d == 0) return false;  // progression hits t
    }
    for (int x = 0; x < t; ++x) {
        bool hit = false;
        for (const auto& [a, d] : aps) {
            if (a <= x && (x - a) % d == 0) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

Lemma3Stats check_lemma3_exhaustive(int k, int t_max, int start_range, int diff_max) {
    if (k < 0 || k > 3) throw CapacityError("check_lemma3_exhaustive: k too large for exhaustive scan");
    Lemma3Stats stats;
    std::vector<std::pair<int, int>> aps(k);
    for (int t = 0; t <= t_max; ++t) {
        // Odometer over the k (start, diff) pairs.
        std::vector<int> a(k, -start_range), d(k, 1);
        while (true) {
            for (int i = 0; i < k; ++i) aps[i] = {a[i], d[i]};
            if (lemma3_premise(t, aps)) {
                ++stats.configurations;
                if (t >= (1 << k)) ++stats.violations;
            }
            int pos = 0;
            for (; pos < k; ++pos) {
                if (d[pos] < diff_max) {
                    ++d[pos];
                    break;
                }
                d[pos] = 1;
                if (a[pos] < t - 1) {
                    ++a[pos];
                    break;
                }
                a[pos] = -start_range;
            }
            if (pos == k) break;
        }
    }
    return stats;
}

Lemma3Stats check_lemma3_sampled(int k, std::uint64_t samples, std::uint64_t seed) {
    Lemma3Stats stats;
    std::mt19937_64 rng(seed);
    const int t_lo = 1 << k;           // only the interesting region can violate
    const int t_hi = (1 << k) + 8;
    std::uniform_int_distribution<int> t_dist(t_lo, t_hi);
    std::vector<std::pair<int, int>> aps(k);
    for (std::uint64_t s = 0; s < samples; ++s) {
        int t = t_dist(rng);
        std::uniform_int_distribution<int> a_dist(-t, t - 1);
        std::uniform_int_distribution<int> d_dist(1, t + 4);
        for (int i = 0; i < k; ++i) aps[i] = {a_dist(rng), d_dist(rng)};
        if (lemma3_premise(t, aps)) {
            ++stats.configurations;
            ++stats.violations;  // any premise-satisfying config here has t >= 2^k
        }
    }
    return stats;
}

bool check_interruption_bound(const Instance& X, const Solution& exact_cover) {
    const int k = static_cast<int>(exact_cover.aps.size());
    if (k == 0) return true;
    const std::int64_t bound = (std::int64_t{1} << (k - 1)) - 1;
    for (const Ap& s : enumerate_all_aps(X)) {
        for (const Ap& si : exact_cover.aps) {
            auto ti = intersect(s, si);
            if (!ti || ti->length() < k + 1) continue;
            // Elements of s strictly between consecutive elements of ti.
            for (std::int64_t j = 0; j + 1 < ti->length(); ++j) {
                Integer lo = ti->element(j);
                Integer hi = ti->element(j + 1);
                Integer between = (hi - lo) / s.diff() - 1;
                if (between > bound) return false;
            }
        }
    }
    return true;
}

}  // namespace apcover
