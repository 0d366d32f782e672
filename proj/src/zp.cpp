#include "apcover/zp.hpp"

#include "apcover/errors.hpp"
#include "apcover/set_cover.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace apcover {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    static const Integer deterministic_limit("3317044064679887385961981");
    if (n >= deterministic_limit) {
        throw CapacityError("is_prime: candidate exceeds the deterministic witness range");
    }
    Integer d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : small_primes) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<Integer> mod_project(const Instance& X, const Integer& p) {
    if (p < 2) throw std::invalid_argument("mod_project: modulus must be >= 2");
    std::vector<Integer> out;
    out.reserve(X.size());
    for (const Integer& x : X) out.push_back(mod_floor(x, p));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct ConstraintValues {
    std::set<Integer> pair_diffs;    // |x - y| over distinct pairs
    std::set<Integer> triple_vals;   // nonzero |2x - y - z| over all triples
};

ConstraintValues constraint_values(const Instance& X) {
    ConstraintValues cv;
    const std::size_t n = X.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            cv.pair_diffs.insert(X[j] - X[i]);
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = y; z < n; ++z) {  // 2x-y-z symmetric in y,z
                Integer v = 2 * X[x] - X[y] - X[z];
                if (v != 0) cv.triple_vals.insert(abs(v));
            }
        }
    }
    return cv;
}

bool suitable_against(const Integer& p, const ConstraintValues& cv) {
    for (const Integer& v : cv.pair_diffs) {
        if (v % p == 0) return false;
    }
    for (const Integer& v : cv.triple_vals) {
        if (v % p == 0) return false;
    }
    return true;
}

}  // namespace

bool is_suitable_prime(const Integer& p, const Instance& X) {
    return suitable_against(p, constraint_values(X));
}

std::pair<Integer, ZpInstance> reduce_mod_p(const Instance& X, ReduceStats* stats) {
    const ConstraintValues cv = constraint_values(X);
    if (stats) {
        stats->pair_values = cv.pair_diffs.size();
        stats->triple_values = cv.triple_vals.size();
    }
    for (Integer c = 2;; ++c) {
        if (!is_prime(c)) continue;
        if (stats) ++stats->primes_tested;
        if (!suitable_against(c, cv)) continue;
        ZpInstance inst;
        inst.p = c;
        inst.elements = mod_project(X, c);
        return {c, std::move(inst)};
    }
}

namespace {

struct ZpFamily {
    std::vector<ZpAp> aps;
    std::vector<std::uint32_t> masks;  // parallel, over element indices
};

ZpFamily zp_family(const ZpInstance& inst, const ZpEnumLimits& limits) {
    if (static_cast<int>(inst.elements.size()) > limits.max_elements) {
        throw CapacityError("zp_enumerate_aps: element count exceeds cap of " +
                            std::to_string(limits.max_elements));
    }
    if (inst.p > limits.max_modulus) {
        throw CapacityError("zp_enumerate_aps: modulus exceeds cap");
    }
    const std::int64_t p = static_cast<std::int64_t>(inst.p);
    std::unordered_map<std::int64_t, int> index;
    for (std::size_t i = 0; i < inst.elements.size(); ++i) {
        index.emplace(static_cast<std::int64_t>(inst.elements[i]), static_cast<int>(i));
    }

    ZpFamily fam;
    std::unordered_set<std::uint32_t> seen;
    auto emit = [&](std::int64_t start, std::int64_t diff, std::int64_t len, std::uint32_t mask) {
        if (seen.insert(mask).second) {
            fam.aps.push_back(ZpAp{Integer(start), Integer(diff), len});
            fam.masks.push_back(mask);
        }
    };
    for (const Integer& s_big : inst.elements) {
        const std::int64_t s = static_cast<std::int64_t>(s_big);
        emit(s, 0, 1, 1u << index.at(s));
        for (std::int64_t d = 1; d < p; ++d) {
            std::uint32_t mask = 1u << index.at(s);
            std::int64_t cur = s;
            for (std::int64_t len = 2; len <= p; ++len) {
                cur = (cur + d) % p;
                auto it = index.find(cur);
                if (it == index.end()) break;
                mask |= 1u << it->second;
                emit(s, d, len, mask);
            }
        }
    }
    return fam;
}

std::optional<ZpSolveResult> zp_minimize(const ZpInstance& inst, const ZpEnumLimits& limits,
                                         bool exact) {
    if (inst.elements.empty()) return ZpSolveResult{0, {}};
    ZpFamily fam = zp_family(inst, limits);
    SetCoverInstance sc;
    sc.universe_size = static_cast<int>(inst.elements.size());
    for (std::size_t i = 0; i < fam.masks.size(); ++i) {
        sc.add_set(fam.masks[i], static_cast<int>(i));
    }
    auto res = exact ? min_exact_cover(sc) : min_set_cover(sc);
    if (!res) return std::nullopt;
    ZpSolveResult out;
    out.k_min = res->size;
    for (int id : res->chosen) out.witness.push_back(fam.aps[id]);
    return out;
}

}  // namespace

std::vector<ZpAp> zp_enumerate_aps(const ZpInstance& inst, const ZpEnumLimits& limits) {
    return zp_family(inst, limits).aps;
}

bool zp_cover_decide(const ZpInstance& inst, int k, const ZpEnumLimits& limits) {
    auto res = zp_cover_minimize(inst, limits);
    return res && res->k_min <= k;
}

bool zp_exact_cover_decide(const ZpInstance& inst, int k, const ZpEnumLimits& limits) {
    auto res = zp_exact_cover_minimize(inst, limits);
    return res && res->k_min <= k;
}

std::optional<ZpSolveResult> zp_cover_minimize(const ZpInstance& inst, const ZpEnumLimits& limits) {
    return zp_minimize(inst, limits, /*exact=*/false);
}

std::optional<ZpSolveResult> zp_exact_cover_minimize(const ZpInstance& inst,
                                                     const ZpEnumLimits& limits) {
    return zp_minimize(inst, limits, /*exact=*/true);
}

namespace {

// Three-AP-ness of an unordered triple: some relabeling has 2*mid = lo + hi.
// Handles repeated values: {a, a, b} is an AP only when a == b.
bool triple_is_ap(const Integer& u, const Integer& v, const Integer& w) {
    return u + v == 2 * w || u + w == 2 * v || v + w == 2 * u;
}

}  // namespace

bool is_three_ap_preserving(const Instance& X, const std::vector<Integer>& a) {
    if (X.size() != a.size()) {
        throw std::invalid_argument("is_three_ap_preserving: size mismatch");
    }
    const std::size_t n = X.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (triple_is_ap(X[i], X[j], X[k]) != triple_is_ap(a[i], a[j], a[k])) {
                    return false;
                }
            }
        }
    }
    return true;
}

Instance powers_family(int n) {
    if (n < 0) throw std::invalid_argument("powers_family: n must be >= 0");
    std::vector<Integer> values{0};
    for (int i = 2; i <= n + 2; ++i) values.push_back(Integer(1) << (i - 2));
    return Instance(std::move(values));
}

namespace {

struct PreserverSearch {
    std::vector<Integer> x;  // the doubling family
    Integer bound;
    std::vector<Integer> chosen;

    bool consistent(std::size_t t, const Integer& v) const {
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = i + 1; j < t; ++j) {
                if (triple_is_ap(x[i], x[j], x[t]) != triple_is_ap(chosen[i], chosen[j], v)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool dfs(std::size_t t) {
        if (t == x.size()) return true;
        // An AP triple on the x side pins the candidate values for position t
        // to at most three; otherwise fall back to scanning the range.
        std::vector<Integer> candidates;
        bool constrained = false;
        for (std::size_t i = 0; i < t && !constrained; ++i) {
            for (std::size_t j = i + 1; j < t; ++j) {
                if (!triple_is_ap(x[i], x[j], x[t])) continue;
                candidates.push_back(2 * chosen[j] - chosen[i]);
                candidates.push_back(2 * chosen[i] - chosen[j]);
                if ((chosen[i] + chosen[j]) % 2 == 0) {
                    candidates.push_back((chosen[i] + chosen[j]) / 2);
                }
                constrained = true;
                break;
            }
        }
        if (!constrained) {
            for (Integer v = 0; v <= bound; ++v) candidates.push_back(v);
        } else {
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        }
        for (const Integer& v : candidates) {
            if (v < 0 || v > bound) continue;
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
            if (!consistent(t, v)) continue;
            chosen.push_back(v);
            if (dfs(t + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Integer>> search_small_preserver(int n, const Integer& bound) {
    if (n < 0 || n + 2 > 8) throw CapacityError("search_small_preserver: family too large");
    if (bound < 0 || bound > 4096) throw CapacityError("search_small_preserver: bound too large");
    PreserverSearch search;
    search.x = powers_family(n).values();
    search.bound = bound;
    search.chosen.reserve(search.x.size());
    if (search.dfs(0)) return search.chosen;
    return std::nullopt;
}

}  // namespace apcover
