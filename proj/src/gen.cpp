#include "apcover/gen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace apcover {

namespace {

// Uniform Integer in [0, range), built from 64-bit draws.
Integer draw(std::mt19937_64& rng, const Integer& range) {
    if (range <= 1) return 0;
    unsigned bits = 0;
    Integer r = range - 1;
    while (r > 0) {
        ++bits;
        r >>= 1;
    }
    while (true) {
        Integer v = 0;
        for (unsigned got = 0; got < bits; got += 64) {
            v = (v << 64) | rng();
        }
        v >>= (64 - bits % 64) % 64;
        if (v < range) return v;
    }
}

}  // namespace

std::pair<Instance, std::vector<Ap>> gen_union_of_aps(int k, int len, const Integer& max_value,
                                                      std::uint64_t seed, bool disjoint) {
    if (k < 1 || len < 1 || max_value < 1) {
        throw std::invalid_argument("gen_union_of_aps: parameters must be positive");
    }
    std::mt19937_64 rng(seed);
    std::vector<Ap> planted;
    std::set<Integer> values;
    if (disjoint) {
        // One value band per AP keeps the plant pairwise disjoint.
        Integer band = max_value / k;
        if (band < 2 * len) throw std::invalid_argument("gen_union_of_aps: range too small");
        for (int i = 0; i < k; ++i) {
            Integer lo = band * i;
            Integer diff = 1 + draw(rng, band / (2 * len) < 2 ? Integer(1) : band / (2 * len));
            Integer start = lo + draw(rng, band - diff * (len - 1));
            Ap ap = len == 1 ? Ap::singleton(start) : Ap(start, diff, len);
            planted.push_back(ap);
            for (const Integer& v : ap.elements()) values.insert(v);
        }
    } else {
        for (int i = 0; i < k; ++i) {
            Integer diff = 1 + draw(rng, std::max<Integer>(1, max_value / (2 * len)));
            Integer span = diff * (len - 1);
            if (span >= max_value) {
                diff = std::max<Integer>(1, max_value / std::max(1, len));
                span = diff * (len - 1);
            }
            Integer start = draw(rng, max_value - span);
            Ap ap = len == 1 ? Ap::singleton(start) : Ap(start, diff, len);
            planted.push_back(ap);
            for (const Integer& v : ap.elements()) values.insert(v);
        }
    }
    Instance X(std::vector<Integer>(values.begin(), values.end()));
    return {std::move(X), std::move(planted)};
}

Instance gen_no3ap(int n) {
    if (n < 0) throw std::invalid_argument("gen_no3ap: n must be >= 0");
    std::vector<Integer> chosen;
    Integer c = 0;
    while (static_cast<int>(chosen.size()) < n) {
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
                if (chosen[i] + c == 2 * chosen[j]) ok = false;  // c would complete a 3-AP
            }
        }
        if (ok) chosen.push_back(c);
        ++c;
    }
    Instance X(std::move(chosen));
    if (has_three_term_ap(X)) throw std::logic_error("gen_no3ap: construction failed");
    return X;
}

Instance gen_random(int n, const Integer& lo, const Integer& hi, std::uint64_t seed) {
    if (n < 0 || hi < lo) throw std::invalid_argument("gen_random: bad parameters");
    Integer range = hi - lo + 1;
    if (range < n) throw std::invalid_argument("gen_random: range smaller than n");
    std::mt19937_64 rng(seed);
    std::set<Integer> values;
    while (static_cast<int>(values.size()) < n) {
        values.insert(lo + draw(rng, range));
    }
    return Instance(std::vector<Integer>(values.begin(), values.end()));
}

Instance gen_powers(int n) {
    if (n < 1) throw std::invalid_argument("gen_powers: n must be >= 1");
    std::vector<Integer> values{0};
    for (int i = 0; i < n; ++i) values.push_back(Integer(1) << i);
    return Instance(std::move(values));
}

}  // namespace apcover
