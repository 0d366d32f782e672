#include "apcover/xcap.hpp"

#include "apcover/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace apcover {

namespace {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// One AP slot of the search state. committed holds the elements known to be
// in the slot's AP, potential the continuation that the slot may still claim;
// both are ascending index lists into X. diff == 0 means undetermined.
struct Slot {
    std::vector<int> committed;
    std::vector<int> potential;
    Integer diff = 0;
};

class XcapSolver {
public:
    XcapSolver(const Instance& X, int k, const XcapOptions& opts) : X_(X), k_(k), opts_(opts) {}

    XcapResult run() {
        XcapResult result;
        std::vector<Slot> slots(static_cast<std::size_t>(k_));
        result.yes = rec(slots);
        result.nodes = nodes_;
        if (result.yes) {
            Solution sol{CoverKind::exact_cover, std::move(witness_)};
            auto check = verify_solution(X_, sol);
            if (!check.ok) {
                throw std::logic_error("exact_cover_decide: witness failed verification: " + check.diagnostic);
            }
            result.witness = std::move(sol);
        }
        return result;
    }

private:
    bool rec(const std::vector<Slot>& slots) {
        ++nodes_;
        if (opts_.check_invariants) check_state(slots);

        // (1) Two slots claim a common potential element: the smaller-indexed
        // conflict element decides, one of the two gives up its tail.
        int ov_i = -1, ov_j = -1, ov_c = -1;
        for (int i = 0; i < k_; ++i) {
            for (int j = i + 1; j < k_; ++j) {
                int c = first_common(slots[i].potential, slots[j].potential);
                if (c >= 0 && (ov_c < 0 || c < ov_c)) {
                    ov_c = c;
                    ov_i = i;
                    ov_j = j;
                }
            }
        }
        if (ov_c >= 0) {
            for (int victim : {ov_i, ov_j}) {
                std::vector<Slot> next = slots;
                truncate_below(next[victim].potential, ov_c);
                if (rec(next)) return true;
            }
            return false;
        }

        // (2) A slot holds exactly two elements with unknown difference:
        // branch over the candidate differences.
        for (int i = 0; i < k_; ++i) {
            if (slots[i].committed.size() == 2 && slots[i].diff == 0) {
                return branch_difference(slots, i);
            }
        }

        // (3) Everything is committed or potentially covered: emit the cover.
        Bitset covered(X_.size());
        for (const Slot& s : slots) {
            for (int e : s.committed) covered.set(e);
            for (int e : s.potential) covered.set(e);
        }
        if (covered.count() == X_.size()) {
            return emit_witness(slots);
        }

        // (4) Assign the smallest unclaimed element to a slot that can still
        // take it. Untouched slots are interchangeable, so only the first
        // empty slot is tried.
        std::size_t a_beta = 0;
        while (a_beta < X_.size() && covered.test(a_beta)) ++a_beta;
        bool tried_empty = false;
        for (int i = 0; i < k_; ++i) {
            if (slots[i].committed.size() >= 2) continue;
            if (slots[i].committed.empty()) {
                if (tried_empty) continue;
                tried_empty = true;
            }
            std::vector<Slot> next = slots;
            auto& committed = next[i].committed;
            committed.insert(std::lower_bound(committed.begin(), committed.end(),
                                              static_cast<int>(a_beta)),
                             static_cast<int>(a_beta));
            if (rec(next)) return true;
        }
        return false;
    }

    bool branch_difference(const std::vector<Slot>& slots, int i) {
        const Integer lo = X_[slots[i].committed[0]];
        const Integer hi = X_[slots[i].committed[1]];
        std::vector<Integer> diffs;
        diffs.reserve(slots.size());
        for (const Slot& s : slots) diffs.push_back(s.diff);

        Bitset other_committed(X_.size());
        for (int j = 0; j < k_; ++j) {
            if (j == i) continue;
            for (int e : slots[j].committed) other_committed.set(e);
        }

        for (const Integer& d : xcap_candidate_differences(lo, hi, diffs, k_)) {
            // The full progression lo, lo+d, ..., hi must run inside X and
            // must not touch another slot's committed elements.
            std::vector<int> full;
            bool valid = true;
            for (Integer v = lo; v <= hi; v += d) {
                auto idx = X_.index_of(v);
                if (!idx || other_committed.test(*idx)) {
                    valid = false;
                    break;
                }
                full.push_back(static_cast<int>(*idx));
            }
            if (!valid) continue;

            std::vector<Slot> next = slots;
            next[i].committed = full;
            next[i].diff = d;
            next[i].potential.clear();
            for (Integer v = hi + d;; v += d) {
                auto idx = X_.index_of(v);
                if (!idx || other_committed.test(*idx)) break;
                next[i].potential.push_back(static_cast<int>(*idx));
            }
            for (int j = 0; j < k_; ++j) {
                if (j != i) truncate_at_contact(next[j].potential, lo, hi, d);
            }
            if (rec(next)) return true;
        }
        return false;
    }

    bool emit_witness(const std::vector<Slot>& slots) {
        std::vector<Ap> aps;
        for (const Slot& s : slots) {
            if (s.committed.empty()) continue;
            std::vector<Integer> values;
            for (int e : s.committed) values.push_back(X_[e]);
            for (int e : s.potential) values.push_back(X_[e]);
            std::sort(values.begin(), values.end());
            // By construction the union of committed and potential elements is
            // one contiguous progression; keep the assertion rather than trust it.
            if (values.size() == 1) {
                aps.push_back(Ap::singleton(values[0]));
                continue;
            }
            if (!is_ap(values) || values[1] - values[0] != s.diff) {
                throw std::logic_error("exact_cover_decide: slot did not form a contiguous AP");
            }
            aps.push_back(Ap(values.front(), s.diff, static_cast<std::int64_t>(values.size())));
        }
        witness_ = std::move(aps);
        return true;
    }

    // Smallest element index present in both ascending lists, or -1.
    static int first_common(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x] == b[y]) return a[x];
            if (a[x] < b[y]) ++x; else ++y;
        }
        return -1;
    }

    static void truncate_below(std::vector<int>& potential, int cutoff) {
        auto it = std::lower_bound(potential.begin(), potential.end(), cutoff);
        potential.erase(it, potential.end());
    }

    // update_potential against the progression lo..hi step d: cut the list at
    // its first element inside the progression.
    void truncate_at_contact(std::vector<int>& potential, const Integer& lo, const Integer& hi,
                             const Integer& d) const {
        for (std::size_t p = 0; p < potential.size(); ++p) {
            const Integer& v = X_[potential[p]];
            if (v >= lo && v <= hi && (v - lo) % d == 0) {
                potential.resize(p);
                return;
            }
        }
    }

    void check_state(const std::vector<Slot>& slots) const {
        Bitset committed_seen(X_.size());
        for (const Slot& s : slots) {
            if (s.diff != 0 && s.committed.size() < 2) {
                throw std::logic_error("xcap state: resolved slot with fewer than two elements");
            }
            if (s.diff == 0 && !s.potential.empty()) {
                throw std::logic_error("xcap state: unresolved slot with potential elements");
            }
            for (int e : s.committed) {
                if (committed_seen.test(e)) throw std::logic_error("xcap state: committed sets overlap");
                committed_seen.set(e);
            }
            if (s.diff != 0) {
                for (std::size_t t = 1; t < s.committed.size(); ++t) {
                    if (X_[s.committed[t]] - X_[s.committed[t - 1]] != s.diff) {
                        throw std::logic_error("xcap state: committed set is not contiguous");
                    }
                }
            }
        }
        for (const Slot& s : slots) {
            for (int e : s.potential) {
                if (committed_seen.test(e)) {
                    throw std::logic_error("xcap state: potential element already committed");
                }
            }
        }
    }

    const Instance& X_;
    int k_;
    XcapOptions opts_;
    std::uint64_t nodes_ = 0;
    std::vector<Ap> witness_;
};

}  // namespace

std::vector<Integer> xcap_candidate_differences(const Integer& a_alpha, const Integer& a_beta,
                                                const std::vector<Integer>& diffs, int k) {
    if (a_beta <= a_alpha) {
        throw std::invalid_argument("xcap_candidate_differences: a_beta must exceed a_alpha");
    }
    if (k < 1 || k > 30) throw CapacityError("xcap_candidate_differences: k out of range");

    // The gcd grid over tuples factors coordinate by coordinate: zero
    // differences contribute nothing, and each nonzero one maps the current
    // set of achievable gcds through all multipliers b.
    const std::int64_t b_max = (std::int64_t{1} << k) + 1;
    std::set<Integer> gcds{a_beta - a_alpha};
    for (const Integer& dj : diffs) {
        if (dj == 0) continue;
        std::set<Integer> next;
        for (const Integer& g : gcds) {
            for (std::int64_t b = 0; b <= b_max; ++b) {
                next.insert(gcd(g, b * dj));
            }
        }
        gcds = std::move(next);
    }

    std::set<Integer> candidates;
    const std::int64_t m_max = std::int64_t{k} * (k + 1);
    for (const Integer& g : gcds) {
        for (std::int64_t m = 1; m <= m_max; ++m) {
            if (g % m == 0) candidates.insert(g / m);
        }
    }
    return {candidates.rbegin(), candidates.rend()};
}

std::vector<Integer> update_potential(const std::vector<Integer>& P, const std::vector<Integer>& T) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (std::binary_search(T.begin(), T.end(), P[i])) {
            return {P.begin(), P.begin() + static_cast<std::ptrdiff_t>(i)};
        }
    }
    return P;
}

XcapResult exact_cover_decide(const Instance& X, int k, const XcapOptions& opts) {
    if (k < 0) throw std::invalid_argument("exact_cover_decide: k must be >= 0");
    if (X.empty()) return XcapResult{true, Solution{CoverKind::exact_cover, {}}, 0};
    if (k == 0) return XcapResult{false, std::nullopt, 0};
    XcapSolver solver(X, k, opts);
    return solver.run();
}

std::pair<int, XcapResult> exact_cover_minimize(const Instance& X, const XcapOptions& opts) {
    const int upper = static_cast<int>((X.size() + 1) / 2);
    for (int k = 0; k <= upper; ++k) {
        XcapResult res = exact_cover_decide(X, k, opts);
        if (res.yes) return {k, std::move(res)};
    }
    throw std::logic_error("exact_cover_minimize: pair partition bound violated");
}

}  // namespace apcover
