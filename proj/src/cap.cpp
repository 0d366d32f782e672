#include "apcover/cap.hpp"

#include "apcover/errors.hpp"
#include "apcover/set_cover.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace apcover {

namespace {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct StateKey {
    std::vector<std::uint64_t> blocks;
    int budget = 0;
    bool operator==(const StateKey& o) const { return budget == o.budget && blocks == o.blocks; }
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const {
        std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(key.budget);
        for (std::uint64_t w : key.blocks) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class CapSolver {
public:
    CapSolver(const Instance& X, int k, const CapOptions& opts) : X_(X), k_(k), opts_(opts) {}

    CapResult run() {
        CapResult result;
        Bitset covered(X_.size());
        std::vector<Ap> path;
        result.yes = covering(covered, k_, path);
        result.nodes = nodes_;
        if (result.yes) {
            Solution sol{CoverKind::cover, std::move(witness_)};
            auto check = verify_solution(X_, sol);
            if (!check.ok) {
                throw std::logic_error("cover_decide: witness failed verification: " + check.diagnostic);
            }
            result.witness = std::move(sol);
        }
        return result;
    }

private:
    // One node of the branching recursion: covered is the union of the APs
    // chosen so far (the path), k2 the remaining budget.
    bool covering(const Bitset& covered, int k2, std::vector<Ap>& path) {
        ++nodes_;
        const std::size_t uncovered = X_.size() - covered.count();
        if (uncovered == 0) {
            witness_ = path;
            return true;
        }
        if (k2 == 0) return false;

        // Distinct (i, j, l) triples often yield the same AP; suppressing
        // duplicate (covered, budget) states is semantics-preserving pruning.
        StateKey key{{}, k2};
        key.blocks.resize(covered.num_blocks());
        boost::to_block_range(covered, key.blocks.begin());
        if (!visited_.insert(std::move(key)).second) return false;

        const std::size_t kk = static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_);
        if (uncovered <= kk) return setcover_fallback(covered, k2, path);

        // The k^2+1 smallest uncovered elements.
        std::vector<std::size_t> heads;
        heads.reserve(kk + 1);
        for (std::size_t i = 0; i < X_.size() && heads.size() < kk + 1; ++i) {
            if (!covered.test(i)) heads.push_back(i);
        }

        for (std::size_t i = 0; i < heads.size(); ++i) {
            for (std::size_t j = i + 1; j < heads.size(); ++j) {
                Integer span = X_[heads[j]] - X_[heads[i]];
                for (const Integer& d : cap_candidate_differences(span, k_)) {
                    Ap s = make_ap(X_, X_[heads[i]], d);
                    Bitset next = covered;
                    mark(next, s);
                    path.push_back(s);
                    if (covering(next, k2 - 1, path)) return true;
                    path.pop_back();
                }
            }
        }
        return false;
    }

    // Small leftover universe: one exact set-cover query over the maximal APs.
    bool setcover_fallback(const Bitset& covered, int k2, std::vector<Ap>& path) {
        build_maximal();
        std::vector<std::size_t> universe;
        for (std::size_t i = 0; i < X_.size(); ++i) {
            if (!covered.test(i)) universe.push_back(i);
        }
        if (universe.size() > static_cast<std::size_t>(opts_.setcover_max_universe)) {
            throw CapacityError("cover_decide: fallback universe of size " +
                                std::to_string(universe.size()) + " exceeds the set-cover cap");
        }
        std::vector<int> position(X_.size(), -1);
        for (std::size_t u = 0; u < universe.size(); ++u) {
            position[universe[u]] = static_cast<int>(u);
        }

        SetCoverInstance inst;
        inst.universe_size = static_cast<int>(universe.size());
        inst.max_universe = opts_.setcover_max_universe;
        std::map<std::uint32_t, int> dedup;  // restriction mask -> first ap id
        for (std::size_t a = 0; a < maximal_.size(); ++a) {
            std::uint32_t mask = 0;
            Integer v = maximal_[a].first();
            for (std::int64_t e = 0; e < maximal_[a].length(); ++e) {
                int pos = position[*X_.index_of(v)];
                if (pos >= 0) mask |= 1u << pos;
                v += maximal_[a].diff();
            }
            if (mask != 0) dedup.emplace(mask, static_cast<int>(a));
        }
        for (const auto& [mask, id] : dedup) inst.add_set(mask, id);

        auto res = min_set_cover(inst);
        if (!res || res->size > k2) return false;
        witness_ = path;
        for (int id : res->chosen) witness_.push_back(maximal_[id]);
        return true;
    }

    void build_maximal() {
        if (!maximal_built_) {
            maximal_ = enumerate_maximal_aps(X_);
            maximal_built_ = true;
        }
    }

    void mark(Bitset& bits, const Ap& ap) const {
        Integer v = ap.first();
        for (std::int64_t i = 0; i < ap.length(); ++i) {
            bits.set(*X_.index_of(v));
            v += ap.diff();
        }
    }

    const Instance& X_;
    int k_;
    CapOptions opts_;
    std::uint64_t nodes_ = 0;
    std::unordered_set<StateKey, StateKeyHash> visited_;
    std::vector<Ap> witness_;
    std::vector<Ap> maximal_;
    bool maximal_built_ = false;
};

}  // namespace

std::vector<Integer> cap_candidate_differences(const Integer& span, int k) {
    if (span <= 0) throw std::invalid_argument("cap_candidate_differences: span must be positive");
    if (k < 0 || k > 40) throw CapacityError("cap_candidate_differences: k out of range");
    Integer limit = Integer(1) << k;
    if (span < limit) limit = span;
    std::vector<Integer> out;
    for (Integer l = 1; l <= limit; ++l) {
        if (span % l == 0) out.push_back(span / l);
    }
    return out;  // decreasing since l increases
}

CapResult cover_decide(const Instance& X, int k, const CapOptions& opts) {
    if (k < 0) throw std::invalid_argument("cover_decide: k must be >= 0");
    CapSolver solver(X, k, opts);
    return solver.run();
}

std::pair<int, CapResult> cover_minimize(const Instance& X, const CapOptions& opts) {
    const int upper = static_cast<int>((X.size() + 1) / 2);
    for (int k = 0; k <= upper; ++k) {
        CapResult res = cover_decide(X, k, opts);
        if (res.yes) return {k, std::move(res)};
    }
    throw std::logic_error("cover_minimize: pair cover bound violated");
}

}  // namespace apcover
