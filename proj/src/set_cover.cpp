#include "apcover/set_cover.hpp"

#include "apcover/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace apcover {

namespace {

constexpr std::uint8_t kInf = 0xFF;

void check_capacity(const SetCoverInstance& inst) {
    if (inst.universe_size < 0 || inst.universe_size > inst.max_universe || inst.universe_size > 30) {
        throw CapacityError("set cover universe of size " + std::to_string(inst.universe_size) +
                            " exceeds the cap of " + std::to_string(std::min(inst.max_universe, 30)));
    }
    const std::uint32_t full =
        inst.universe_size == 0 ? 0 : ((1u << inst.universe_size) - 1);
    for (std::uint32_t m : inst.masks) {
        if (m & ~full) {
            throw std::invalid_argument("set cover: set mask outside the universe");
        }
    }
}

// Set ids that contain each element, in ascending id order.
std::vector<std::vector<int>> sets_by_element(const SetCoverInstance& inst) {
    std::vector<std::vector<int>> by_elem(inst.universe_size);
    for (std::size_t s = 0; s < inst.masks.size(); ++s) {
        std::uint32_t m = inst.masks[s];
        while (m) {
            int e = std::countr_zero(m);
            by_elem[e].push_back(static_cast<int>(s));
            m &= m - 1;
        }
    }
    return by_elem;
}

std::optional<SetCoverResult> solve(const SetCoverInstance& inst, bool exact) {
    check_capacity(inst);
    if (inst.universe_size == 0) return SetCoverResult{0, {}};

    const std::uint32_t full = (inst.universe_size == 32) ? ~0u : ((1u << inst.universe_size) - 1);
    const auto by_elem = sets_by_element(inst);
    std::vector<std::uint8_t> f(static_cast<std::size_t>(full) + 1, kInf);
    f[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int e = std::countr_zero(mask);
        std::uint8_t best = kInf;
        for (int s : by_elem[e]) {
            if (exact && (inst.masks[s] & ~mask) != 0) continue;  // must stay disjoint
            std::uint8_t sub = f[mask & ~inst.masks[s]];
            if (sub != kInf && sub + 1 < best) best = static_cast<std::uint8_t>(sub + 1);
        }
        f[mask] = best;
    }
    if (f[full] == kInf) return std::nullopt;

    SetCoverResult result;
    result.size = f[full];
    std::uint32_t mask = full;
    while (mask) {
        int e = std::countr_zero(mask);
        for (int s : by_elem[e]) {
            if (exact && (inst.masks[s] & ~mask) != 0) continue;
            std::uint32_t rest = mask & ~inst.masks[s];
            if (f[rest] != kInf && f[rest] + 1 == f[mask]) {
                result.chosen.push_back(inst.source_ids.empty() ? s : inst.source_ids[s]);
                mask = rest;
                break;
            }
        }
    }
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
}

}  // namespace

std::optional<SetCoverResult> min_set_cover(const SetCoverInstance& inst) {
    return solve(inst, /*exact=*/false);
}

std::optional<SetCoverResult> min_exact_cover(const SetCoverInstance& inst) {
    return solve(inst, /*exact=*/true);
}

}  // namespace apcover
