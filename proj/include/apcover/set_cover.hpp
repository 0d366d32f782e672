#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace apcover {

// A small set-cover instance over universe {0, ..., universe_size-1}.
// Each candidate set is a bitmask plus a caller-supplied source id.
struct SetCoverInstance {
    int universe_size = 0;
    std::vector<std::uint32_t> masks;
    std::vector<int> source_ids;  // parallel to masks; defaults to positions

    int max_universe = 25;  // DP allocates 2^universe_size entries

    void add_set(std::uint32_t mask, int source_id) {
        masks.push_back(mask);
        source_ids.push_back(source_id);
    }
};

struct SetCoverResult {
    int size = 0;
    std::vector<int> chosen;  // source ids, ascending
};

// Minimum-cardinality sub-family whose union is the full universe, via
// bottom-up DP over the 2^u masks (f[mask] = min sets covering mask, expanded
// on the lowest missing element). nullopt iff the union of all sets is not
// the whole universe. Witness selection is deterministic: at each step the
// smallest admissible set id is taken.
std::optional<SetCoverResult> min_set_cover(const SetCoverInstance& inst);

// Minimum number of pairwise-disjoint sets whose union is the full universe.
// The recursion is on the lowest uncovered element, trying only sets that
// contain it and are disjoint from the current selection.
std::optional<SetCoverResult> min_exact_cover(const SetCoverInstance& inst);

}  // namespace apcover
