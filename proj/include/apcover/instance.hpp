#pragma once

#include "apcover/integer.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace apcover {

// A finite set of distinct integers, stored strictly increasing.
// Membership tests use binary search; the sets can be large even when the
// solver parameter k is small.
class Instance {
public:
    Instance() = default;

    // Sorts the values; throws std::invalid_argument on duplicates.
    explicit Instance(std::vector<Integer> values);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    const Integer& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Integer>& values() const { return elems_; }

    bool contains(const Integer& v) const;

    // Position of v in the sorted sequence, if present.
    std::optional<std::size_t> index_of(const Integer& v) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const Instance& other) const { return elems_ == other.elems_; }

private:
    std::vector<Integer> elems_;
};

}  // namespace apcover
