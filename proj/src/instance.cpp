#include "apcover/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace apcover {

Instance::Instance(std::vector<Integer> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
        throw std::invalid_argument("Instance: duplicate element");
    }
}

bool Instance::contains(const Integer& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::optional<std::size_t> Instance::index_of(const Integer& v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

}  // namespace apcover
