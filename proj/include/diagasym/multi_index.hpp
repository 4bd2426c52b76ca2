#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace diagasym {

// Exponent vector (m_1, ..., m_d).  Entries are small nonnegative integers;
// the canonical "sorted key" form (nonincreasing) indexes symmetry-reduced
// storage.
using MultiIndex = std::vector<int>;

inline MultiIndex sorted_key(MultiIndex m) {
    std::sort(m.begin(), m.end(), std::greater<int>());
    return m;
}

inline int total_degree(const MultiIndex& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

inline bool all_nonnegative(const MultiIndex& m) {
    return std::all_of(m.begin(), m.end(), [](int e) { return e >= 0; });
}

}  // namespace diagasym
