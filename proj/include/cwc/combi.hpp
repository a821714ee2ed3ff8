// combi.hpp -- lexicographic k-subset enumeration over 1-based index ranges.

#pragma once

#include <vector>

namespace cwc {

// First k-subset of {1,...,n} in lex order, empty if k > n.
inline std::vector<int> first_subset(int n, int k) {
    if (k > n) return {};
    std::vector<int> s(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = i + 1;
    return s;
}

// Advance to the next k-subset of {1,...,n}; false when exhausted.
inline bool next_subset(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[static_cast<size_t>(i)] < n - (k - 1 - i)) {
            ++s[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// All k-subsets of the given sorted pool, in lex order.
inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int k) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return out;
    if (k == 0) return {{}};
    auto idx = first_subset(n, k);
    do {
        std::vector<int> s(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = pool[static_cast<size_t>(idx[static_cast<size_t>(i)] - 1)];
        out.push_back(std::move(s));
    } while (next_subset(idx, n));
    return out;
}

}  // namespace cwc
