// Index tuples: canonical (strictly increasing) storage, sort-with-sign for
// evaluating alternating functions at arbitrary orderings, and enumeration of
// increasing tuples.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hodge {

using Index = std::int32_t;
using IndexTuple = std::vector<Index>;

inline bool strictly_increasing(std::span<const Index> t) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] <= t[i - 1]) return false;
    return true;
}

struct SortedTuple {
    IndexTuple indices;  // strictly increasing
    int sign;            // sgn of the sorting permutation; 0 on repeated index
};

/// Sorts a tuple into canonical order, tracking the permutation sign.
/// A repeated index yields sign 0 (the alternating value vanishes).
inline SortedTuple sort_with_sign(std::span<const Index> t) {
    SortedTuple out;
    out.indices.assign(t.begin(), t.end());
    out.sign = 1;
    // insertion sort; tuples are tiny
    for (std::size_t i = 1; i < out.indices.size(); ++i) {
        Index v = out.indices[i];
        std::size_t j = i;
        while (j > 0 && out.indices[j - 1] > v) {
            out.indices[j] = out.indices[j - 1];
            out.sign = -out.sign;
            --j;
        }
        out.indices[j] = v;
    }
    for (std::size_t i = 1; i < out.indices.size(); ++i)
        if (out.indices[i] == out.indices[i - 1]) {
            out.sign = 0;
            break;
        }
    return out;
}

/// Parity of a permutation given as images perm[0..k-1] of {0..k-1}.
inline int permutation_sign(std::span<const int> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

/// Visits every strictly increasing k-tuple from {0,..,n-1} in lexicographic
/// order. Visitor receives a span valid only during the call.
template <typename Fn>
void for_each_increasing_tuple(Index n, int k, Fn&& fn) {
    if (k <= 0 || k > n) return;
    IndexTuple idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(std::span<const Index>(idx));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

/// Copy of `t` with position `drop` removed (the "hat" sub-tuple).
inline void facet_of(std::span<const Index> t, std::size_t drop, IndexTuple& out) {
    out.clear();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != drop) out.push_back(t[i]);
}

/// Lexicographic comparison of two tuples of equal length.
inline bool tuple_less(std::span<const Index> a, std::span<const Index> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool tuple_equal(std::span<const Index> a, std::span<const Index> b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace hodge
