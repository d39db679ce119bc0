#ifndef EXALG_INDICES_HPP
#define EXALG_INDICES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exalg {

// A tuple of pairwise distinct indices in 1..q.  Increasing unless stated.
using IndexTuple = std::vector<int>;

inline bool is_increasing(const IndexTuple& t) {
    for (std::size_t k = 1; k < t.size(); ++k)
        if (t[k - 1] >= t[k]) return false;
    return true;
}

inline void require_increasing(const IndexTuple& t, const char* what) {
    if (!is_increasing(t)) throw std::domain_error(std::string(what) + ": tuple not strictly increasing");
}

// All strictly increasing p-tuples from 1..q, lexicographic.
inline std::vector<IndexTuple> increasing_tuples(int q, int p) {
    if (p < 0 || p > q) throw std::domain_error("increasing_tuples: need 0 <= p <= q");
    std::vector<IndexTuple> out;
    IndexTuple cur;
    cur.reserve(p);
    // depth-first enumeration keeps lexicographic order
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == p) {
            out.push_back(cur);
            return;
        }
        int need = p - (int)cur.size();
        for (int i = start; i + need - 1 <= q; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Sorts r and returns the parity sign of the sorting permutation.
inline std::pair<IndexTuple, int> sort_with_sign(const IndexTuple& r) {
    IndexTuple s = r;
    int sign = 1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
            if (s[j] > s[j + 1]) {
                std::swap(s[j], s[j + 1]);
                sign = -sign;
            }
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] == s[i]) throw std::domain_error("sort_with_sign: repeated entry");
    return {s, sign};
}

// <r|s> = #{(i,j) : i in r, j in s, i > j}
inline int pairs_gt(const IndexTuple& r, const IndexTuple& s) {
    int c = 0;
    for (int i : r)
        for (int j : s)
            if (i > j) ++c;
    return c;
}

inline IndexTuple ordered_union(const IndexTuple& i, const IndexTuple& j) {
    require_increasing(i, "ordered_union");
    require_increasing(j, "ordered_union");
    IndexTuple out;
    std::set_union(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(out));
    return out;
}

inline IndexTuple ordered_intersection(const IndexTuple& i, const IndexTuple& j) {
    require_increasing(i, "ordered_intersection");
    require_increasing(j, "ordered_intersection");
    IndexTuple out;
    std::set_intersection(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(out));
    return out;
}

inline IndexTuple ordered_difference(const IndexTuple& i, const IndexTuple& j) {
    require_increasing(i, "ordered_difference");
    require_increasing(j, "ordered_difference");
    IndexTuple out;
    std::set_difference(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(out));
    return out;
}

inline IndexTuple ordered_symmetric_difference(const IndexTuple& i, const IndexTuple& j) {
    require_increasing(i, "ordered_symmetric_difference");
    require_increasing(j, "ordered_symmetric_difference");
    IndexTuple out;
    std::set_symmetric_difference(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(out));
    return out;
}

// i' = (1..q) \ i
inline IndexTuple ordered_complement(const IndexTuple& i, int q) {
    require_increasing(i, "ordered_complement");
    IndexTuple out;
    auto it = i.begin();
    for (int k = 1; k <= q; ++k) {
        if (it != i.end() && *it == k)
            ++it;
        else
            out.push_back(k);
    }
    if (it != i.end()) throw std::domain_error("ordered_complement: entry exceeds q");
    return out;
}

// --- bitmask form of the same machinery (index i <-> bit i-1, n <= 32) ---

using BladeMask = std::uint32_t;

inline int mask_grade(BladeMask m) { return std::popcount(m); }

inline BladeMask mask_of(const IndexTuple& t) {
    BladeMask m = 0;
    for (int i : t) {
        if (i < 1 || i > 32) throw std::domain_error("mask_of: index out of 1..32");
        m |= BladeMask{1} << (i - 1);
    }
    return m;
}

inline IndexTuple tuple_of(BladeMask m) {
    IndexTuple t;
    for (int b = 0; b < 32; ++b)
        if (m & (BladeMask{1} << b)) t.push_back(b + 1);
    return t;
}

inline int mask_pairs_gt(BladeMask r, BladeMask s) {
    int c = 0;
    while (s) {
        int b = std::countr_zero(s);
        s &= s - 1;
        c += std::popcount(r & (b == 31 ? 0u : (~BladeMask{0} << (b + 1))));
    }
    return c;
}

// (-1)^k as int
inline int parity_sign(int k) { return (k & 1) ? -1 : 1; }

// epsilon_{rs} for disjoint increasing r, s given as masks
inline int mask_concat_sign(BladeMask r, BladeMask s) { return parity_sign(mask_pairs_gt(r, s)); }

// enumerate all submasks of m (including 0 and m)
inline std::vector<BladeMask> submasks(BladeMask m) {
    std::vector<BladeMask> out;
    BladeMask sub = 0;
    while (true) {
        out.push_back(sub);
        if (sub == m) break;
        sub = (sub - m) & m;
    }
    return out;
}

}  // namespace exalg

#endif
