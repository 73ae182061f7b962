#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's counting or enumeration code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "combilab/exactmath.hpp"

namespace oracle {

using combilab::ExactInt;

// (n+k)-subsets of 2n+m elements meeting every pair {2i, 2i+1}.
inline long long count_insets(int n, int k, int m) {
    const int ground = 2 * n + m;
    long long hits = 0;
    for (std::uint32_t mask = 0; mask < (1u << ground); ++mask) {
        if (std::popcount(mask) != n + k) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = (mask >> (2 * i)) & 3u;
        hits += ok;
    }
    return hits;
}

// Every word of length n over {"1", "1|", "x"} with k x's, not ending in "1|".
inline std::vector<std::string> usequences(int n, int k) {
    std::vector<std::string> out;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        std::string word;
        int xs = 0;
        int last = -1;
        long long c = code;
        for (int i = 0; i < n; ++i) {
            last = static_cast<int>(c % 3);
            c /= 3;
            word += last == 0 ? "1" : last == 1 ? "1|" : "x";
            xs += last == 2;
        }
        if (xs == k && last != 1) out.push_back(word);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Compositions of n (parts >= 1) from the 2^{n-1} cut patterns.
inline std::vector<std::vector<int>> compositions(int n) {
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (cuts & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(parts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every sequence of nonnegative parts summing to n with at most max_len parts.
inline void weak_rec(int remaining, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = 0; v <= remaining; ++v) {
        cur.push_back(v);
        weak_rec(remaining - v, max_len, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> weak_compositions_with_zeros(int n, int zeros) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    weak_rec(n, n + zeros, cur, all);
    std::vector<std::vector<int>> out;
    for (auto& w : all) {
        if (std::count(w.begin(), w.end(), 0) == zeros) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Compositions of n with exactly k parts equal to p-1 and all others >= p.
inline std::vector<std::vector<int>> marked(int n, int k, int p) {
    if (p == 1) return weak_compositions_with_zeros(n, k);
    std::vector<std::vector<int>> out;
    for (auto& c : compositions(n)) {
        const auto marks = std::count(c.begin(), c.end(), p - 1);
        const bool rest_ok = std::all_of(c.begin(), c.end(), [p](int v) { return v == p - 1 || v >= p; });
        if (marks == k && rest_ok) out.push_back(c);
    }
    return out;
}

// Cofactor expansion along the first row.
template <class T>
T laplace_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == T(0)) continue;
        std::vector<std::vector<T>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[i][c]);
            }
            minor.push_back(row);
        }
        T term = m[0][j] * laplace_det(minor);
        if (j % 2) total -= term; else total += term;
    }
    return total;
}

// F(n, p) written out from the entry rule, independently of the library.
inline std::vector<std::vector<ExactInt>> f_matrix(int n, int p) {
    std::vector<std::vector<ExactInt>> m(n, std::vector<ExactInt>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j + 1) m[i - 1][j - 1] = -1;
            else if (j - i >= p - 1) m[i - 1][j - 1] = 1;
        }
    }
    return m;
}

}  // namespace oracle
