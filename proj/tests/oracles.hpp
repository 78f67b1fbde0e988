#pragma once

// Brute-force oracles for the tests. None of these touch Gaussian
// elimination or the construction code: they enumerate.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burst/matrix.hpp"

namespace burst::oracle {

using Rows = std::vector<std::vector<int>>;

inline Rows to_rows(const Matrix& m) {
    Rows rows(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = static_cast<int>(m.at(r, c));
    return rows;
}

/// Pascal's triangle over the integers, rows 0..max_n.
inline std::vector<std::vector<boost::multiprecision::cpp_int>> pascal(std::size_t max_n) {
    std::vector<std::vector<boost::multiprecision::cpp_int>> t(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        t[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

/// Odometer over all vectors in {0..p-1}^len; calls f for each.
template <typename F>
void for_each_vector(int p, std::size_t len, F&& f) {
    std::vector<int> v(len, 0);
    while (true) {
        f(v);
        std::size_t i = len;
        while (i > 0 && v[i - 1] == p - 1) v[--i] = 0;
        if (i == 0) return;
        ++v[i - 1];
    }
}

/// Columns `cols` of `g` are independent iff no nonzero coefficient vector
/// annihilates them.
inline bool independent(const Rows& g, const std::vector<std::size_t>& cols, int p) {
    const std::size_t k = g.size();
    bool ok = true;
    for_each_vector(p, cols.size(), [&](const std::vector<int>& coeff) {
        if (!ok) return;
        bool nonzero = false;
        for (int c : coeff) nonzero |= c != 0;
        if (!nonzero) return;
        for (std::size_t r = 0; r < k; ++r) {
            long acc = 0;
            for (std::size_t j = 0; j < cols.size(); ++j) acc += static_cast<long>(coeff[j]) * g[r][cols[j]];
            if (acc % p != 0) return;
        }
        ok = false;
    });
    return ok;
}

inline bool good(const Rows& g, int p) {
    const std::size_t k = g.size();
    if (k == 0) return true;
    const std::size_t n = g[0].size();
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < k; ++i) cols.push_back((s + i) % n);
        if (!independent(g, cols, p)) return false;
    }
    return true;
}

/// Codeword of message u under generator rows g.
inline std::vector<int> encode(const Rows& g, const std::vector<int>& u, int p) {
    std::vector<int> c(g[0].size(), 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
        long acc = 0;
        for (std::size_t i = 0; i < g.size(); ++i) acc += static_cast<long>(u[i]) * g[i][j];
        c[j] = static_cast<int>(acc % p);
    }
    return c;
}

/// True when every cyclic burst of `length` erasures is uniquely decodable:
/// no two messages produce codewords agreeing on every unerased position.
inline bool corrects_all_bursts(const Rows& g, int p, std::size_t length) {
    const std::size_t k = g.size(), n = g[0].size();
    for (std::size_t start = 0; start < n; ++start) {
        std::set<std::vector<int>> seen;
        bool unique = true;
        for_each_vector(p, k, [&](const std::vector<int>& u) {
            const auto c = encode(g, u, p);
            std::vector<int> visible;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t offset = (j + n - start) % n;
                if (offset >= length) visible.push_back(c[j]);
            }
            unique &= seen.insert(visible).second;
        });
        if (!unique) return false;
    }
    return true;
}

/// All x in Z_p^k with (g x) good, in odometer order.
inline std::set<std::vector<int>> extension_columns(const Rows& g, int p) {
    std::set<std::vector<int>> out;
    const std::size_t k = g.size();
    for_each_vector(p, k, [&](const std::vector<int>& x) {
        Rows ext = g;
        for (std::size_t r = 0; r < k; ++r) ext[r].push_back(x[r]);
        if (good(ext, p)) out.insert(x);
    });
    return out;
}

/// Exact integer determinant by cofactor expansion.
inline boost::multiprecision::cpp_int determinant(const std::vector<std::vector<boost::multiprecision::cpp_int>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    boost::multiprecision::cpp_int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<boost::multiprecision::cpp_int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<boost::multiprecision::cpp_int> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[r][j]);
            minor.push_back(row);
        }
        const auto term = a[0][c] * determinant(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace burst::oracle
