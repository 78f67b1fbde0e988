#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "burst/matrix.hpp"

namespace burst {

/// Outcome of one cyclic window of k consecutive columns.
struct WindowReport {
    std::size_t window_start;         ///< 1-based
    std::vector<std::size_t> columns; ///< 1-based, cyclic order
    std::size_t rank;
    bool ok;

    friend bool operator==(const WindowReport&, const WindowReport&) = default;
};

/// 0-based indices of the k cyclically consecutive columns starting at the
/// 0-based column `start` of an n-column matrix.
std::vector<std::size_t> cyclic_window(std::size_t start, std::size_t k, std::size_t n);

/// One report per window, ordered by start position 1..n. Throws
/// DimensionMismatch when rows > cols.
std::vector<WindowReport> window_reports(const Matrix& g);

/// True when every k cyclically consecutive columns are independent. A matrix
/// with no rows is vacuously good.
bool is_good(const Matrix& g);

/// True when the first rows() columns form the identity.
bool is_systematic(const Matrix& g);

/// For every j in [k, n] the j leftmost columns form a good k x j matrix.
/// Throws NotSystematic unless the leading k x k block is I_k.
bool is_prefix_good(const Matrix& g);

/// `positions` are 1-based. Throws OutOfRange on a set that is not k
/// distinct positions in 1..n.
bool is_information_set(const Matrix& g, std::span<const std::size_t> positions);

} // namespace burst
