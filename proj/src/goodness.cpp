#include "burst/goodness.hpp"

#include <algorithm>
#include <string>

#include "burst/errors.hpp"

namespace burst {

namespace {

void require_wide(const Matrix& g) {
    if (g.rows() > g.cols())
        throw DimensionMismatch("a " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                " matrix has more rows than columns");
}

bool window_ok(const Matrix& g, std::size_t start) {
    const auto cols = cyclic_window(start, g.rows(), g.cols());
    return rank(select_columns(g, cols)) == g.rows();
}

} // namespace

std::vector<std::size_t> cyclic_window(std::size_t start, std::size_t k, std::size_t n) {
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = (start + i) % n;
    return cols;
}

std::vector<WindowReport> window_reports(const Matrix& g) {
    require_wide(g);
    std::vector<WindowReport> reports;
    reports.reserve(g.cols());
    for (std::size_t start = 0; start < g.cols(); ++start) {
        const auto cols = cyclic_window(start, g.rows(), g.cols());
        const auto r = rank(select_columns(g, cols));
        std::vector<std::size_t> one_based(cols.size());
        std::transform(cols.begin(), cols.end(), one_based.begin(), [](std::size_t c) { return c + 1; });
        reports.push_back({start + 1, std::move(one_based), r, r == g.rows()});
    }
    return reports;
}

bool is_good(const Matrix& g) {
    require_wide(g);
    if (g.rows() == 0) return true;
    for (std::size_t start = 0; start < g.cols(); ++start)
        if (!window_ok(g, start)) return false;
    return true;
}

bool is_systematic(const Matrix& g) {
    if (g.rows() > g.cols()) return false;
    return submatrix(g, {0, g.rows()}, {0, g.rows()}) == identity(g.rows(), g.field());
}

bool is_prefix_good(const Matrix& g) {
    if (!is_systematic(g)) throw NotSystematic("leading block is not the identity");
    for (std::size_t j = g.rows(); j <= g.cols(); ++j)
        if (!is_good(submatrix(g, {0, g.rows()}, {0, j}))) return false;
    return true;
}

bool is_information_set(const Matrix& g, std::span<const std::size_t> positions) {
    if (positions.size() != g.rows())
        throw OutOfRange("information set needs " + std::to_string(g.rows()) + " positions, got " +
                         std::to_string(positions.size()));
    std::vector<std::size_t> cols;
    cols.reserve(positions.size());
    for (auto pos : positions) {
        if (pos < 1 || pos > g.cols())
            throw OutOfRange("position " + std::to_string(pos) + " outside 1.." + std::to_string(g.cols()));
        cols.push_back(pos - 1);
    }
    auto sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw OutOfRange("information set repeats a position");
    return rank(select_columns(g, cols)) == g.rows();
}

} // namespace burst
