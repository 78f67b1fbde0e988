#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burst/matrix.hpp"

namespace burst {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Square-or-not matrix over the integers, used where a statement holds over
/// Z rather than Z_p.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const BigInt& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
    BigInt& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    BigInt determinant() const;

    /// Entries reduced into Z_p.
    Matrix reduce(const PrimeField& field) const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> data_;
};

} // namespace burst
