#include "burst/integer_matrix.hpp"

#include "burst/errors.hpp"

namespace burst {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square integer matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    std::vector<BigInt> a = data_;
    auto at = [&a, n](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && at(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_with, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

Matrix IntegerMatrix::reduce(const PrimeField& field) const {
    Matrix m(field, rows_, cols_);
    const BigInt p = field.modulus();
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            BigInt v = at(r, c) % p;
            if (v < 0) v += p;
            m.set(r, c, v.convert_to<std::int64_t>());
        }
    return m;
}

} // namespace burst
