#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "burst/gf.hpp"

namespace burst {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over Z_p. Element access is 0-based; positions in
/// the coding-theory interfaces (windows, bursts, information sets) are
/// 1-based and converted at those boundaries.
class Matrix {
public:
    /// Zero matrix. Either dimension may be 0 (e.g. the dual of a
    /// full-dimension code has no rows).
    Matrix(const PrimeField& field, std::size_t rows, std::size_t cols);

    /// Entries are reduced mod p. Throws DimensionMismatch on ragged input.
    static Matrix from_rows(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue at(std::size_t r, std::size_t c) const { return data_[index(r, c)]; }
    FieldElement element(std::size_t r, std::size_t c) const { return {field_, at(r, c)}; }
    void set(std::size_t r, std::size_t c, std::int64_t value) { data_[index(r, c)] = field_.reduce(value); }
    void set(std::size_t r, std::size_t c, const FieldElement& value);

    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(std::size_t r, std::size_t c) const;

    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Half-open block of indices [first, first + count), 0-based.
struct Range {
    std::size_t first;
    std::size_t count;
};

Matrix identity(std::size_t k, const PrimeField& field);

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, std::span<const FieldElement> x);

std::size_t rank(const Matrix& m);

/// Throws DimensionMismatch for non-square input and Singular otherwise.
Matrix inverse(const Matrix& m);

/// Solves A x = b for square nonsingular A.
Vector solve(const Matrix& a, std::span<const FieldElement> b);

/// The unique nonzero x (up to scale) with A x = 0, scaled so its first
/// nonzero coordinate is 1. Throws NullspaceDimension unless the nullspace
/// is exactly one-dimensional.
Vector nullspace_vector(const Matrix& a);

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

/// Column j of the result is column (j - shift) mod cols of `m`.
Matrix cyclic_shift_columns(const Matrix& m, std::int64_t shift);

/// Multiplies column j by scales[j]; every scale must be nonzero.
Matrix scale_columns(const Matrix& m, std::span<const FieldElement> scales);

Matrix submatrix(const Matrix& m, Range rows, Range cols);

/// Columns in the given (0-based) order.
Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);

} // namespace burst
