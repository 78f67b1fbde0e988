#include "burst/matrix.hpp"

#include <optional>
#include <ostream>
#include <string>

#include "burst/errors.hpp"

namespace burst {

namespace {

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_field(const PrimeField& expected, const FieldElement& x) {
    if (x.field() != expected)
        throw FieldMismatch("element of Z_" + std::to_string(x.field().modulus()) + " used with a matrix over Z_" +
                            std::to_string(expected.modulus()));
}

// In-place reduced row echelon form. Returns the pivot column of each pivot
// row, in row order.
std::vector<std::size_t> reduce_rows(Matrix& m, Matrix* companion = nullptr) {
    const auto& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    auto swap_rows = [](Matrix& x, std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            auto t = x.at(a, c);
            x.set(a, c, x.at(b, c));
            x.set(b, c, t);
        }
    };
    auto scale_row = [&f](Matrix& x, std::size_t r, Residue s) {
        for (std::size_t c = 0; c < x.cols(); ++c) x.set(r, c, f.mul(x.at(r, c), s));
    };
    // row[dst] -= factor * row[src]
    auto eliminate = [&f](Matrix& x, std::size_t dst, std::size_t src, Residue factor) {
        for (std::size_t c = 0; c < x.cols(); ++c)
            x.set(dst, c, f.sub(x.at(dst, c), f.mul(factor, x.at(src, c))));
    };

    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::optional<std::size_t> found;
        for (std::size_t r = pivot_row; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (!found) continue;
        if (*found != pivot_row) {
            swap_rows(m, *found, pivot_row);
            if (companion) swap_rows(*companion, *found, pivot_row);
        }
        const Residue s = f.inv(m.at(pivot_row, col));
        scale_row(m, pivot_row, s);
        if (companion) scale_row(*companion, pivot_row, s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row) continue;
            const Residue factor = m.at(r, col);
            if (factor == 0) continue;
            eliminate(m, r, pivot_row, factor);
            if (companion) eliminate(*companion, r, pivot_row, factor);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

} // namespace

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                    " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

std::size_t Matrix::index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw OutOfRange("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                         std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    return r * cols_ + c;
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& value) {
    require_field(field_, value);
    data_[index(r, c)] = value.value();
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(element(r, c));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "Z_" << m.field().modulus() << ' ' << dims(m) << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
        os << '\n';
    }
    return os;
}

Matrix identity(std::size_t k, const PrimeField& field) {
    Matrix m(field, k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, 1);
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrix product across fields");
    if (a.cols() != b.rows()) throw DimensionMismatch("cannot multiply " + dims(a) + " by " + dims(b));
    const auto& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Residue acc = 0;
            for (std::size_t i = 0; i < a.cols(); ++i) acc = f.add(acc, f.mul(a.at(r, i), b.at(i, c)));
            out.set(r, c, acc);
        }
    return out;
}

Vector multiply(const Matrix& a, std::span<const FieldElement> x) {
    if (a.cols() != x.size())
        throw DimensionMismatch("cannot multiply " + dims(a) + " by a vector of length " + std::to_string(x.size()));
    const auto& f = a.field();
    Vector out;
    out.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Residue acc = 0;
        for (std::size_t i = 0; i < a.cols(); ++i) {
            require_field(f, x[i]);
            acc = f.add(acc, f.mul(a.at(r, i), x[i].value()));
        }
        out.emplace_back(f, acc);
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return reduce_rows(work).size();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("cannot invert non-square " + dims(m) + " matrix");
    Matrix work = m;
    Matrix inv = identity(m.rows(), m.field());
    if (reduce_rows(work, &inv).size() != m.rows()) throw Singular("matrix is singular");
    return inv;
}

Vector solve(const Matrix& a, std::span<const FieldElement> b) {
    if (a.rows() != a.cols()) throw DimensionMismatch("solve needs a square matrix, got " + dims(a));
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                                std::to_string(a.rows()));
    Matrix work = a;
    Matrix rhs(a.field(), b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.set(i, 0, b[i]);
    if (reduce_rows(work, &rhs).size() != a.rows()) throw Singular("system matrix is singular");
    return rhs.column(0);
}

Vector nullspace_vector(const Matrix& a) {
    Matrix work = a;
    const auto pivots = reduce_rows(work);
    if (a.cols() - pivots.size() != 1)
        throw NullspaceDimension("nullspace of " + dims(a) + " matrix has dimension " +
                                 std::to_string(a.cols() - pivots.size()) + ", expected 1");
    const auto& f = a.field();
    std::size_t free_col = 0;
    for (std::size_t i = 0; i < pivots.size() && pivots[i] == free_col; ++i) ++free_col;

    std::vector<Residue> x(a.cols(), 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(work.at(r, free_col));

    Residue lead = 0;
    for (auto v : x)
        if (v != 0) {
            lead = f.inv(v);
            break;
        }
    Vector out;
    out.reserve(x.size());
    for (auto v : x) out.emplace_back(f, f.mul(v, lead));
    return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("hconcat across fields");
    if (a.rows() != b.rows()) throw DimensionMismatch("hconcat of " + dims(a) + " and " + dims(b));
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("vconcat across fields");
    if (a.cols() != b.cols()) throw DimensionMismatch("vconcat of " + dims(a) + " and " + dims(b));
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, c, a.at(r, c));
        for (std::size_t r = 0; r < b.rows(); ++r) out.set(a.rows() + r, c, b.at(r, c));
    }
    return out;
}

Matrix cyclic_shift_columns(const Matrix& m, std::int64_t shift) {
    if (m.cols() == 0) return m;
    const auto n = static_cast<std::int64_t>(m.cols());
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::int64_t j = 0; j < n; ++j) {
        const auto src = static_cast<std::size_t>((((j - shift) % n) + n) % n);
        for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, static_cast<std::size_t>(j), m.at(r, src));
    }
    return out;
}

Matrix scale_columns(const Matrix& m, std::span<const FieldElement> scales) {
    if (scales.size() != m.cols())
        throw DimensionMismatch(std::to_string(scales.size()) + " scales for " + std::to_string(m.cols()) + " columns");
    Matrix out = m;
    const auto& f = m.field();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        require_field(f, scales[c]);
        if (scales[c].is_zero()) throw ZeroScalar("column " + std::to_string(c) + " scaled by zero");
        for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, c, f.mul(m.at(r, c), scales[c].value()));
    }
    return out;
}

Matrix submatrix(const Matrix& m, Range rows, Range cols) {
    if (rows.first + rows.count > m.rows() || cols.first + cols.count > m.cols())
        throw OutOfRange("block exceeds " + dims(m) + " matrix");
    Matrix out(m.field(), rows.count, cols.count);
    for (std::size_t r = 0; r < rows.count; ++r)
        for (std::size_t c = 0; c < cols.count; ++c) out.set(r, c, m.at(rows.first + r, cols.first + c));
    return out;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
    Matrix out(m.field(), m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= m.cols())
            throw OutOfRange("column " + std::to_string(cols[j]) + " outside " + dims(m) + " matrix");
        for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, j, m.at(r, cols[j]));
    }
    return out;
}

} // namespace burst
