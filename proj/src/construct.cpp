#include "burst/construct.hpp"

#include <algorithm>
#include <string>

#include "burst/errors.hpp"
#include "burst/goodness.hpp"

namespace burst {

namespace {

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_systematic_good(const Matrix& g) {
    if (!is_systematic(g)) throw NotSystematic("expected a matrix of the form (I_k P), got " + dims(g));
    if (!is_good(g)) throw NotGood("input " + dims(g) + " matrix is not good");
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > (std::uint64_t{1} << 40) / base) throw SizeCapExceeded("p^m is too large");
        v *= base;
    }
    return v;
}

} // namespace

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::recursive: return "recursive";
        case Provenance::explicit_binomial: return "explicit";
        case Provenance::extended_dimension: return "extended-dim";
        case Provenance::extended_redundancy: return "extended-red";
        case Provenance::column_extended: return "column-extended";
        case Provenance::manual: return "manual";
    }
    return "unknown";
}

Code::Code(Matrix generator, Provenance provenance) : generator_(std::move(generator)), provenance_(provenance) {
    if (generator_.rows() == 0) throw DimensionMismatch("a code needs dimension k >= 1");
    if ((provenance_ == Provenance::recursive || provenance_ == Provenance::explicit_binomial) &&
        !is_systematic(generator_))
        throw NotSystematic("generator is not of the form (I_k P)");
    if (!is_good(generator_)) throw NotGood("generator " + dims(generator_) + " is not good");
}

Matrix p_matrix(std::size_t k, std::size_t r, const PrimeField& field) {
    if (k == 0 || r == 0) throw PreconditionViolated("P_{k,r} needs k, r >= 1");
    Matrix out(field, k, r);
    // Each step places an identity block at (row, col) and peels it off the
    // remaining rows x cols problem.
    std::size_t row = 0, col = 0, rows = k, cols = r;
    while (true) {
        const std::size_t block = std::min(rows, cols);
        for (std::size_t i = 0; i < block; ++i) out.set(row + i, col + i, 1);
        if (rows == cols) break;
        if (cols < rows) {
            row += block;
            rows -= block;
        } else {
            col += block;
            cols -= block;
        }
    }
    return out;
}

Code generator_recursive(std::size_t k, std::size_t n, const PrimeField& field) {
    if (k == 0 || k > n) throw PreconditionViolated("need 1 <= k <= n");
    if (n == k) return Code(identity(k, field), Provenance::recursive);
    return Code(hconcat(identity(k, field), p_matrix(k, n - k, field)), Provenance::recursive);
}

Matrix extend_fixed_dimension(const Matrix& g) {
    require_systematic_good(g);
    return hconcat(identity(g.rows(), g.field()), g);
}

Matrix extend_fixed_redundancy(const Matrix& g) {
    require_systematic_good(g);
    const auto& f = g.field();
    const std::size_t k = g.rows(), n = g.cols(), red = n - k;
    Matrix out(f, n, 2 * n - k);
    for (std::size_t i = 0; i < red; ++i) {
        out.set(i, i, 1);
        out.set(i, n + i, 1);
    }
    for (std::size_t i = 0; i < k; ++i) {
        out.set(red + i, red + i, 1);
        for (std::size_t j = 0; j < red; ++j) out.set(red + i, n + j, g.at(i, k + j));
    }
    return out;
}

Matrix dual_generator(const Matrix& g) {
    if (!is_systematic(g)) throw NotSystematic("expected a matrix of the form (I_k P), got " + dims(g));
    const auto& f = g.field();
    const std::size_t k = g.rows(), red = g.cols() - k;
    Matrix out(f, red, g.cols());
    for (std::size_t i = 0; i < red; ++i) {
        for (std::size_t j = 0; j < k; ++j) out.set(i, j, f.neg(g.at(j, k + i)));
        out.set(i, k + i, 1);
    }
    return out;
}

Matrix extension_normals(const Matrix& g) {
    if (!is_good(g)) throw NotGood("input " + dims(g) + " matrix is not good");
    const std::size_t k = g.rows(), n = g.cols();
    Matrix normals(g.field(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> cols;
        for (std::size_t t = n - i; t < n; ++t) cols.push_back(t);
        for (std::size_t t = 0; t + i + 2 <= k; ++t) cols.push_back(t);
        const auto b = nullspace_vector(select_columns(g, cols).transpose());
        for (std::size_t j = 0; j < k; ++j) normals.set(i, j, b[j]);
    }
    return normals;
}

std::vector<Vector> extension_columns(const Matrix& g, std::uint64_t limit) {
    const auto& f = g.field();
    const std::size_t k = g.rows();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= f.modulus() - 1;
        if (count > limit)
            throw LimitExceeded("(q-1)^k = " + std::to_string(f.modulus() - 1) + "^" + std::to_string(k) +
                                " exceeds the limit " + std::to_string(limit));
    }
    const Matrix normals = extension_normals(g);

    std::vector<Vector> out;
    out.reserve(count);
    Vector lambda(k, FieldElement(f, 1));
    while (true) {
        out.push_back(solve(normals, lambda));
        std::size_t pos = k;
        while (pos > 0 && lambda[pos - 1].value() + 1 == f.modulus()) lambda[--pos] = FieldElement(f, 1);
        if (pos == 0) return out;
        lambda[pos - 1] = FieldElement(f, lambda[pos - 1].value() + 1);
    }
}

Vector unique_binary_extension(const Matrix& g) {
    if (g.field().modulus() != 2) throw NotBinary("unique extension only exists over Z_2");
    return extension_columns(g, 1).front();
}

Matrix m_matrix(std::size_t m) {
    if (m == 0) throw PreconditionViolated("M_m is defined for m >= 1");
    if (m > kMaxDoublingOrder)
        throw SizeCapExceeded("M_" + std::to_string(m) + " exceeds the 2^" + std::to_string(kMaxDoublingOrder) +
                              " size cap");
    const PrimeField f2(2);
    Matrix current = Matrix::from_rows(f2, {{1, 0}, {1, 1}});
    for (std::size_t level = 1; level < m; ++level) {
        const Matrix zero(f2, current.rows(), current.cols());
        current = vconcat(hconcat(current, zero), hconcat(current, current));
    }
    return current;
}

std::size_t q_exponent(std::uint32_t p, std::size_t k, std::size_t r) {
    const std::uint64_t target = std::max(k, r);
    std::size_t m = 0;
    for (std::uint64_t v = 1; v < target; v *= p) ++m;
    return m;
}

Matrix q_matrix(const PrimeField& field, std::size_t k, std::size_t r) {
    if (k == 0 || r == 0) throw PreconditionViolated("Q_{k,r} needs k, r >= 1");
    const std::uint64_t pm = checked_power(field.modulus(), q_exponent(field.modulus(), k, r));
    Matrix out(field, k, r);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= r; ++j) out.set(i - 1, j - 1, binom_mod_p(pm - k + i - 1, j - 1, field));
    return out;
}

Code generator_explicit(const PrimeField& field, std::size_t k, std::size_t n) {
    if (k == 0 || k > n) throw PreconditionViolated("need 1 <= k <= n");
    if (n == k) return Code(identity(k, field), Provenance::explicit_binomial);
    return Code(hconcat(identity(k, field), q_matrix(field, k, n - k)), Provenance::explicit_binomial);
}

IntegerMatrix lemma_v_matrix(std::uint64_t n0, std::size_t b) {
    if (b == 0) throw PreconditionViolated("V_b needs b >= 1");
    IntegerMatrix v(b, b);
    for (std::size_t i = 1; i <= b; ++i)
        for (std::size_t j = 1; j <= b; ++j) v.at(i - 1, j - 1) = binomial(n0 + i - 1, j - 1);
    return v;
}

IntegerMatrix lemma_w_integer_matrix(const PrimeField& field, std::size_t m, std::uint64_t a, std::size_t b) {
    if (b == 0) throw PreconditionViolated("W_b needs b >= 1");
    const std::uint64_t pm = checked_power(field.modulus(), m);
    if (a + b > pm)
        throw PreconditionViolated("W_b needs a + b <= p^m, got a + b = " + std::to_string(a + b) +
                                   " > " + std::to_string(pm));
    IntegerMatrix w(b, b);
    for (std::size_t i = 1; i <= b; ++i)
        for (std::size_t j = 1; j <= b; ++j) w.at(i - 1, j - 1) = binomial(pm - 1 + i - b, a + j - 1);
    return w;
}

Matrix lemma_w_matrix(const PrimeField& field, std::size_t m, std::uint64_t a, std::size_t b) {
    return lemma_w_integer_matrix(field, m, a, b).reduce(field);
}

} // namespace burst
