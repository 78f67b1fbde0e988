#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "burst/integer_matrix.hpp"
#include "burst/matrix.hpp"

namespace burst {

enum class Provenance {
    recursive,
    explicit_binomial,
    extended_dimension,
    extended_redundancy,
    column_extended,
    manual,
};

std::string_view to_string(Provenance p);

/// An [n,k] code over Z_p that corrects every cyclic burst of n-k erasures,
/// held as a good k x n generator matrix. Construction validates goodness.
class Code {
public:
    /// Throws NotGood if some cyclic window of `generator` is dependent, and
    /// NotSystematic if a recursive/explicit code is not of the form (I_k P).
    explicit Code(Matrix generator, Provenance provenance = Provenance::manual);

    const PrimeField& field() const noexcept { return generator_.field(); }
    std::size_t k() const noexcept { return generator_.rows(); }
    std::size_t n() const noexcept { return generator_.cols(); }
    const Matrix& generator() const noexcept { return generator_; }
    Provenance provenance() const noexcept { return provenance_; }

private:
    Matrix generator_;
    Provenance provenance_;
};

/// The 0/1 matrix P_{k,r}: [I_r; P_{k-r,r}] for r < k, I_k for r = k and
/// (I_k P_{k,r-k}) for r > k. Built by walking the alternation iteratively.
Matrix p_matrix(std::size_t k, std::size_t r, const PrimeField& field);

/// (I_k P_{k,n-k}), or I_k when n = k.
Code generator_recursive(std::size_t k, std::size_t n, const PrimeField& field);

/// (I_k I_k P) from a good systematic (I_k P).
Matrix extend_fixed_dimension(const Matrix& g);

/// The n x (2n-k) matrix [[I_{n-k}, 0, I_{n-k}], [0, I_k, P]] from a good
/// systematic k x n matrix (I_k P).
Matrix extend_fixed_redundancy(const Matrix& g);

/// (-P^T I_{n-k}) for systematic (I_k P). For n = k the result has no rows.
Matrix dual_generator(const Matrix& g);

/// The rows b_0..b_{k-1} used to enumerate extension columns: b_i is the
/// normalized vector orthogonal to the k-1 columns m_{n-i}..m_{n-1},
/// m_0..m_{k-i-2}. A column x extends G to a good matrix exactly when
/// <b_i, x> != 0 for every i. Throws NotGood.
Matrix extension_normals(const Matrix& g);

/// Every x with (G x) good, (q-1)^k of them, listed in lexicographic order
/// of the inner products (<b_0,x>, ..., <b_{k-1},x>). Throws NotGood, and
/// LimitExceeded when (q-1)^k > limit.
std::vector<Vector> extension_columns(const Matrix& g, std::uint64_t limit);

/// The single column that keeps a good binary matrix good. Throws NotBinary
/// or NotGood.
Vector unique_binary_extension(const Matrix& g);

/// Largest m accepted by m_matrix (2^m columns).
inline constexpr std::size_t kMaxDoublingOrder = 9;

/// M_1 = [[1,0],[1,1]], M_{m+1} = [[M_m, 0], [M_m, M_m]] over Z_2. Throws
/// SizeCapExceeded above kMaxDoublingOrder and PreconditionViolated for m = 0.
Matrix m_matrix(std::size_t m);

/// Q_{k,r}(i,j) = C(p^m - k + i - 1, j - 1) mod p (1-based i, j) with m
/// the smallest exponent for which p^m >= k and p^m >= r.
Matrix q_matrix(const PrimeField& field, std::size_t k, std::size_t r);

/// (I_k Q_{k,n-k}), or I_k when n = k. Every prefix of at least k columns is
/// good.
Code generator_explicit(const PrimeField& field, std::size_t k, std::size_t n);

/// V_b(i,j) = C(n0 + i - 1, j - 1) over the integers; unimodular.
IntegerMatrix lemma_v_matrix(std::uint64_t n0, std::size_t b);

/// W_b(i,j) = C(p^m - 1 + i - b, a + j - 1) over the integers. Throws
/// PreconditionViolated when a + b > p^m.
IntegerMatrix lemma_w_integer_matrix(const PrimeField& field, std::size_t m, std::uint64_t a, std::size_t b);

/// W_b reduced mod p; invertible over Z_p.
Matrix lemma_w_matrix(const PrimeField& field, std::size_t m, std::uint64_t a, std::size_t b);

/// Smallest m with p^m >= max(k, r).
std::size_t q_exponent(std::uint32_t p, std::size_t k, std::size_t r);

} // namespace burst
