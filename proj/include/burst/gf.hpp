#pragma once

#include <cstdint>
#include <iosfwd>

namespace burst {

/// Canonical residue in [0, p).
using Residue = std::uint32_t;

/// The prime field Z_p. Moduli are capped below 2^16 so a product of two
/// residues always fits in 32 bits.
class PrimeField {
public:
    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    /// Throws InvalidModulus unless 2 <= p < 2^16 and p is prime.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Residue reduce(std::int64_t v) const noexcept;
    Residue add(Residue a, Residue b) const noexcept { return a + b >= p_ ? a + b - p_ : a + b; }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept { return static_cast<Residue>((std::uint64_t{a} * b) % p_); }
    /// Throws ZeroInverse on 0.
    Residue inv(Residue a) const;
    Residue pow(Residue a, std::uint64_t e) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

class FieldElement {
public:
    /// Reduces `value` into [0, p).
    FieldElement(const PrimeField& field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

    const PrimeField& field() const noexcept { return field_; }
    Residue value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    /// Throws ZeroInverse when this is zero.
    FieldElement inv() const;

    FieldElement operator-() const { return {field_, field_.neg(value_), Raw{}}; }
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

    /// Elements of different fields compare unequal.
    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    struct Raw {};
    FieldElement(const PrimeField& field, Residue value, Raw) : field_(field), value_(value) {}

    PrimeField field_;
    Residue value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// C(n, k) mod p by Lucas' theorem: the product of the base-p digit
/// binomials, zero as soon as a digit of k exceeds the matching digit of n.
FieldElement binom_mod_p(std::uint64_t n, std::uint64_t k, const PrimeField& field);

} // namespace burst
