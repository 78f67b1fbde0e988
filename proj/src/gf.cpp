#include "burst/gf.hpp"

#include <ostream>
#include <string>

#include "burst/errors.hpp"

namespace burst {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= kMaxModulus)
        throw InvalidModulus("modulus " + std::to_string(p) + " exceeds the 2^16 cap");
    if (!is_prime(p))
        throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
}

Residue PrimeField::reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Residue>(r);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    Residue result = 1 % p_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw ZeroInverse("zero has no inverse in Z_" + std::to_string(p_));
    // Extended Euclid on (a, p).
    std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        auto q = r0 / r1;
        auto r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        auto t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return reduce(t0);
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw FieldMismatch("operands live in Z_" + std::to_string(a.field().modulus()) + " and Z_" +
                            std::to_string(b.field().modulus()));
}

} // namespace

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_), Raw{}}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_), FieldElement::Raw{}};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_), FieldElement::Raw{}};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_), FieldElement::Raw{}};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

FieldElement binom_mod_p(std::uint64_t n, std::uint64_t k, const PrimeField& field) {
    const std::uint64_t p = field.modulus();
    Residue result = 1;
    while (k > 0) {
        const auto nd = static_cast<Residue>(n % p);
        const auto kd = static_cast<Residue>(k % p);
        if (kd > nd) return {field, 0};
        // C(nd, kd) with nd < p: the denominator kd! is a unit.
        Residue num = 1, den = 1;
        for (Residue i = 0; i < kd; ++i) {
            num = field.mul(num, nd - i);
            den = field.mul(den, i + 1);
        }
        result = field.mul(result, field.mul(num, field.inv(den)));
        n /= p;
        k /= p;
    }
    return {field, result};
}

} // namespace burst
