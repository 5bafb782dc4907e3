#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "signet/errors.hpp"
#include "signet/rng.hpp"

namespace signet {

/// Arbitrary-precision natural number in base 2^32, least significant limb
/// first. Canonical form is enforced by every constructor and operation:
/// the highest limb is nonzero, and zero is the empty limb vector. Values
/// are immutable in spirit -- all operations return fresh values -- so they
/// can be shared freely across threads.
class Natural {
public:
    Natural() = default;
    explicit Natural(std::uint64_t value);

    /// Parse a nonempty string of decimal digits. Throws ParseError otherwise.
    static Natural from_decimal(std::string_view text);
    /// Parse a nonempty string of hex digits (either case). Throws ParseError.
    static Natural from_hex(std::string_view text);

    /// Decimal rendering, no leading zeros; zero renders as "0".
    std::string to_decimal() const;
    /// Lowercase hex rendering, no leading zeros; zero renders as "0".
    std::string to_hex() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u) != 0; }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1u; }

    /// Number of significant bits; bit_length(0) == 0.
    std::size_t bit_length() const;
    /// Bit i of the value (bits beyond the top limb read as 0).
    bool test_bit(std::size_t i) const;

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const; // precondition: fits_u64()

    const std::vector<std::uint32_t>& limbs() const { return limbs_; }

    friend bool operator==(const Natural& a, const Natural& b) = default;
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

    Natural operator+(const Natural& rhs) const;
    /// Throws Underflow when *this < rhs.
    Natural operator-(const Natural& rhs) const;
    Natural operator*(const Natural& rhs) const;
    Natural operator/(const Natural& rhs) const;
    Natural operator%(const Natural& rhs) const;
    Natural operator<<(std::size_t bits) const;
    Natural operator>>(std::size_t bits) const;

    struct DivRem;
    /// Quotient and remainder with a == q*b + r and 0 <= r < b.
    /// Throws DivisionByZero when b is zero.
    static DivRem divrem(const Natural& a, const Natural& b);

private:
    explicit Natural(std::vector<std::uint32_t> limbs);
    void trim();

    friend Natural mul_schoolbook(const Natural& a, const Natural& b);
    friend Natural random_below(Rng& rng, const Natural& n);

    std::vector<std::uint32_t> limbs_;
};

struct Natural::DivRem {
    Natural quotient;
    Natural remainder;
};

/// Three-way comparison consistent with integer values.
inline std::strong_ordering compare(const Natural& a, const Natural& b) {
    return a <=> b;
}

/// Schoolbook O(n^2) product. This is the reference multiplication path;
/// operator* switches to Karatsuba above a limb-count threshold and is
/// differential-tested against this one.
Natural mul_schoolbook(const Natural& a, const Natural& b);

/// Greatest common divisor; gcd(a, 0) == a. Rejects gcd(0, 0).
Natural gcd(Natural a, Natural b);

/// The d in [1, m) with (e*d) mod m == 1, via the iterative extended
/// Euclidean algorithm with explicit sign tracking. Throws NotInvertible
/// when gcd(e, m) != 1 and InvalidModulus when m <= 1. Every successful
/// return is re-checked against its defining congruence.
Natural mod_inverse(const Natural& e, const Natural& m);

/// base^exp mod m by left-to-right binary square-and-multiply, reducing
/// after every step. exp == 0 yields 1 (0^0 == 1 by the empty-product
/// convention). Throws InvalidModulus when m <= 1.
Natural mod_exp(const Natural& base, const Natural& exp, const Natural& m);

/// Uniform value in [0, n) by rejection sampling. Rejects n == 0.
Natural random_below(Rng& rng, const Natural& n);

} // namespace signet
