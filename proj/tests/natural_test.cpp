#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>

#include "signet/errors.hpp"
#include "signet/natural.hpp"
#include "signet/rng.hpp"

using signet::Natural;

namespace {

// Test-local randomness, independent of signet::Rng.
std::mt19937_64 test_rng(20240811);

std::uint64_t rand_u64() {
    return test_rng();
}

std::uint64_t rand_below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(test_rng);
}

// Random value of roughly `bits` bits, assembled through shift/add so the
// string codecs are not in the construction path.
Natural random_natural(std::size_t bits) {
    Natural acc;
    for (std::size_t produced = 0; produced < bits; produced += 32)
        acc = (acc << 32) + Natural(test_rng() & 0xffffffffu);
    return acc >> (((bits + 31) / 32) * 32 - bits);
}

bool canonical(const Natural& a) {
    return a.limbs().empty() || a.limbs().back() != 0;
}

} // namespace

TEST_CASE("decimal codec: zero, radix boundary, rejects") {
    CHECK(Natural::from_decimal("0").is_zero());
    CHECK(Natural::from_decimal("0").limbs().empty());
    CHECK(Natural::from_decimal("000").is_zero());

    const Natural radix = Natural::from_decimal("4294967296"); // 2^32
    CHECK(radix.limbs() == std::vector<std::uint32_t>{0, 1});
    CHECK(radix.to_decimal() == "4294967296");

    CHECK(Natural().to_decimal() == "0");
    CHECK_THROWS_AS(Natural::from_decimal(""), signet::ParseError);
    CHECK_THROWS_AS(Natural::from_decimal("12a"), signet::ParseError);
    CHECK_THROWS_AS(Natural::from_decimal("-1"), signet::ParseError);
    CHECK_THROWS_AS(Natural::from_decimal(" 1"), signet::ParseError);
}

TEST_CASE("decimal codec agrees with native formatting on 64-bit values") {
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t v = rand_u64();
        const std::string text = std::to_string(v);
        CHECK(Natural(v).to_decimal() == text);
        CHECK(Natural::from_decimal(text).to_u64() == v);
    }
    CHECK(Natural(0).to_decimal() == "0");
    CHECK(Natural(~0ULL).to_decimal() == "18446744073709551615");
}

TEST_CASE("hex codec: basics and rejects") {
    CHECK(Natural::from_hex("ff").to_u64() == 255);
    CHECK(Natural::from_hex("FF").to_u64() == 255);
    CHECK(Natural::from_hex("0").is_zero());
    CHECK(Natural::from_hex("0").to_hex() == "0");
    CHECK(Natural::from_hex("00ff").to_hex() == "ff");
    CHECK(Natural(0xdeadbeefcafeULL).to_hex() == "deadbeefcafe");
    CHECK_THROWS_AS(Natural::from_hex(""), signet::ParseError);
    CHECK_THROWS_AS(Natural::from_hex("xyz"), signet::ParseError);
    CHECK_THROWS_AS(Natural::from_hex("12 34"), signet::ParseError);
}

TEST_CASE("hex round-trips cross-checked against the decimal path") {
    for (int i = 0; i < 2000; ++i) {
        const Natural a = random_natural(1 + rand_below(256));
        const Natural via_hex = Natural::from_hex(a.to_hex());
        const Natural via_dec = Natural::from_decimal(a.to_decimal());
        CHECK(via_hex == a);
        CHECK(via_dec == a);
        CHECK(via_hex.to_decimal() == a.to_decimal());
    }
}

TEST_CASE("decimal/hex round-trip identity up to 4096 bits") {
    for (int i = 0; i < 200; ++i) {
        const Natural a = random_natural(1 + rand_below(4096));
        CHECK(Natural::from_decimal(a.to_decimal()) == a);
        CHECK(Natural::from_hex(a.to_hex()) == a);
    }
}

TEST_CASE("comparison: trivial cases and native oracle") {
    CHECK(signet::compare(Natural(0), Natural(0)) ==
          std::strong_ordering::equal);
    const Natural two32 = Natural(1) << 32;
    CHECK(signet::compare(two32, Natural(0xffffffffu)) ==
          std::strong_ordering::greater);
    CHECK(Natural(7) < Natural(8));

    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t a = rand_u64();
        const std::uint64_t b = rand_u64();
        CHECK((Natural(a) <=> Natural(b)) == (a <=> b));
    }
}

TEST_CASE("addition: identity, carry propagation, native oracle") {
    const Natural a = random_natural(200);
    CHECK(a + Natural(0) == a);

    const Natural carry = Natural(0xffffffffu) + Natural(1);
    CHECK(carry.limbs() == std::vector<std::uint32_t>{0, 1});

    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t x = rand_u64() >> 1; // < 2^63
        const std::uint64_t y = rand_u64() >> 1;
        CHECK((Natural(x) + Natural(y)).to_u64() == x + y);
    }
}

TEST_CASE("subtraction: identity, multi-limb borrow, underflow, inverse") {
    const Natural a = random_natural(300);
    CHECK((a - a).is_zero());

    const Natural two64 = Natural(1) << 64;
    CHECK((two64 - Natural(1)).to_u64() == 0xffffffffffffffffULL);

    CHECK_THROWS_AS(Natural(3) - Natural(5), signet::Underflow);

    for (int i = 0; i < 100000; ++i) {
        std::uint64_t x = rand_u64() >> 1;
        std::uint64_t y = rand_u64() >> 1;
        if (x < y)
            std::swap(x, y);
        CHECK((Natural(x) - Natural(y)).to_u64() == x - y);
    }
    // inverse property at multi-limb sizes
    for (int i = 0; i < 2000; ++i) {
        Natural x = random_natural(1 + rand_below(512));
        Natural y = random_natural(1 + rand_below(512));
        if (x < y)
            std::swap(x, y);
        CHECK((x - y) + y == x);
    }
}

TEST_CASE("multiplication: identities and native oracle") {
    const Natural a = random_natural(400);
    CHECK(a * Natural(1) == a);
    CHECK((a * Natural(0)).is_zero());

    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t x = rand_u64() & 0xffffffffu;
        const std::uint64_t y = rand_u64() & 0xffffffffu;
        CHECK((Natural(x) * Natural(y)).to_u64() == x * y);
    }
}

TEST_CASE("ring laws on random triples up to 512 bits") {
    for (int i = 0; i < 300; ++i) {
        const Natural x = random_natural(1 + rand_below(512));
        const Natural y = random_natural(1 + rand_below(512));
        const Natural z = random_natural(1 + rand_below(512));
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("karatsuba agrees with the schoolbook reference") {
    // sizes straddle the threshold, including unbalanced shapes
    for (int i = 0; i < 150; ++i) {
        const Natural a = random_natural(1 + rand_below(4000));
        const Natural b = random_natural(1 + rand_below(4000));
        CHECK(a * b == signet::mul_schoolbook(a, b));
    }
    const Natural big = random_natural(6000);
    CHECK(big * Natural(1) == big);
    CHECK((big * Natural(0)).is_zero());
    CHECK(big * big == signet::mul_schoolbook(big, big));
}

TEST_CASE("division: trivial cases and error") {
    const auto [q7, r7] = Natural::divrem(Natural(7), Natural(2));
    CHECK(q7.to_u64() == 3);
    CHECK(r7.to_u64() == 1);

    const Natural a = random_natural(300);
    const auto [qa, ra] = Natural::divrem(a, Natural(1));
    CHECK(qa == a);
    CHECK(ra.is_zero());

    CHECK_THROWS_AS(Natural::divrem(a, Natural(0)), signet::DivisionByZero);
    CHECK((Natural(5) / Natural(8)).is_zero());
    CHECK(Natural(5) % Natural(8) == Natural(5));
}

TEST_CASE("division agrees with native 64-bit arithmetic") {
    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t x = rand_u64() >> 1;
        const std::uint64_t y = 1 + rand_below((1ULL << 63) - 1);
        const auto [q, r] = Natural::divrem(Natural(x), Natural(y));
        CHECK(q.to_u64() == x / y);
        CHECK(r.to_u64() == x % y);
    }
}

TEST_CASE("division reconstruction identity on random 256-bit pairs") {
    for (int i = 0; i < 10000; ++i) {
        const Natural a = random_natural(1 + rand_below(256));
        Natural b = random_natural(1 + rand_below(256));
        if (b.is_zero())
            b = Natural(1);
        const auto [q, r] = Natural::divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r < b);
        CHECK(canonical(q));
        CHECK(canonical(r));
    }
}

TEST_CASE("division inverts multiplication for constructed q, b, r") {
    // a = q*b + r with r < b makes (q, r) the unique Euclidean answer;
    // skewed sizes keep the quotient-estimate corrections busy.
    for (int i = 0; i < 10000; ++i) {
        const Natural q = random_natural(1 + rand_below(320));
        Natural b = random_natural(1 + rand_below(320));
        if (b.is_zero())
            b = Natural(1);
        const Natural r = b > Natural(1)
                              ? random_natural(b.bit_length() - 1) % b
                              : Natural(0);
        const Natural a = q * b + r;
        const auto [qq, rr] = Natural::divrem(a, b);
        CHECK(qq == q);
        CHECK(rr == r);
    }
}

TEST_CASE("division stresses the correction path with dense limbs") {
    // divisors with tiny normalized headroom maximize qhat overestimates
    const Natural ones32 = Natural(0xffffffffu);
    for (int i = 0; i < 2000; ++i) {
        Natural b;
        const std::size_t blimbs = 2 + rand_below(6);
        for (std::size_t k = 0; k < blimbs; ++k)
            b = (b << 32) +
                (rand_below(4) == 0 ? ones32 : Natural(test_rng() & 0xffffffffu));
        if (b.is_zero())
            b = ones32;
        Natural a;
        const std::size_t alimbs = blimbs + rand_below(6);
        for (std::size_t k = 0; k < alimbs; ++k)
            a = (a << 32) + (rand_below(2) == 0 ? ones32 : Natural(test_rng() & 0xffffffffu));
        const auto [q, r] = Natural::divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r < b);
    }
}

TEST_CASE("gcd: trivial cases, rejects, brute-force oracle") {
    CHECK(signet::gcd(Natural(12), Natural(18)).to_u64() == 6);
    const Natural a = random_natural(100);
    CHECK(signet::gcd(a, Natural(0)) == a);
    CHECK(signet::gcd(Natural(0), a) == a);
    CHECK_THROWS_AS(signet::gcd(Natural(0), Natural(0)),
                    std::invalid_argument);

    for (int i = 0; i < 40; ++i) {
        const std::uint64_t x = 1 + rand_below((1 << 20) - 1);
        const std::uint64_t y = 1 + rand_below((1 << 20) - 1);
        std::uint64_t expected = 1;
        for (std::uint64_t d = std::min(x, y); d >= 1; --d) {
            if (x % d == 0 && y % d == 0) {
                expected = d;
                break;
            }
        }
        CHECK(signet::gcd(Natural(x), Natural(y)).to_u64() == expected);
    }
}

TEST_CASE("mod_inverse: known values and failure") {
    CHECK(signet::mod_inverse(Natural(3), Natural(40)).to_u64() == 27);
    CHECK(signet::mod_inverse(Natural(17), Natural(3120)).to_u64() == 2753);
    CHECK_THROWS_AS(signet::mod_inverse(Natural(2), Natural(4)),
                    signet::NotInvertible);
    CHECK_THROWS_AS(signet::mod_inverse(Natural(3), Natural(1)),
                    signet::InvalidModulus);
    CHECK_THROWS_AS(signet::mod_inverse(Natural(3), Natural(0)),
                    signet::InvalidModulus);
}

TEST_CASE("mod_inverse satisfies its congruence on random inputs") {
    int produced = 0;
    while (produced < 500) {
        const Natural m = random_natural(2 + rand_below(192)) + Natural(2);
        const Natural e = random_natural(1 + rand_below(192));
        if (e.is_zero() || !signet::gcd(e, m).is_one())
            continue;
        const Natural d = signet::mod_inverse(e, m);
        CHECK(Natural(1) <= d);
        CHECK(d < m);
        CHECK((e * d % m).is_one());
        ++produced;
    }
}

TEST_CASE("mod_exp: empty product, known values, guards") {
    const Natural m(1000);
    CHECK(signet::mod_exp(Natural(5), Natural(0), m).is_one());
    CHECK(signet::mod_exp(Natural(0), Natural(0), m).is_one()); // 0^0 = 1
    CHECK(signet::mod_exp(Natural(2), Natural(10), m).to_u64() == 24);
    CHECK(signet::mod_exp(Natural(0), Natural(5), m).is_zero());
    CHECK_THROWS_AS(signet::mod_exp(Natural(2), Natural(3), Natural(1)),
                    signet::InvalidModulus);
    CHECK_THROWS_AS(signet::mod_exp(Natural(2), Natural(3), Natural(0)),
                    signet::InvalidModulus);
}

TEST_CASE("mod_exp matches a naive multiplication loop") {
    // 561 = 3*11*17 is a Carmichael number; the Fermat identity holding for
    // base 7 is exactly what the naive loop should reproduce.
    std::uint64_t naive = 1;
    for (int i = 0; i < 560; ++i)
        naive = naive * 7 % 561;
    CHECK(naive == 1);
    CHECK(signet::mod_exp(Natural(7), Natural(560), Natural(561)).to_u64() ==
          naive);

    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t base = rand_below(1 << 16);
        const std::uint64_t exp = rand_below(1 << 12);
        const std::uint64_t m = 2 + rand_below((1 << 16) - 2);
        std::uint64_t expected = 1 % m;
        for (std::uint64_t k = 0; k < exp; ++k)
            expected = expected * (base % m) % m;
        CHECK(signet::mod_exp(Natural(base), Natural(exp), Natural(m))
                  .to_u64() == expected);
    }
}

TEST_CASE("bit_length and test_bit") {
    CHECK(Natural(0).bit_length() == 0);
    CHECK(Natural(1).bit_length() == 1);
    CHECK(Natural(256).bit_length() == 9);
    CHECK((Natural(1) << 512).bit_length() == 513);

    CHECK(Natural(5).test_bit(0));
    CHECK_FALSE(Natural(5).test_bit(1));
    CHECK(Natural(5).test_bit(2));
    CHECK_FALSE(Natural(5).test_bit(64));

    for (int i = 0; i < 1000; ++i) {
        const Natural a = random_natural(1 + rand_below(300)) + Natural(1);
        const std::size_t k = a.bit_length();
        CHECK((Natural(1) << (k - 1)) <= a);
        CHECK(a < (Natural(1) << k));
    }
}

TEST_CASE("shifts round-trip and match multiplication by powers of two") {
    for (int i = 0; i < 500; ++i) {
        const Natural a = random_natural(1 + rand_below(400));
        const std::size_t k = rand_below(200);
        CHECK(((a << k) >> k) == a);
        CHECK((a << k) == a * (Natural(1) << k));
    }
    const Natural a = random_natural(100);
    CHECK((a << 0) == a);
    CHECK((a >> 0) == a);
    CHECK((a >> 5000).is_zero());
}

TEST_CASE("random_below: bounds, determinism, rejects") {
    signet::Rng r0(1);
    CHECK_THROWS_AS(signet::random_below(r0, Natural(0)),
                    std::invalid_argument);

    signet::Rng r1(42);
    signet::Rng r2(42);
    const Natural n = (Natural(1) << 200) + Natural(12345);
    for (int i = 0; i < 10000; ++i) {
        const Natural a = signet::random_below(r1, n);
        const Natural b = signet::random_below(r2, n);
        CHECK(a == b);
        CHECK(a < n);
    }
    // n = 1 only ever yields zero
    signet::Rng r3(7);
    for (int i = 0; i < 100; ++i)
        CHECK(signet::random_below(r3, Natural(1)).is_zero());
}

TEST_CASE("canonical form is preserved by every operation") {
    for (int i = 0; i < 2000; ++i) {
        const Natural x = random_natural(1 + rand_below(256));
        Natural y = random_natural(1 + rand_below(256));
        CHECK(canonical(x + y));
        CHECK(canonical(x * y));
        if (x >= y)
            CHECK(canonical(x - y));
        if (!y.is_zero()) {
            const auto [q, r] = Natural::divrem(x, y);
            CHECK(canonical(q));
            CHECK(canonical(r));
        }
        CHECK(canonical(x << rand_below(64)));
        CHECK(canonical(x >> rand_below(64)));
    }
    // equality of values is equality of canonical limb sequences
    const Natural a = (Natural(1) << 96) + Natural(5);
    const Natural b = ((Natural(1) << 96) + Natural(6)) - Natural(1);
    CHECK(a == b);
    CHECK(a.limbs() == b.limbs());
}
