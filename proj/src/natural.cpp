#include "signet/natural.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace signet {

namespace {

constexpr std::uint64_t kLimbBase = 1ULL << 32;
constexpr std::uint32_t kLimbMask = 0xffffffffu;

// operator* falls back to schoolbook below this limb count.
constexpr std::size_t kKaratsubaThreshold = 32;

using Limbs = std::vector<std::uint32_t>;

void trim_vec(Limbs& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

Limbs add_vec(const Limbs& a, const Limbs& b) {
    const std::size_t n = std::max(a.size(), b.size());
    Limbs out(n + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    out[n] = static_cast<std::uint32_t>(carry);
    trim_vec(out);
    return out;
}

// Precondition: value(a) >= value(b), checked by the caller.
Limbs sub_vec(const Limbs& a, const Limbs& b) {
    Limbs out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) diff -= b[i];
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(diff);
    }
    trim_vec(out);
    return out;
}

Limbs mul_school_vec(const Limbs& a, const Limbs& b) {
    if (a.empty() || b.empty())
        return {};
    Limbs out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    trim_vec(out);
    return out;
}

Limbs slice_vec(const Limbs& a, std::size_t from, std::size_t count) {
    if (from >= a.size())
        return {};
    const std::size_t end = std::min(a.size(), from + count);
    Limbs out(a.begin() + static_cast<std::ptrdiff_t>(from),
              a.begin() + static_cast<std::ptrdiff_t>(end));
    trim_vec(out);
    return out;
}

// out += v * 2^(32*offset), in place.
void add_shifted_inplace(Limbs& out, const Limbs& v, std::size_t offset) {
    if (v.empty())
        return;
    if (out.size() < v.size() + offset + 1)
        out.resize(v.size() + offset + 1, 0);
    std::uint64_t carry = 0;
    std::size_t i = 0;
    for (; i < v.size(); ++i) {
        const std::uint64_t sum =
            static_cast<std::uint64_t>(out[i + offset]) + v[i] + carry;
        out[i + offset] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    for (; carry != 0; ++i) {
        const std::uint64_t sum =
            static_cast<std::uint64_t>(out[i + offset]) + carry;
        out[i + offset] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
}

Limbs mul_karatsuba_vec(const Limbs& a, const Limbs& b) {
    if (std::min(a.size(), b.size()) <= kKaratsubaThreshold)
        return mul_school_vec(a, b);

    const std::size_t m = std::min(a.size(), b.size()) / 2;
    const Limbs a0 = slice_vec(a, 0, m);
    const Limbs a1 = slice_vec(a, m, a.size());
    const Limbs b0 = slice_vec(b, 0, m);
    const Limbs b1 = slice_vec(b, m, b.size());

    const Limbs z0 = mul_karatsuba_vec(a0, b0);
    const Limbs z2 = mul_karatsuba_vec(a1, b1);
    // (a0+a1)(b0+b1) - z0 - z2; never negative, so plain naturals suffice
    Limbs z1 = mul_karatsuba_vec(add_vec(a0, a1), add_vec(b0, b1));
    z1 = sub_vec(z1, z0);
    z1 = sub_vec(z1, z2);

    Limbs out = z0;
    add_shifted_inplace(out, z1, m);
    add_shifted_inplace(out, z2, 2 * m);
    trim_vec(out);
    return out;
}

std::strong_ordering compare_vec(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

constexpr std::uint32_t kDecChunkBase = 1000000000u; // 10^9
constexpr int kDecChunkDigits = 9;

} // namespace

Natural::Natural(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & kLimbMask));
        if (const auto hi = static_cast<std::uint32_t>(value >> 32); hi != 0)
            limbs_.push_back(hi);
    }
}

Natural::Natural(std::vector<std::uint32_t> limbs) : limbs_(std::move(limbs)) {
    trim();
}

void Natural::trim() {
    trim_vec(limbs_);
}

Natural Natural::from_decimal(std::string_view text) {
    if (text.empty())
        throw ParseError("empty decimal string");
    for (const char c : text) {
        if (c < '0' || c > '9')
            throw ParseError("invalid decimal digit");
    }
    Natural acc;
    const Natural chunk_base(kDecChunkBase);
    std::size_t pos = 0;
    // first chunk takes the ragged leading digits
    std::size_t first = text.size() % kDecChunkDigits;
    if (first == 0)
        first = kDecChunkDigits;
    while (pos < text.size()) {
        const std::size_t len = (pos == 0) ? first : kDecChunkDigits;
        std::uint32_t chunk = 0;
        for (std::size_t i = 0; i < len; ++i)
            chunk = chunk * 10 + static_cast<std::uint32_t>(text[pos + i] - '0');
        acc = acc * chunk_base + Natural(chunk);
        pos += len;
    }
    return acc;
}

std::string Natural::to_decimal() const {
    if (is_zero())
        return "0";
    const Natural chunk_base(kDecChunkBase);
    std::vector<std::uint32_t> chunks;
    Natural cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = divrem(cur, chunk_base);
        chunks.push_back(r.is_zero() ? 0u : r.limbs_[0]);
        cur = std::move(q);
    }
    std::string out = std::to_string(chunks.back());
    char buf[kDecChunkDigits + 1];
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::uint32_t c = chunks[i];
        for (int d = kDecChunkDigits - 1; d >= 0; --d) {
            buf[d] = static_cast<char>('0' + c % 10);
            c /= 10;
        }
        out.append(buf, kDecChunkDigits);
    }
    return out;
}

Natural Natural::from_hex(std::string_view text) {
    if (text.empty())
        throw ParseError("empty hex string");
    auto nibble = [](char c) -> std::uint32_t {
        if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<std::uint32_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<std::uint32_t>(c - 'A' + 10);
        throw ParseError("invalid hex digit");
    };
    Limbs limbs((text.size() + 7) / 8, 0);
    std::size_t limb = 0;
    unsigned shift = 0;
    for (std::size_t i = text.size(); i-- > 0;) {
        limbs[limb] |= nibble(text[i]) << shift;
        shift += 4;
        if (shift == 32) {
            shift = 0;
            ++limb;
        }
    }
    return Natural(std::move(limbs));
}

std::string Natural::to_hex() const {
    if (is_zero())
        return "0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(limbs_.size() * 8);
    bool leading = true;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        for (int s = 28; s >= 0; s -= 4) {
            const std::uint32_t nib = (limbs_[i] >> s) & 0xfu;
            if (leading && nib == 0)
                continue;
            leading = false;
            out.push_back(digits[nib]);
        }
    }
    return out;
}

std::size_t Natural::bit_length() const {
    if (limbs_.empty())
        return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool Natural::test_bit(std::size_t i) const {
    const std::size_t limb = i / 32;
    if (limb >= limbs_.size())
        return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

std::uint64_t Natural::to_u64() const {
    std::uint64_t v = limbs_.empty() ? 0 : limbs_[0];
    if (limbs_.size() >= 2)
        v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return compare_vec(a.limbs_, b.limbs_);
}

Natural Natural::operator+(const Natural& rhs) const {
    return Natural(add_vec(limbs_, rhs.limbs_));
}

Natural Natural::operator-(const Natural& rhs) const {
    if (*this < rhs)
        throw Underflow("natural subtraction underflow");
    return Natural(sub_vec(limbs_, rhs.limbs_));
}

Natural Natural::operator*(const Natural& rhs) const {
    return Natural(mul_karatsuba_vec(limbs_, rhs.limbs_));
}

Natural mul_schoolbook(const Natural& a, const Natural& b) {
    return Natural(mul_school_vec(a.limbs_, b.limbs_));
}

Natural Natural::operator/(const Natural& rhs) const {
    return divrem(*this, rhs).quotient;
}

Natural Natural::operator%(const Natural& rhs) const {
    return divrem(*this, rhs).remainder;
}

Natural Natural::operator<<(std::size_t bits) const {
    if (limbs_.empty())
        return {};
    const std::size_t limb_shift = bits / 32;
    const unsigned bit_shift = static_cast<unsigned>(bits % 32);
    Limbs out(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const std::uint64_t shifted = static_cast<std::uint64_t>(limbs_[i])
                                      << bit_shift;
        out[i + limb_shift] |= static_cast<std::uint32_t>(shifted);
        out[i + limb_shift + 1] |= static_cast<std::uint32_t>(shifted >> 32);
    }
    return Natural(std::move(out));
}

Natural Natural::operator>>(std::size_t bits) const {
    const std::size_t limb_shift = bits / 32;
    if (limb_shift >= limbs_.size())
        return {};
    const unsigned bit_shift = static_cast<unsigned>(bits % 32);
    Limbs out(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i + limb_shift]);
        if (i + limb_shift + 1 < limbs_.size())
            cur |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << 32;
        out[i] = static_cast<std::uint32_t>(cur >> bit_shift);
    }
    return Natural(std::move(out));
}

// Knuth algorithm D: normalize the divisor so its top limb has the high bit
// set, estimate each quotient digit from the top two dividend limbs, and
// correct the estimate at most twice before the multiply-subtract.
Natural::DivRem Natural::divrem(const Natural& a, const Natural& b) {
    if (b.is_zero())
        throw DivisionByZero("division by zero");
    if (a < b)
        return {Natural(), a};

    const Limbs& u = a.limbs_;
    const Limbs& v = b.limbs_;
    const std::size_t n = v.size();
    const std::size_t m = u.size();

    if (n == 1) {
        const std::uint64_t d = v[0];
        Limbs q(m);
        std::uint64_t rem = 0;
        for (std::size_t i = m; i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | u[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        return {Natural(std::move(q)), Natural(rem)};
    }

    const unsigned s = static_cast<unsigned>(std::countl_zero(v.back()));

    Limbs un(m + 1);
    Limbs vn(n);
    if (s != 0) {
        un[m] = u[m - 1] >> (32 - s);
        for (std::size_t i = m - 1; i > 0; --i)
            un[i] = (u[i] << s) | (u[i - 1] >> (32 - s));
        un[0] = u[0] << s;
        for (std::size_t i = n - 1; i > 0; --i)
            vn[i] = (v[i] << s) | (v[i - 1] >> (32 - s));
        vn[0] = v[0] << s;
    } else {
        std::copy(u.begin(), u.end(), un.begin());
        un[m] = 0;
        vn = v;
    }

    Limbs q(m - n + 1, 0);
    for (std::size_t j = m - n + 1; j-- > 0;) {
        const std::uint64_t top =
            (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = top / vn[n - 1];
        std::uint64_t rhat = top % vn[n - 1];
        while (qhat >= kLimbBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kLimbBase)
                break;
        }

        // multiply and subtract qhat * vn from un[j .. j+n]
        std::int64_t borrow = 0;
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t p = qhat * vn[i];
            t = static_cast<std::int64_t>(un[i + j]) - borrow -
                static_cast<std::int64_t>(p & kLimbMask);
            un[i + j] = static_cast<std::uint32_t>(t);
            borrow = static_cast<std::int64_t>(p >> 32) - (t >> 32);
        }
        t = static_cast<std::int64_t>(un[j + n]) - borrow;
        un[j + n] = static_cast<std::uint32_t>(t);

        q[j] = static_cast<std::uint32_t>(qhat);
        if (t < 0) { // estimate was one too large: add the divisor back
            --q[j];
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t sum =
                    static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
                un[i + j] = static_cast<std::uint32_t>(sum);
                carry = sum >> 32;
            }
            un[j + n] = static_cast<std::uint32_t>(un[j + n] + carry);
        }
    }

    Limbs r(n);
    if (s != 0) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            r[i] = (un[i] >> s) |
                   (static_cast<std::uint64_t>(un[i + 1]) << (32 - s));
        r[n - 1] = un[n - 1] >> s;
    } else {
        std::copy(un.begin(), un.begin() + static_cast<std::ptrdiff_t>(n),
                  r.begin());
    }
    return {Natural(std::move(q)), Natural(std::move(r))};
}

Natural gcd(Natural a, Natural b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Natural r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

namespace {

// Bezout coefficient with an explicit sign flag, since Natural cannot go
// negative. The magnitudes follow s_next = s_prev -/+ q*s_cur with strictly
// alternating effective signs.
struct SignedNat {
    Natural mag;
    bool negative = false;
};

SignedNat signed_sub_product(const SignedNat& lhs, const Natural& q,
                             const SignedNat& rhs) {
    Natural prod = q * rhs.mag;
    if (lhs.negative == rhs.negative) {
        if (lhs.mag >= prod)
            return {lhs.mag - prod, lhs.negative && !(lhs.mag == prod)};
        return {prod - lhs.mag, !lhs.negative};
    }
    return {lhs.mag + prod, lhs.negative};
}

} // namespace

Natural mod_inverse(const Natural& e, const Natural& m) {
    if (m.is_zero() || m.is_one())
        throw InvalidModulus("mod_inverse requires modulus > 1");

    Natural old_r = e % m;
    Natural r = m;
    SignedNat old_s{Natural(1), false};
    SignedNat s{Natural(0), false};

    while (!r.is_zero()) {
        auto [q, rem] = Natural::divrem(old_r, r);
        old_r = std::move(r);
        r = std::move(rem);
        SignedNat next = signed_sub_product(old_s, q, s);
        old_s = std::move(s);
        s = std::move(next);
    }

    if (!old_r.is_one())
        throw NotInvertible("base is not invertible modulo m");

    Natural d = old_s.mag % m;
    if (old_s.negative && !d.is_zero())
        d = m - d;

    // defining congruence, re-checked on every successful return
    if (!((e % m) * d % m).is_one())
        throw std::logic_error("mod_inverse self-check failed");
    return d;
}

Natural mod_exp(const Natural& base, const Natural& exp, const Natural& m) {
    if (m.is_zero() || m.is_one())
        throw InvalidModulus("mod_exp requires modulus > 1");
    const Natural b = base % m;
    Natural result(1);
    for (std::size_t i = exp.bit_length(); i-- > 0;) {
        result = result * result % m;
        if (exp.test_bit(i))
            result = result * b % m;
    }
    return result;
}

Natural random_below(Rng& rng, const Natural& n) {
    if (n.is_zero())
        throw std::invalid_argument("random_below requires n >= 1");
    const std::size_t bits = n.bit_length();
    const std::size_t nlimbs = (bits + 31) / 32;
    const unsigned top_bits = static_cast<unsigned>(bits - 32 * (nlimbs - 1));
    const std::uint32_t mask =
        top_bits == 32 ? kLimbMask : (1u << top_bits) - 1;
    for (;;) {
        std::vector<std::uint32_t> limbs(nlimbs);
        for (auto& w : limbs)
            w = rng.next_u32();
        limbs.back() &= mask;
        Natural candidate(std::move(limbs));
        if (candidate < n)
            return candidate;
    }
}

} // namespace signet
