#include "signet/sha1.hpp"

#include <bit>
#include <cstddef>

namespace signet::sha1 {

namespace {

constexpr std::array<std::uint32_t, 5> kIv = {
    0x67452301u, 0xefcdab89u, 0x98badcfeu, 0x10325476u, 0xc3d2e1f0u};

// additive constants y1..y4, one per 20-step round
constexpr std::array<std::uint32_t, 4> kRoundConstant = {
    0x5a827999u, 0x6ed9eba1u, 0x8f1bbcdcu, 0xca62c1d6u};

} // namespace

ChainingState initial_state() {
    return {kIv};
}

std::vector<Block> pad_message(std::span<const std::uint8_t> message) {
    const std::uint64_t bit_length =
        static_cast<std::uint64_t>(message.size()) * 8;

    // message, 0x80 marker, zero fill to 56 mod 64, 8 length bytes
    std::size_t total = message.size() + 1;
    while (total % 64 != 56)
        ++total;
    total += 8;

    std::vector<Block> blocks(total / 64);
    auto byte_at = [&](std::size_t i) -> std::uint8_t {
        if (i < message.size())
            return message[i];
        if (i == message.size())
            return 0x80;
        if (i >= total - 8) {
            const unsigned shift = static_cast<unsigned>(8 * (total - 1 - i));
            return static_cast<std::uint8_t>(bit_length >> shift);
        }
        return 0;
    };
    for (std::size_t i = 0; i < total; ++i) {
        // big-endian packing within each 32-bit word
        const std::size_t word = (i % 64) / 4;
        const unsigned shift = static_cast<unsigned>(8 * (3 - i % 4));
        blocks[i / 64][word] |= static_cast<std::uint32_t>(byte_at(i)) << shift;
    }
    return blocks;
}

std::array<std::uint32_t, 80> expand_schedule(const Block& block) {
    std::array<std::uint32_t, 80> x{};
    for (std::size_t j = 0; j < 16; ++j)
        x[j] = block[j];
    for (std::size_t j = 16; j < 80; ++j)
        x[j] = std::rotl(x[j - 3] ^ x[j - 8] ^ x[j - 14] ^ x[j - 16], 1);
    return x;
}

std::uint32_t round_logic(int round, std::uint32_t u, std::uint32_t v,
                          std::uint32_t w) {
    switch (round) {
    case 0:
        return (u & v) | (~u & w); // f: choose
    case 2:
        return (u & v) | (u & w) | (v & w); // g: majority
    default:
        return u ^ v ^ w; // h: parity, rounds 1 and 3
    }
}

ChainingState compress(const ChainingState& state, const Block& block) {
    const auto x = expand_schedule(block);
    std::uint32_t a = state.h[0];
    std::uint32_t b = state.h[1];
    std::uint32_t c = state.h[2];
    std::uint32_t d = state.h[3];
    std::uint32_t e = state.h[4];
    for (int j = 0; j < 80; ++j) {
        const int round = j / 20;
        const std::uint32_t t = std::rotl(a, 5) + round_logic(round, b, c, d) +
                                e + x[j] + kRoundConstant[round];
        e = d;
        d = c;
        c = std::rotl(b, 30);
        b = a;
        a = t;
    }
    return {{state.h[0] + a, state.h[1] + b, state.h[2] + c, state.h[3] + d,
             state.h[4] + e}};
}

Digest digest(std::span<const std::uint8_t> message) {
    ChainingState state = initial_state();
    for (const Block& block : pad_message(message))
        state = compress(state, block);
    return {state.h};
}

Digest digest(std::string_view message) {
    return digest(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(message.data()),
        message.size()));
}

std::array<std::uint8_t, 20> Digest::bytes() const {
    std::array<std::uint8_t, 20> out{};
    for (std::size_t i = 0; i < 5; ++i) {
        out[4 * i + 0] = static_cast<std::uint8_t>(words[i] >> 24);
        out[4 * i + 1] = static_cast<std::uint8_t>(words[i] >> 16);
        out[4 * i + 2] = static_cast<std::uint8_t>(words[i] >> 8);
        out[4 * i + 3] = static_cast<std::uint8_t>(words[i]);
    }
    return out;
}

std::string Digest::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(40);
    for (const std::uint8_t b : bytes()) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::string digest_hex(std::span<const std::uint8_t> message) {
    return digest(message).to_hex();
}

std::string digest_hex(std::string_view message) {
    return digest(message).to_hex();
}

} // namespace signet::sha1
