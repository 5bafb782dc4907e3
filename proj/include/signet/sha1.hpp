#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signet::sha1 {

/// One 512-bit message block as sixteen big-endian-packed 32-bit words.
using Block = std::array<std::uint32_t, 16>;

/// The five chaining variables H1..H5.
struct ChainingState {
    std::array<std::uint32_t, 5> h;

    friend bool operator==(const ChainingState&, const ChainingState&) = default;
};

/// 160-bit digest, H1 first.
struct Digest {
    std::array<std::uint32_t, 5> words;

    /// The 20 digest bytes, big-endian within each word, H1 first.
    std::array<std::uint8_t, 20> bytes() const;
    /// Exactly 40 lowercase hex characters.
    std::string to_hex() const;

    friend bool operator==(const Digest&, const Digest&) = default;
};

/// Standard initial chaining values.
ChainingState initial_state();

/// Append the 0x80 marker byte, the minimal zero padding, and the 64-bit
/// big-endian bit length, then split into blocks. Output length is always
/// a multiple of 512 bits.
std::vector<Block> pad_message(std::span<const std::uint8_t> message);

/// Expand a 16-word block into the 80-word schedule:
/// words 16..79 are rotl1 of the XOR of words j-3, j-8, j-14, j-16.
std::array<std::uint32_t, 80> expand_schedule(const Block& block);

/// Round functions applied bitwise: round 0 chooses (f), rounds 1 and 3
/// take parity (h), round 2 takes majority (g).
std::uint32_t round_logic(int round, std::uint32_t u, std::uint32_t v,
                          std::uint32_t w);

/// One 80-step compression of a block into the chaining state.
ChainingState compress(const ChainingState& state, const Block& block);

/// Hash a byte sequence.
Digest digest(std::span<const std::uint8_t> message);
Digest digest(std::string_view message);

/// Convenience: digest(message).to_hex().
std::string digest_hex(std::span<const std::uint8_t> message);
std::string digest_hex(std::string_view message);

} // namespace signet::sha1
