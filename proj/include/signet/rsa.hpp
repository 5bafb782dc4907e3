#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>

#include "signet/natural.hpp"
#include "signet/primality.hpp"
#include "signet/rng.hpp"
#include "signet/sha1.hpp"

namespace signet {

struct PublicKey {
    Natural n; // modulus
    Natural e; // public exponent
};

struct PrivateKey {
    Natural n;
    Natural e;
    Natural d;
    Natural p;
    Natural q;
    Natural phi; // (p-1)(q-1); recomputed from p, q when loading from file
};

struct Signature {
    Natural s; // 0 <= s < n of the signing key
};

struct KeyPair {
    PublicKey pub;
    PrivateKey priv;
};

/// Generate an RSA keypair. p and q are generated at ceil(modulus_bits/2)
/// bits each; q is redrawn on collision with p or when |p - q| is small
/// enough to matter for Fermat factoring. e defaults to 65537 and falls
/// back to random odd candidates when gcd(e, phi) != 1; random_e forces the
/// random choice from the start. A supplied e_choice must be odd, >= 3, and
/// coprime to phi, else std::invalid_argument. Rejects modulus_bits < 192
/// (the floor that keeps every digest integer below n). All private-key
/// invariants are checked before returning.
KeyPair keygen(std::size_t modulus_bits, Rng& rng,
               const std::optional<Natural>& e_choice = std::nullopt,
               int mr_rounds = kDefaultMillerRabinRounds,
               bool random_e = false);

/// Assemble a keypair from fixed primes, bypassing generation. Test hook;
/// performs the same derivation and invariant checks as keygen but no size
/// floor, so toy keys (p=61, q=53) can be built and then rejected by sign().
KeyPair keypair_from_primes(const Natural& p, const Natural& q,
                            const Natural& e);

/// The 20 digest bytes (H1 first) read as one big-endian integer < 2^160.
Natural encode_digest(const sha1::Digest& dg);

/// Hash-then-sign: s = encode(SHA1(message))^d mod n.
/// Throws ModulusTooSmall when n <= 2^160.
Signature sign(const PrivateKey& key, std::span<const std::uint8_t> message);
Signature sign(const PrivateKey& key, std::string_view message);

/// Accept iff s^e mod n equals the recomputed digest integer.
/// Throws SignatureOutOfRange when s >= n.
bool verify(const PublicKey& key, std::span<const std::uint8_t> message,
            const Signature& sig);
bool verify(const PublicKey& key, std::string_view message,
            const Signature& sig);

// Text key/signature files, one lowercase-hex field per line, fixed order.
// Public: "n=", "e=". Private: "n=", "e=", "d=", "p=", "q=". Signature:
// "s=". Unknown, duplicate, or missing lines are rejected (KeyFormatError),
// as are private keys whose fields are arithmetically inconsistent.

void save_public_key(const PublicKey& key, const std::filesystem::path& path);
PublicKey load_public_key(const std::filesystem::path& path);

/// Written with 0600 permissions where the platform supports it.
void save_private_key(const PrivateKey& key, const std::filesystem::path& path);
PrivateKey load_private_key(const std::filesystem::path& path);

void save_signature(const Signature& sig, const std::filesystem::path& path);
Signature load_signature(const std::filesystem::path& path);

} // namespace signet
