#include "signet/rsa.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "signet/errors.hpp"

namespace signet {

namespace {

const Natural kDigestCeiling = Natural(1) << 160;

Natural default_public_exponent() {
    return Natural(65537);
}

// Fermat-factoring hygiene: redraw q when p and q share too long a prefix.
bool primes_too_close(const Natural& p, const Natural& q,
                      std::size_t modulus_bits, std::size_t half_bits) {
    const Natural diff = p > q ? p - q : q - p;
    const std::size_t quarter = modulus_bits / 4;
    if (half_bits <= quarter)
        return diff.is_zero();
    return diff.bit_length() <= half_bits - quarter;
}

Natural pick_random_e(const Natural& phi, Rng& rng) {
    for (;;) {
        Natural e = random_below(rng, phi);
        if (!e.is_odd())
            e = e + Natural(1);
        if (e < Natural(3) || e >= phi)
            continue;
        if (gcd(e, phi).is_one())
            return e;
    }
}

void check_keypair_invariants(const KeyPair& kp) {
    const PrivateKey& k = kp.priv;
    if (k.p == k.q)
        throw std::logic_error("keygen produced p == q");
    if (k.p * k.q != k.n)
        throw std::logic_error("keygen modulus mismatch");
    if ((k.p - Natural(1)) * (k.q - Natural(1)) != k.phi)
        throw std::logic_error("keygen totient mismatch");
    if (!k.e.is_odd() || k.e < Natural(3))
        throw std::logic_error("keygen public exponent invalid");
    if (!(k.e * k.d % k.phi).is_one())
        throw std::logic_error("keygen exponent pair invalid");
    if (!(Natural(1) < k.d && k.d < k.phi))
        throw std::logic_error("keygen private exponent out of range");
    if (kp.pub.n != k.n || kp.pub.e != k.e)
        throw std::logic_error("keygen public half mismatch");
}

} // namespace

KeyPair keypair_from_primes(const Natural& p, const Natural& q,
                            const Natural& e) {
    if (p < Natural(2) || q < Natural(2))
        throw std::invalid_argument("primes must be >= 2");
    if (p == q)
        throw std::invalid_argument("p and q must be distinct");
    if (!e.is_odd() || e < Natural(3))
        throw std::invalid_argument("public exponent must be odd and >= 3");

    const Natural n = p * q;
    const Natural phi = (p - Natural(1)) * (q - Natural(1));
    if (e >= phi)
        throw std::invalid_argument("public exponent must be < phi");
    Natural d;
    try {
        d = mod_inverse(e, phi);
    } catch (const NotInvertible&) {
        throw std::invalid_argument("public exponent not coprime to phi");
    }

    KeyPair kp{{n, e}, {n, e, std::move(d), p, q, phi}};
    check_keypair_invariants(kp);
    return kp;
}

KeyPair keygen(std::size_t modulus_bits, Rng& rng,
               const std::optional<Natural>& e_choice, int mr_rounds,
               bool random_e) {
    if (modulus_bits < 192)
        throw std::invalid_argument(
            "modulus_bits must be >= 192 so digests embed into [0, n-1]");

    const std::size_t half_bits = (modulus_bits + 1) / 2;
    const Natural p = generate_prime(half_bits, rng, mr_rounds);
    Natural q = generate_prime(half_bits, rng, mr_rounds);
    while (q == p || primes_too_close(p, q, modulus_bits, half_bits))
        q = generate_prime(half_bits, rng, mr_rounds);

    const Natural phi = (p - Natural(1)) * (q - Natural(1));

    Natural e;
    if (e_choice.has_value()) {
        e = *e_choice;
        if (!e.is_odd() || e < Natural(3) || e >= phi)
            throw std::invalid_argument(
                "supplied public exponent must be odd and in [3, phi)");
        if (!gcd(e, phi).is_one())
            throw std::invalid_argument(
                "supplied public exponent " + e.to_decimal() +
                " is not coprime to phi");
    } else if (random_e) {
        e = pick_random_e(phi, rng);
    } else {
        e = default_public_exponent();
        if (!gcd(e, phi).is_one())
            e = pick_random_e(phi, rng);
    }

    const Natural n = p * q;
    Natural d = mod_inverse(e, phi);

    KeyPair kp{{n, e}, {n, e, std::move(d), p, q, phi}};
    check_keypair_invariants(kp);
    return kp;
}

Natural encode_digest(const sha1::Digest& dg) {
    Natural acc;
    for (const std::uint32_t word : dg.words)
        acc = (acc << 32) + Natural(word);
    return acc;
}

Signature sign(const PrivateKey& key, std::span<const std::uint8_t> message) {
    if (!(key.n > kDigestCeiling))
        throw ModulusTooSmall(
            "modulus must exceed 2^160 to embed a SHA-1 digest");
    const Natural m = encode_digest(sha1::digest(message));
    return {mod_exp(m, key.d, key.n)};
}

Signature sign(const PrivateKey& key, std::string_view message) {
    return sign(key, std::span<const std::uint8_t>(
                         reinterpret_cast<const std::uint8_t*>(message.data()),
                         message.size()));
}

bool verify(const PublicKey& key, std::span<const std::uint8_t> message,
            const Signature& sig) {
    if (sig.s >= key.n)
        throw SignatureOutOfRange("signature value must satisfy s < n");
    const Natural recovered = mod_exp(sig.s, key.e, key.n);
    return recovered == encode_digest(sha1::digest(message));
}

bool verify(const PublicKey& key, std::string_view message,
            const Signature& sig) {
    return verify(key,
                  std::span<const std::uint8_t>(
                      reinterpret_cast<const std::uint8_t*>(message.data()),
                      message.size()),
                  sig);
}

namespace {

std::string render_fields(
    const std::vector<std::pair<std::string, const Natural*>>& fields) {
    std::string out;
    for (const auto& [name, value] : fields) {
        out += name;
        out += '=';
        out += value->to_hex();
        out += '\n';
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& data,
                bool restrict_permissions) {
    const int flags = O_WRONLY | O_CREAT | O_TRUNC;
    const mode_t mode = restrict_permissions ? 0600 : 0644;
    const int fd = ::open(path.c_str(), flags, mode);
    if (fd < 0)
        throw IoError("cannot open " + path.string() + " for writing");
    std::size_t written = 0;
    while (written < data.size()) {
        const ssize_t rc =
            ::write(fd, data.data() + written, data.size() - written);
        if (rc < 0) {
            ::close(fd);
            throw IoError("write failed for " + path.string());
        }
        written += static_cast<std::size_t>(rc);
    }
    if (::close(fd) != 0)
        throw IoError("close failed for " + path.string());
}

// Parse a fixed sequence of "name=<hex>" lines; anything else is rejected.
std::vector<Natural> parse_fields(const std::filesystem::path& path,
                                  const std::vector<std::string>& names) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("read failed for " + path.string());

    std::vector<std::string> lines;
    std::string line;
    std::istringstream stream(buffer.str());
    while (std::getline(stream, line))
        lines.push_back(line);

    if (lines.size() != names.size())
        throw KeyFormatError(path.string() + ": expected " +
                             std::to_string(names.size()) + " lines, found " +
                             std::to_string(lines.size()));
    std::vector<Natural> values;
    values.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string prefix = names[i] + "=";
        if (lines[i].rfind(prefix, 0) != 0)
            throw KeyFormatError(path.string() + ": line " +
                                 std::to_string(i + 1) + " must start with '" +
                                 prefix + "'");
        try {
            values.push_back(Natural::from_hex(lines[i].substr(prefix.size())));
        } catch (const ParseError&) {
            throw KeyFormatError(path.string() + ": invalid hex in '" +
                                 names[i] + "' field");
        }
    }
    return values;
}

} // namespace

void save_public_key(const PublicKey& key, const std::filesystem::path& path) {
    write_file(path, render_fields({{"n", &key.n}, {"e", &key.e}}), false);
}

PublicKey load_public_key(const std::filesystem::path& path) {
    auto fields = parse_fields(path, {"n", "e"});
    PublicKey key{std::move(fields[0]), std::move(fields[1])};
    if (!key.e.is_odd() || key.e < Natural(3) || key.e >= key.n)
        throw KeyFormatError(path.string() + ": invalid public exponent");
    return key;
}

void save_private_key(const PrivateKey& key,
                      const std::filesystem::path& path) {
    write_file(path,
               render_fields({{"n", &key.n},
                              {"e", &key.e},
                              {"d", &key.d},
                              {"p", &key.p},
                              {"q", &key.q}}),
               true);
}

PrivateKey load_private_key(const std::filesystem::path& path) {
    auto fields = parse_fields(path, {"n", "e", "d", "p", "q"});
    PrivateKey key{std::move(fields[0]), std::move(fields[1]),
                   std::move(fields[2]), std::move(fields[3]),
                   std::move(fields[4]), Natural()};
    if (key.p < Natural(2) || key.q < Natural(2) || key.p * key.q != key.n)
        throw KeyFormatError(path.string() + ": p*q does not match n");
    key.phi = (key.p - Natural(1)) * (key.q - Natural(1));
    if (!key.e.is_odd() || key.e < Natural(3) || key.e >= key.phi ||
        !(key.e * key.d % key.phi).is_one() ||
        !(Natural(1) < key.d && key.d < key.phi))
        throw KeyFormatError(path.string() + ": exponents are inconsistent");
    return key;
}

void save_signature(const Signature& sig, const std::filesystem::path& path) {
    write_file(path, render_fields({{"s", &sig.s}}), false);
}

Signature load_signature(const std::filesystem::path& path) {
    auto fields = parse_fields(path, {"s"});
    return {std::move(fields[0])};
}

} // namespace signet
