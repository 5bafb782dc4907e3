#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signet/errors.hpp"
#include "signet/primality.hpp"
#include "signet/rng.hpp"
#include "signet/rsa.hpp"
#include "signet/sha1.hpp"

namespace {

// 0 = success/accept, 1 = verification reject, 2 = usage or I/O error,
// 3 = malformed key/signature file
enum ExitStatus : int {
    kOk = 0,
    kReject = 1,
    kUsage = 2,
    kBadKeyFile = 3,
};

// "-" selects standard input.
std::vector<std::uint8_t> read_input(const std::string& path) {
    if (path == "-") {
        std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(std::cin),
                                       std::istreambuf_iterator<char>()};
        if (std::cin.bad())
            throw signet::IoError("failed reading standard input");
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw signet::IoError("cannot read " + path);
    std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
    if (in.bad())
        throw signet::IoError("failed reading " + path);
    return data;
}

int run_keygen(std::size_t bits, std::optional<std::uint64_t> seed,
               const std::string& out_prefix, int mr_rounds, bool random_e) {
    if (bits < 192) {
        std::cerr << "error: --bits must be at least 192 (a smaller modulus "
                     "cannot hold a 160-bit digest integer)\n";
        return kUsage;
    }
    signet::Rng rng =
        seed.has_value() ? signet::Rng(*seed) : signet::Rng::from_entropy();
    const signet::KeyPair kp =
        signet::keygen(bits, rng, std::nullopt, mr_rounds, random_e);
    const std::string pub_path = out_prefix + ".pub";
    const std::string key_path = out_prefix + ".key";
    signet::save_public_key(kp.pub, pub_path);
    signet::save_private_key(kp.priv, key_path);
    std::cerr << "wrote " << pub_path << " and " << key_path << "\n";
    return kOk;
}

int run_hash(const std::string& input) {
    const auto data = read_input(input);
    std::cout << signet::sha1::digest_hex(std::span<const std::uint8_t>(data))
              << "\n";
    return kOk;
}

int run_sign(const std::string& key_path, const std::string& input,
             const std::string& sig_out) {
    const signet::PrivateKey key = signet::load_private_key(key_path);
    const auto data = read_input(input);
    const signet::Signature sig =
        signet::sign(key, std::span<const std::uint8_t>(data));
    signet::save_signature(sig, sig_out);
    std::cerr << "wrote " << sig_out << "\n";
    return kOk;
}

int run_verify(const std::string& key_path, const std::string& input,
               const std::string& sig_path) {
    const signet::PublicKey key = signet::load_public_key(key_path);
    const signet::Signature sig = signet::load_signature(sig_path);
    const auto data = read_input(input);
    if (signet::verify(key, std::span<const std::uint8_t>(data), sig)) {
        std::cout << "OK\n";
        return kOk;
    }
    std::cout << "FAIL\n";
    return kReject;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signet: RSA signatures over SHA-1, built from first "
                 "principles (textbook scheme, not for production use)"};
    app.require_subcommand(1);

    // keygen
    auto* keygen = app.add_subcommand("keygen", "generate a keypair");
    std::size_t bits = 0;
    std::optional<std::uint64_t> seed;
    std::string out_prefix;
    int mr_rounds = signet::kDefaultMillerRabinRounds;
    bool random_e = false;
    keygen->add_option("--bits", bits, "modulus size in bits (>= 192)")
        ->required();
    keygen->add_option("--seed", seed,
                       "64-bit RNG seed (default: OS entropy)");
    keygen->add_option("--out", out_prefix,
                       "output prefix; writes <prefix>.pub and <prefix>.key")
        ->required();
    keygen->add_option("--mr-rounds", mr_rounds,
                       "Miller-Rabin rounds per candidate")
        ->check(CLI::PositiveNumber);
    keygen->add_flag("--random-e", random_e,
                     "draw a random odd public exponent instead of 65537");

    // hash
    auto* hash = app.add_subcommand("hash", "print the SHA-1 digest of INPUT");
    std::string hash_input;
    hash->add_option("INPUT", hash_input, "file path, or - for stdin")
        ->required();

    // sign
    auto* sign = app.add_subcommand("sign", "sign INPUT with a private key");
    std::string sign_key, sign_input, sign_out;
    sign->add_option("--key", sign_key, "private key file")->required();
    sign->add_option("INPUT", sign_input, "file path, or - for stdin")
        ->required();
    sign->add_option("--out", sign_out, "signature file to write")->required();

    // verify
    auto* verify = app.add_subcommand("verify",
                                      "verify a signature over INPUT");
    std::string verify_key, verify_input, verify_sig;
    verify->add_option("--key", verify_key, "public key file")->required();
    verify->add_option("INPUT", verify_input, "file path, or - for stdin")
        ->required();
    verify->add_option("--sig", verify_sig, "signature file to check")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage; // keep --help at 0
    }

    try {
        if (app.got_subcommand(keygen))
            return run_keygen(bits, seed, out_prefix, mr_rounds, random_e);
        if (app.got_subcommand(hash))
            return run_hash(hash_input);
        if (app.got_subcommand(sign))
            return run_sign(sign_key, sign_input, sign_out);
        return run_verify(verify_key, verify_input, verify_sig);
    } catch (const signet::KeyFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadKeyFile;
    } catch (const signet::SignatureOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadKeyFile;
    } catch (const signet::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
