#include "signet/primality.hpp"

#include <atomic>
#include <stdexcept>
#include <utility>
#include <vector>

namespace signet {

namespace {

// Remainder of n by a single small divisor, one pass over the limbs.
std::uint32_t rem_u32(const Natural& n, std::uint32_t d) {
    std::uint64_t rem = 0;
    const auto& limbs = n.limbs();
    for (std::size_t i = limbs.size(); i-- > 0;)
        rem = ((rem << 32) | limbs[i]) % d;
    return static_cast<std::uint32_t>(rem);
}

struct Decomposition {
    Natural t;     // odd part of n - 1
    std::size_t s; // n - 1 == 2^s * t
};

Decomposition decompose(const Natural& n) {
    Natural t = n - Natural(1);
    std::size_t s = 0;
    while (!t.is_odd()) {
        t = t >> 1;
        ++s;
    }
    return {std::move(t), s};
}

// One Miller-Rabin round: returns the base when it witnesses compositeness.
// The sequence a^t, a^(2t), ..., a^(2^(s-1) t) must hit 1 at the start or
// n-1 somewhere, else n is composite.
std::optional<Natural> find_witness(const Natural& n, const Natural& n_minus_1,
                                    const Decomposition& dec, Rng& rng) {
    const Natural a = random_below(rng, n - Natural(3)) + Natural(2);
    Natural x = mod_exp(a, dec.t, n);
    if (x.is_one() || x == n_minus_1)
        return std::nullopt;
    for (std::size_t i = 1; i < dec.s; ++i) {
        x = x * x % n;
        if (x == n_minus_1)
            return std::nullopt;
    }
    return a;
}

void check_miller_rabin_args(const Natural& n, int rounds) {
    if (rounds < 1)
        throw std::invalid_argument("miller_rabin requires rounds >= 1");
    if (n < Natural(3) || !n.is_odd())
        throw std::invalid_argument("miller_rabin requires odd n >= 3");
}

// Each round owns a derived stream; deriving all of them up front keeps the
// parent stream position identical across the serial and parallel paths.
std::vector<Rng> derive_round_streams(Rng& rng, int rounds) {
    std::vector<Rng> streams;
    streams.reserve(static_cast<std::size_t>(rounds));
    for (int i = 0; i < rounds; ++i)
        streams.push_back(rng.split());
    return streams;
}

} // namespace

std::optional<std::uint32_t> trial_division(const Natural& n,
                                            std::uint32_t bound) {
    if (n < Natural(2))
        throw std::invalid_argument("trial_division requires n >= 2");
    // A composite's smallest prime factor is <= sqrt(n), so the scan may
    // stop there; divisors come in increasing order, so the first hit is
    // necessarily prime.
    std::uint64_t d = 2;
    std::uint64_t step = 1; // 2, 3, then the 6k+-1 wheel: 5, 7, 11, 13, ...
    while (d <= bound && !(Natural(d) * Natural(d) > n)) {
        if (rem_u32(n, static_cast<std::uint32_t>(d)) == 0)
            return static_cast<std::uint32_t>(d);
        if (d == 2) {
            d = 3;
        } else if (d == 3) {
            d = 5;
            step = 2;
        } else {
            d += step;
            step = 6 - step;
        }
    }
    return std::nullopt;
}

PrimalityVerdict miller_rabin_serial(const Natural& n, int rounds, Rng& rng) {
    check_miller_rabin_args(n, rounds);
    if (n == Natural(3))
        return PrimalityVerdict::probable_prime(rounds);

    const Natural n_minus_1 = n - Natural(1);
    const Decomposition dec = decompose(n);
    std::vector<Rng> streams = derive_round_streams(rng, rounds);

    for (int i = 0; i < rounds; ++i) {
        if (auto w = find_witness(n, n_minus_1, dec, streams[i]))
            return PrimalityVerdict::composite(std::move(*w));
    }
    return PrimalityVerdict::probable_prime(rounds);
}

PrimalityVerdict miller_rabin_parallel(const Natural& n, int rounds, Rng& rng) {
    check_miller_rabin_args(n, rounds);
    if (n == Natural(3))
        return PrimalityVerdict::probable_prime(rounds);

    const Natural n_minus_1 = n - Natural(1);
    const Decomposition dec = decompose(n);
    std::vector<Rng> streams = derive_round_streams(rng, rounds);

    std::atomic<bool> composite{false};
    std::vector<std::optional<Natural>> witnesses(
        static_cast<std::size_t>(rounds));

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < rounds; ++i) {
        if (composite.load(std::memory_order_relaxed))
            continue; // another round already settled it
        auto w = find_witness(n, n_minus_1, dec, streams[static_cast<std::size_t>(i)]);
        if (w.has_value()) {
            witnesses[static_cast<std::size_t>(i)] = std::move(w);
            composite.store(true, std::memory_order_relaxed);
        }
    }

    if (composite.load()) {
        for (auto& w : witnesses) {
            if (w.has_value())
                return PrimalityVerdict::composite(std::move(*w));
        }
    }
    return PrimalityVerdict::probable_prime(rounds);
}

PrimalityVerdict miller_rabin(const Natural& n, int rounds, Rng& rng) {
    // thread startup dwarfs the arithmetic on small operands
    constexpr std::size_t kParallelBitFloor = 256;
    if (rounds > 1 && n.bit_length() >= kParallelBitFloor)
        return miller_rabin_parallel(n, rounds, rng);
    return miller_rabin_serial(n, rounds, rng);
}

bool is_probable_prime(const Natural& n, int rounds, Rng& rng) {
    if (n < Natural(2))
        return false;
    if (n == Natural(2))
        return true;
    if (!n.is_odd())
        return false;
    return miller_rabin(n, rounds, rng).probably_prime;
}

Natural generate_prime(std::size_t bits, Rng& rng, int rounds) {
    if (bits < 16)
        throw std::invalid_argument("generate_prime requires bits >= 16");
    if (rounds < 1)
        throw std::invalid_argument("generate_prime requires rounds >= 1");

    const Natural one(1);
    const Natural top_bit = one << (bits - 1);
    for (;;) {
        // draw `bits` random bits, force the top and low bits to 1
        Natural candidate =
            random_below(rng, top_bit) + top_bit; // exactly `bits` bits
        if (!candidate.is_odd())
            candidate = candidate + one;
        if (trial_division(candidate, kTrialDivisionBound).has_value())
            continue;
        if (miller_rabin(candidate, rounds, rng).probably_prime)
            return candidate;
    }
}

} // namespace signet
