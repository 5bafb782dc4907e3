#pragma once

#include <cstdint>
#include <optional>

#include "signet/natural.hpp"
#include "signet/rng.hpp"

namespace signet {

/// Outcome of a probabilistic primality test. Composite is definitive and
/// carries the witness base that proved it; ProbablePrime carries the round
/// count, giving an error bound of 4^(-rounds).
struct PrimalityVerdict {
    bool probably_prime = false;
    int rounds = 0;
    Natural witness; // meaningful only when !probably_prime

    static PrimalityVerdict composite(Natural w) {
        return {false, 0, std::move(w)};
    }
    static PrimalityVerdict probable_prime(int r) { return {true, r, {}}; }
};

/// Smallest proper prime factor of n that is <= bound, or nullopt when none
/// exists (in particular for any prime n). A hit is definitive proof of
/// compositeness; nullopt only means no factor was found below the bound.
/// Rejects n < 2.
std::optional<std::uint32_t> trial_division(const Natural& n,
                                            std::uint32_t bound);

/// Miller-Rabin probable-prime test for odd n >= 3 with uniformly random
/// bases in [2, n-2]. Every round owns a child stream derived from rng, so
/// the verdict is deterministic under a fixed seed. Rejects rounds < 1.
///
/// miller_rabin_serial is the reference implementation; miller_rabin_parallel
/// runs the rounds as an OpenMP loop (identical verdicts, witness round may
/// differ); miller_rabin dispatches on operand size.
PrimalityVerdict miller_rabin(const Natural& n, int rounds, Rng& rng);
PrimalityVerdict miller_rabin_serial(const Natural& n, int rounds, Rng& rng);
PrimalityVerdict miller_rabin_parallel(const Natural& n, int rounds, Rng& rng);

/// Full-range convenience wrapper: handles n < 3 and even n, then defers
/// to miller_rabin.
bool is_probable_prime(const Natural& n, int rounds, Rng& rng);

/// Random probable prime with exactly `bits` bits (top bit set) and low bit
/// set. Candidates are drawn fresh on every failure, prefiltered by trial
/// division up to kTrialDivisionBound, then tested with `rounds` rounds of
/// Miller-Rabin. Rejects bits < 16.
Natural generate_prime(std::size_t bits, Rng& rng, int rounds = 25);

inline constexpr std::uint32_t kTrialDivisionBound = 2000;
inline constexpr int kDefaultMillerRabinRounds = 25;

} // namespace signet
