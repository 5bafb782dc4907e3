// Compares the parallel kernels against their serial reference
// implementations: OpenMP Miller-Rabin rounds vs the serial loop, and
// Karatsuba multiplication vs schoolbook.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "signet/natural.hpp"
#include "signet/primality.hpp"
#include "signet/rng.hpp"

using namespace signet;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i)
        fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() /
           reps;
}

Natural random_natural(std::size_t bits, Rng& rng) {
    return random_below(rng, Natural(1) << bits) + (Natural(1) << bits);
}

void bench_miller_rabin(std::size_t bits, int rounds, int reps) {
    Rng gen_rng(2024);
    const Natural prime = generate_prime(bits, gen_rng);

    const double serial = time_ms(
        [&] {
            Rng rng(7);
            (void)miller_rabin_serial(prime, rounds, rng);
        },
        reps);
    const double parallel = time_ms(
        [&] {
            Rng rng(7);
            (void)miller_rabin_parallel(prime, rounds, rng);
        },
        reps);
    std::printf("miller_rabin  %4zu bits  %2d rounds   serial %8.2f ms   "
                "parallel %8.2f ms   speedup %.2fx\n",
                bits, rounds, serial, parallel, serial / parallel);
}

void bench_multiplication(std::size_t bits, int reps) {
    Rng rng(99);
    const Natural a = random_natural(bits, rng);
    const Natural b = random_natural(bits, rng);

    const double school = time_ms([&] { (void)mul_schoolbook(a, b); }, reps);
    const double kara = time_ms([&] { (void)(a * b); }, reps);
    std::printf("multiply      %4zu bits   schoolbook %8.3f ms   karatsuba "
                "%8.3f ms   speedup %.2fx\n",
                bits, school, kara, school / kara);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel paths run serially\n\n");
#endif

    bench_miller_rabin(512, 32, 5);
    bench_miller_rabin(1024, 32, 3);
    std::printf("\n");

    bench_multiplication(4096, 20);
    bench_multiplication(8192, 10);
    bench_multiplication(16384, 5);
    bench_multiplication(32768, 3);
    return 0;
}
