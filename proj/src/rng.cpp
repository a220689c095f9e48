#include "qmeas/rng.hpp"

#include "qmeas/error.hpp"

namespace qmeas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

SeededRng SeededRng::for_trial(std::uint64_t seed, std::uint64_t trial) {
    return SeededRng(splitmix64(seed ^ splitmix64(trial)));
}

std::uint64_t SeededRng::below(std::uint64_t n) {
    if (n == 0) throw Error("empty draw range");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

long SeededRng::int_in(long lo, long hi) {
    if (lo > hi) throw Error("empty draw range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar SeededRng::rational(long bound) {
    long num = int_in(-bound, bound);
    constexpr std::size_t n_dens = sizeof(kRandomDenominators) / sizeof(kRandomDenominators[0]);
    long den = kRandomDenominators[below(n_dens)];
    return Scalar(num, den);
}

} // namespace qmeas
