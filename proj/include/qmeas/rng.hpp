#pragma once

#include "qmeas/scalar.hpp"

#include <cstdint>
#include <random>

namespace qmeas {

// Denominators used when drawing random rationals.
inline constexpr long kRandomDenominators[] = {1, 2, 3, 4, 5, 6};

/**
 * Deterministic seeded generator. mt19937_64 has a fully specified output
 * stream and the uniform draws below avoid std::uniform_int_distribution
 * (whose mapping is implementation-defined), so identical seeds give
 * identical artifacts on every platform.
 */
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    // Decorrelated per-trial stream: results do not depend on how trials
    // are scheduled across workers.
    static SeededRng for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), by rejection.
    std::uint64_t below(std::uint64_t n);

    long int_in(long lo, long hi);

    bool coin() { return next() & 1u; }

    // Numerator uniform in [-bound, bound], denominator from
    // kRandomDenominators, canonicalized.
    Scalar rational(long bound);

private:
    std::mt19937_64 eng_;
};

} // namespace qmeas
