#pragma once

#include "effalg/rational.hpp"

#include <random>

namespace effalg {

/// Seeded source of exact rational probe points.
class ProbeSource {
public:
    explicit ProbeSource(std::uint64_t seed)
        : rng_(seed)
    {
    }

    /// Strictly positive convex weights over k points, denominators <= 20k.
    RationalVector convex_weights(std::size_t k);

    /// Rational in [0,1] with denominator at most max_denominator.
    Rational unit_rational(int max_denominator = 12);

    RationalVector unit_vector(std::size_t k, int max_denominator = 12);

    std::size_t index(std::size_t bound);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace effalg
