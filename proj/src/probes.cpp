#include "effalg/probes.hpp"

namespace effalg {

RationalVector ProbeSource::convex_weights(std::size_t k)
{
    std::uniform_int_distribution<int> draw(1, 20);
    RationalVector w(k);
    Rational total = 0;
    for (auto& v : w) {
        v = draw(rng_);
        total += v;
    }
    for (auto& v : w)
        v /= total;
    return w;
}

Rational ProbeSource::unit_rational(int max_denominator)
{
    std::uniform_int_distribution<int> den(1, max_denominator);
    int q = den(rng_);
    std::uniform_int_distribution<int> num(0, q);
    Rational r(num(rng_), q);
    r.canonicalize();
    return r;
}

RationalVector ProbeSource::unit_vector(std::size_t k, int max_denominator)
{
    RationalVector out(k);
    for (auto& v : out)
        v = unit_rational(max_denominator);
    return out;
}

std::size_t ProbeSource::index(std::size_t bound)
{
    std::uniform_int_distribution<std::size_t> draw(0, bound - 1);
    return draw(rng_);
}

} // namespace effalg
