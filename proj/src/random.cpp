#include "oplab/random.hpp"

#include <cmath>
#include <numbers>

namespace oplab {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::integer(int lo, int hi)
{
    if (hi < lo) {
        throw Error(ErrorKind::InvalidArgument, "empty integer range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

double Rng::normal()
{
    // Box-Muller; 1 - u keeps the logarithm finite.
    const double u = 1.0 - uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Complex Rng::complex_normal()
{
    const double re = normal();
    const double im = normal();
    return {re, im};
}

Complex Rng::disk(double radius)
{
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

Complex Rng::unimodular()
{
    return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

} // namespace oplab
