#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace besforge {

/// Seeded generator with portable bounded draws.
///
/// std::uniform_int_distribution is implementation defined, so draws are done
/// by rejection on the raw 64-bit stream to keep outputs identical across
/// standard libraries.
class Rng
{
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix(seed) ^ mix(stream + 0x9e3779b97f4a7c15ULL))
    {
    }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

    std::uint64_t next() { return engine_(); }

private:
    static std::uint64_t mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace besforge
