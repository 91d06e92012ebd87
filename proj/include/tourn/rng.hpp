#pragma once

#include <cstdint>

namespace tourn {

__extension__ typedef unsigned __int128 uint128;

// Counter-based generator: the i-th output is a pure function of
// (seed, stream, i), using the SplitMix64 finalizer as the mixing function.
// Outputs are identical on every platform, unlike std:: distributions.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL)))
    {
    }

    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const { return mix(key_ + counter * 0x9e3779b97f4a7c15ULL); }

    std::uint64_t next() { return at(counter_++); }

    bool coin() { return (next() >> 63) != 0; }

    // Uniform in [0, bound) by Lemire's multiply-and-reject; bound > 0.
    std::uint64_t uniform(std::uint64_t bound)
    {
        std::uint64_t x = next();
        uint128 m = static_cast<uint128>(x) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = next();
                m = static_cast<uint128>(x) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace tourn
