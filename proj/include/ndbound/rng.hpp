#pragma once

#include <cstdint>
#include <limits>

namespace ndbound {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based random stream: the stream for (seed, index) is fully
// determined by the pair, so replication r draws the same numbers no matter
// which thread runs it or in which order. Satisfies UniformRandomBitGenerator.
class CounterStream {
public:
    using result_type = std::uint64_t;
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    constexpr CounterStream(std::uint64_t seed, std::uint64_t index) noexcept
        : state_(mix64(mix64(seed + kGamma) ^ mix64(index * kGamma + 0x632be59bd9b4e019ULL))) {}

    constexpr result_type operator()() noexcept {
        state_ += kGamma;
        return mix64(state_);
    }

    // Uniform on (0, 1] with 53 random bits.
    double uniform_positive() noexcept {
        return static_cast<double>((operator()() >> 11) + 1) * 0x1.0p-53;
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

private:
    std::uint64_t state_;
};

}  // namespace ndbound
