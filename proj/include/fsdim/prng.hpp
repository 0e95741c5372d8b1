#pragma once

// splitmix64: the fixed pseudorandom generator behind all sequence sampling.
// Chosen because its update equations are three lines of 64-bit arithmetic,
// so any implementation on any platform reproduces the same stream:
//
//   state   <- state + 0x9E3779B97F4A7C15          (mod 2^64)
//   z       <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
//   z       <- (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output  <- z ^ (z >> 31)

#include <cstdint>

namespace fsdim {

inline constexpr const char* kPrngId = "splitmix64";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace fsdim
