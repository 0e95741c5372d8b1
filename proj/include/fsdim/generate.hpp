#pragma once

// Seeded i.i.d. sampling of measure-distributed sequences. Sampling stands
// in for randomness: the set of sequences that are random with respect to a
// measure has probability 1 under i.i.d. draws from it, so a sampled prefix
// is a faithful surrogate at any fixed seed.
//
// Each symbol consumes exactly one 64-bit splitmix64 draw, mapped through
// exact inverse-CDF thresholds, so output is byte-identical across runs and
// platforms.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fsdim/measure.hpp"
#include "fsdim/prng.hpp"
#include "fsdim/sequence.hpp"

namespace fsdim {

struct GenSpec {
    ProbMeasure measure;
    std::uint64_t length = 0;
    std::uint64_t seed = 0;
};

inline SymbolSeq generate(const GenSpec& spec) {
    if (spec.length == 0) throw std::invalid_argument("generate: length must be >= 1");
    const std::size_t m = spec.measure.size();

    // Thresholds t_i = floor(cum_i * 2^64) for i < m-1; symbol i is drawn when
    // the 64-bit variate falls in [t_{i-1}, t_i). The last symbol absorbs the
    // remainder, so each probability is honored to within 2^-64.
    std::vector<std::uint64_t> thresholds;
    thresholds.reserve(m - 1);
    Rational cum = 0;
    const BigInt two64 = BigInt(1) << 64;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        cum += spec.measure.prob(i);
        const BigInt t = (numerator(cum) * two64) / denominator(cum);
        thresholds.push_back(t.convert_to<std::uint64_t>());
    }

    SplitMix64 rng(spec.seed);
    std::vector<std::uint8_t> data(spec.length);
    for (std::uint64_t i = 0; i < spec.length; ++i) {
        const std::uint64_t u = rng.next();
        std::uint8_t s = static_cast<std::uint8_t>(m - 1);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            if (u < thresholds[j]) {
                s = static_cast<std::uint8_t>(j);
                break;
            }
        }
        data[i] = s;
    }
    return SymbolSeq(spec.measure.alphabet(), std::move(data));
}

}  // namespace fsdim
