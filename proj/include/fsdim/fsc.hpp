#pragma once

// Finite-state compressors: a finite set of states, a transition function
// delta(q, s) and a binary output function nu(q, s). Compression of a word is
// the concatenation of the outputs along its run from the start state.
//
// A compressor is information-lossless when w -> (output(w), final state) is
// injective on all finite words; is_lossless_bruteforce checks this on every
// word up to an enumeration budget and reports a colliding pair if one exists.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsdim/alphabet.hpp"
#include "fsdim/bits.hpp"
#include "fsdim/census.hpp"
#include "fsdim/sequence.hpp"

namespace fsdim {

struct RunState {
    int state = 0;
    std::uint64_t bits_emitted = 0;
};

struct FscOutput {
    BitString bits;
    int final_state = 0;
};

class FiniteStateCompressor {
  public:
    FiniteStateCompressor(int nstates, int sigma, int start)
        : nstates_(nstates), sigma_(sigma), start_(start) {
        if (nstates <= 0 || sigma < 2) throw std::invalid_argument("compressor shape invalid");
        if (start < 0 || start >= nstates) throw std::invalid_argument("start state out of range");
        next_.assign(static_cast<std::size_t>(nstates) * sigma, 0);
        out_.assign(static_cast<std::size_t>(nstates) * sigma, BitString{});
    }

    int state_count() const { return nstates_; }
    int alphabet_size() const { return sigma_; }
    int start_state() const { return start_; }

    void set_transition(int q, int s, int to, BitString output) {
        if (to < 0 || to >= nstates_) throw std::invalid_argument("transition target out of range");
        next_[edge(q, s)] = to;
        out_[edge(q, s)] = std::move(output);
    }

    int next_state(int q, int s) const { return next_[edge(q, s)]; }
    const BitString& output(int q, int s) const { return out_[edge(q, s)]; }

    RunState begin_run() const { return RunState{start_, 0}; }

    // Advance one symbol, counting output bits without storing them.
    void step(RunState& run, std::uint8_t s) const {
        const std::size_t e = edge(run.state, s);
        run.bits_emitted += out_[e].size();
        run.state = next_[e];
    }

    FscOutput process(const std::vector<std::uint8_t>& syms) const {
        FscOutput result;
        result.final_state = start_;
        for (std::uint8_t s : syms) {
            const std::size_t e = edge(result.final_state, s);
            result.bits.append(out_[e]);
            result.final_state = next_[e];
        }
        return result;
    }

    FscOutput process(const SymbolSeq& w) const {
        if (w.alphabet().size() != static_cast<std::size_t>(sigma_))
            throw std::invalid_argument("sequence alphabet does not match compressor");
        return process(w.indices());
    }

  private:
    std::size_t edge(int q, int s) const {
        if (q < 0 || q >= nstates_) throw std::out_of_range("state out of range");
        if (s < 0 || s >= sigma_) throw std::out_of_range("symbol out of range");
        return static_cast<std::size_t>(q) * sigma_ + s;
    }

    int nstates_;
    int sigma_;
    int start_;
    std::vector<int> next_;
    std::vector<BitString> out_;
};

struct LosslessCheck {
    bool lossless = true;
    std::uint64_t words_checked = 0;
    std::string witness_a;  // populated with a colliding pair when !lossless
    std::string witness_b;
};

// Enumerate every word of length 0, 1, 2, ... (stopping before the level that
// would exceed `budget` words) and verify that no two share both output bits
// and final state.
inline LosslessCheck is_lossless_bruteforce(const FiniteStateCompressor& fsc,
                                            const Alphabet& alphabet,
                                            std::uint64_t budget = std::uint64_t(1) << 20) {
    if (alphabet.size() != static_cast<std::size_t>(fsc.alphabet_size()))
        throw std::invalid_argument("alphabet does not match compressor");
    const std::uint64_t sigma = alphabet.size();

    LosslessCheck report;
    std::unordered_map<std::string, std::string> seen;  // "<state>|<bits>" -> word
    seen.reserve(budget);

    std::vector<std::uint8_t> word;
    std::uint64_t level_size = 1;  // sigma^L
    for (int length = 0;; ++length, level_size *= sigma) {
        if (report.words_checked + level_size > budget && length > 0) break;
        for (std::uint64_t value = 0; value < level_size; ++value) {
            word.resize(length);
            std::uint64_t v = value;
            for (int i = length - 1; i >= 0; --i) {
                word[i] = static_cast<std::uint8_t>(v % sigma);
                v /= sigma;
            }
            const FscOutput out = fsc.process(word);
            std::string key = std::to_string(out.final_state);
            key += '|';
            key += out.bits.to_string();
            std::string rendered = length == 0 ? std::string() : block_to_string(alphabet, length, value);
            auto [it, inserted] = seen.emplace(std::move(key), rendered);
            ++report.words_checked;
            if (!inserted) {
                report.lossless = false;
                report.witness_a = it->second;
                report.witness_b = rendered;
                return report;
            }
        }
        if (level_size > budget / sigma) break;  // next level would overflow/exceed
    }
    return report;
}

}  // namespace fsdim
