#pragma once

// k-block coders: the concrete information-lossless compressor family. The
// machine buffers up to k symbols (states are exactly the buffer contents,
// words of length < k) and emits one prefix-free codeword per completed
// block. A whole-word compress additionally flushes the pending partial
// block with a fixed-length tail code; the decoder receives the output bits
// together with the final state, which identifies that pending block.
//
// Code tables come in four flavours per (alphabet, k): Shannon or Huffman
// construction over either the beta-product distribution or a smoothed
// empirical block census.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsdim/alphabet.hpp"
#include "fsdim/bits.hpp"
#include "fsdim/census.hpp"
#include "fsdim/fsc.hpp"
#include "fsdim/measure.hpp"
#include "fsdim/prefix_code.hpp"
#include "fsdim/rational.hpp"
#include "fsdim/sequence.hpp"

namespace fsdim {

// Number of buffer states holding fewer than l symbols: (sigma^l - 1)/(sigma - 1).
inline std::uint64_t buffer_state_offset(std::uint64_t sigma, int l) {
    std::uint64_t total = 0, level = 1;
    for (int i = 0; i < l; ++i) {
        total += level;
        level *= sigma;
    }
    return total;
}

// Exact product distribution beta^k over the canonical block enumeration.
inline std::vector<Rational> product_block_probs(const ProbMeasure& beta, int k) {
    const std::uint64_t table = block_table_size(beta.alphabet().size(), k);
    std::vector<Rational> probs{Rational(1)};
    probs.reserve(table);
    for (int i = 0; i < k; ++i) {
        std::vector<Rational> next;
        next.reserve(probs.size() * beta.alphabet().size());
        for (const Rational& p : probs)
            for (std::size_t s = 0; s < beta.alphabet().size(); ++s) next.push_back(p * beta.prob(s));
        probs = std::move(next);
    }
    return probs;
}

// Exact integer weights proportional to beta^k (shared denominator cancelled),
// suitable as a Huffman count table.
inline std::vector<BigInt> product_block_weights(const ProbMeasure& beta, int k) {
    const std::uint64_t table = block_table_size(beta.alphabet().size(), k);
    BigInt common = 1;
    for (std::size_t s = 0; s < beta.alphabet().size(); ++s)
        common = boost::multiprecision::lcm(common, BigInt(denominator(beta.prob(s))));
    std::vector<BigInt> scaled(beta.alphabet().size());
    for (std::size_t s = 0; s < beta.alphabet().size(); ++s)
        scaled[s] = BigInt(numerator(beta.prob(s))) * (common / BigInt(denominator(beta.prob(s))));
    std::vector<BigInt> weights{BigInt(1)};
    weights.reserve(table);
    for (int i = 0; i < k; ++i) {
        std::vector<BigInt> next;
        next.reserve(weights.size() * scaled.size());
        for (const BigInt& w : weights)
            for (const BigInt& c : scaled) next.push_back(w * c);
        weights = std::move(next);
    }
    return weights;
}

// Smoothed empirical block distribution: raw frequencies c_b / W clamped
// below at 1/(2W) and renormalized, i.e. (2c_b, or 1 when c_b = 0) / (2W + z)
// with z the number of unseen blocks. Exact rationals; positive; sums to 1.
inline std::vector<Rational> smoothed_block_probs(const std::vector<std::uint64_t>& counts) {
    if (counts.empty()) throw std::invalid_argument("smoothed_block_probs: empty count table");
    std::uint64_t windows = 0, zeros = 0;
    for (std::uint64_t c : counts) {
        windows += c;
        if (c == 0) ++zeros;
    }
    if (windows == 0) {  // nothing observed: fall back to uniform
        return std::vector<Rational>(counts.size(), Rational(1, counts.size()));
    }
    const BigInt den = BigInt(2) * windows + zeros;
    std::vector<Rational> probs(counts.size());
    for (std::size_t b = 0; b < counts.size(); ++b)
        probs[b] = Rational(counts[b] == 0 ? BigInt(1) : BigInt(2) * counts[b], den);
    return probs;
}

inline std::vector<BigInt> to_bigint_counts(const std::vector<std::uint64_t>& counts) {
    std::vector<BigInt> big(counts.size());
    for (std::size_t b = 0; b < counts.size(); ++b) big[b] = counts[b];
    return big;
}

// The four code constructions used by the estimator family.
inline PrefixCode beta_shannon_code(const ProbMeasure& beta, int k) {
    return shannon_code_for(product_block_probs(beta, k), k);
}
inline PrefixCode beta_huffman_code(const ProbMeasure& beta, int k) {
    return huffman_code_for(product_block_weights(beta, k), k);
}
inline PrefixCode empirical_shannon_code(const std::vector<std::uint64_t>& counts, int k) {
    return shannon_code_for(smoothed_block_probs(counts), k);
}
inline PrefixCode empirical_huffman_code(const std::vector<std::uint64_t>& counts, int k) {
    return huffman_code_for(to_bigint_counts(counts), k);
}

struct BlockCoderSpec {
    Alphabet alphabet;
    PrefixCode code;                    // over Sigma^k, k = code.block_length
    std::vector<PrefixCode> tail_codes; // index j in [1, k): fixed-length code over Sigma^j
    std::string descriptor;             // e.g. "shannon-beta", "huffman-emp"

    int k() const { return code.block_length; }
};

inline BlockCoderSpec make_block_coder_spec(const Alphabet& alphabet, PrefixCode code,
                                            std::string descriptor) {
    const int k = code.block_length;
    if (k < 1) throw std::invalid_argument("block coder: block length must be >= 1");
    if (code.size() != block_table_size(alphabet.size(), k))
        throw std::invalid_argument("block coder: code table does not cover Sigma^k");
    BlockCoderSpec spec{alphabet, std::move(code), {}, std::move(descriptor)};
    spec.tail_codes.resize(k);
    for (int j = 1; j < k; ++j)
        spec.tail_codes[j] = fixed_length_code(block_table_size(alphabet.size(), j), j);
    return spec;
}

// Expand a BlockCoderSpec into the explicit transducer. States are the
// buffer contents, indexed offset(|u|) + value(u); the start state is the
// empty buffer. Completing a block emits its codeword and resets the buffer.
inline FiniteStateCompressor build_block_coder(const BlockCoderSpec& spec) {
    const std::uint64_t sigma = spec.alphabet.size();
    const int k = spec.k();
    block_table_size(sigma, k);  // re-assert the table guard
    const std::uint64_t nstates = buffer_state_offset(sigma, k);
    if (nstates > (std::uint64_t(1) << 24))
        throw std::invalid_argument("block coder: state count exceeds 2^24");

    FiniteStateCompressor machine(static_cast<int>(nstates), static_cast<int>(sigma), 0);
    for (int l = 0; l < k; ++l) {
        const std::uint64_t off = buffer_state_offset(sigma, l);
        const std::uint64_t level = block_table_size(sigma, l);
        for (std::uint64_t v = 0; v < level; ++v) {
            const int q = static_cast<int>(off + v);
            for (std::uint64_t s = 0; s < sigma; ++s) {
                const std::uint64_t ext = v * sigma + s;
                if (l + 1 < k) {
                    const int to = static_cast<int>(buffer_state_offset(sigma, l + 1) + ext);
                    machine.set_transition(q, static_cast<int>(s), to, BitString{});
                } else {
                    machine.set_transition(q, static_cast<int>(s), 0, spec.code.words[ext]);
                }
            }
        }
    }
    return machine;
}

class BlockCoder {
  public:
    BlockCoder(const Alphabet& alphabet, PrefixCode code, std::string descriptor)
        : spec_(make_block_coder_spec(alphabet, std::move(code), std::move(descriptor))),
          machine_(build_block_coder(spec_)) {
        build_trie();
    }

    const BlockCoderSpec& spec() const { return spec_; }
    const FiniteStateCompressor& machine() const { return machine_; }
    int k() const { return spec_.k(); }
    const std::string& descriptor() const { return spec_.descriptor; }

    // Buffer contents encoded by a state id: (length, canonical value).
    std::pair<int, std::uint64_t> pending_of_state(int state) const {
        const std::uint64_t sigma = spec_.alphabet.size();
        for (int l = 0; l < k(); ++l) {
            const std::uint64_t off = buffer_state_offset(sigma, l);
            const std::uint64_t level = block_table_size(sigma, l);
            if (static_cast<std::uint64_t>(state) < off + level)
                return {l, static_cast<std::uint64_t>(state) - off};
        }
        throw std::out_of_range("block coder: state id out of range");
    }

    // Whole-word compression: machine run plus the fixed-length flush of the
    // pending partial block. The reported final state is the machine's.
    FscOutput compress(const SymbolSeq& w) const {
        FscOutput out = machine_.process(w);
        const auto [j, value] = pending_of_state(out.final_state);
        if (j > 0) out.bits.append(spec_.tail_codes[j].words[value]);
        return out;
    }

    // Exact inverse of compress given (bits, final state). Throws
    // std::invalid_argument on any bit string compress cannot have produced.
    SymbolSeq decode(const BitString& bits, int final_state) const {
        const auto [j, value] = pending_of_state(final_state);
        const std::size_t tail_len = j > 0 ? spec_.tail_codes[j].words[value].size() : 0;
        if (bits.size() < tail_len)
            throw std::invalid_argument("decode: bit string shorter than its tail flush");
        const std::size_t main_len = bits.size() - tail_len;

        std::vector<std::uint8_t> syms;
        std::size_t node = 0, i = 0;
        while (i < main_len) {
            node = trie_[2 * node + (bits[i] ? 1 : 0)];
            if (node == kNoEdge) throw std::invalid_argument("decode: bits match no codeword");
            ++i;
            const std::int64_t block = trie_block_[node];
            if (block >= 0) {
                append_block(syms, static_cast<std::uint64_t>(block), k());
                node = 0;
            }
        }
        if (node != 0)
            throw std::invalid_argument("decode: bit string ends inside a codeword");
        if (tail_len > 0) {
            const BitString& expected = spec_.tail_codes[j].words[value];
            for (std::size_t t = 0; t < tail_len; ++t)
                if (bits[main_len + t] != expected[t])
                    throw std::invalid_argument("decode: tail flush does not match final state");
            append_block(syms, value, j);
        }
        return SymbolSeq(spec_.alphabet, std::move(syms));
    }

  private:
    static constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

    void append_block(std::vector<std::uint8_t>& syms, std::uint64_t value, int len) const {
        const std::uint64_t sigma = spec_.alphabet.size();
        const std::size_t base = syms.size();
        syms.resize(base + len);
        for (int i = len - 1; i >= 0; --i) {
            syms[base + i] = static_cast<std::uint8_t>(value % sigma);
            value /= sigma;
        }
    }

    void build_trie() {
        trie_.assign(2, kNoEdge);
        trie_block_.assign(1, -1);
        for (std::uint64_t b = 0; b < spec_.code.size(); ++b) {
            const BitString& word = spec_.code.words[b];
            std::size_t node = 0;
            for (std::size_t i = 0; i < word.size(); ++i) {
                const std::size_t e = 2 * node + (word[i] ? 1 : 0);
                if (trie_[e] == kNoEdge) {
                    trie_[e] = trie_block_.size();
                    trie_.resize(trie_.size() + 2, kNoEdge);
                    trie_block_.push_back(-1);
                }
                node = trie_[e];
                if (trie_block_[node] >= 0 && i + 1 < word.size())
                    throw std::logic_error("block coder: code table is not prefix-free");
            }
            if (trie_block_[node] >= 0)
                throw std::logic_error("block coder: duplicate codeword");
            if (trie_[2 * node] != kNoEdge || trie_[2 * node + 1] != kNoEdge)
                throw std::logic_error("block coder: code table is not prefix-free");
            trie_block_[node] = static_cast<std::int64_t>(b);
        }
    }

    BlockCoderSpec spec_;
    FiniteStateCompressor machine_;
    std::vector<std::size_t> trie_;        // node -> [child0, child1]
    std::vector<std::int64_t> trie_block_; // node -> block value or -1
};

// Convenience constructors for the estimator family.
inline BlockCoder make_beta_shannon_coder(const ProbMeasure& beta, int k) {
    return BlockCoder(beta.alphabet(), beta_shannon_code(beta, k), "shannon-beta");
}
inline BlockCoder make_beta_huffman_coder(const ProbMeasure& beta, int k) {
    return BlockCoder(beta.alphabet(), beta_huffman_code(beta, k), "huffman-beta");
}
inline BlockCoder make_empirical_shannon_coder(const Alphabet& alphabet,
                                               const std::vector<std::uint64_t>& counts, int k) {
    return BlockCoder(alphabet, empirical_shannon_code(counts, k), "shannon-emp");
}
inline BlockCoder make_empirical_huffman_coder(const Alphabet& alphabet,
                                               const std::vector<std::uint64_t>& counts, int k) {
    return BlockCoder(alphabet, empirical_huffman_code(counts, k), "huffman-emp");
}

}  // namespace fsdim
