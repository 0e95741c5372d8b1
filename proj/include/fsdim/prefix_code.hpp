#pragma once

// Prefix-free code tables over the canonical block enumeration, plus the two
// constructions the block-coder family uses:
//
//  * shannon_code_for: codeword lengths exactly ceil(log2(1/mu(b))), words
//    taken from the binary expansion of the sorted cumulative probabilities.
//  * huffman_code_for: optimal integer lengths for a count table, rebuilt in
//    canonical form with fully deterministic tie-breaking so the emitted
//    codebook is byte-identical across platforms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsdim/alphabet.hpp"
#include "fsdim/bits.hpp"
#include "fsdim/census.hpp"
#include "fsdim/rational.hpp"

namespace fsdim {

struct PrefixCode {
    int block_length = 0;             // symbols per block (0 for the empty tail)
    std::vector<BitString> words;     // canonical block value -> codeword
    std::vector<int> lengths;         // cached codeword lengths

    std::size_t size() const { return words.size(); }

    int max_length() const {
        int m = 0;
        for (int l : lengths) m = std::max(m, l);
        return m;
    }

    // sum_b 2^-len(b) <= 1, checked exactly.
    bool kraft_ok() const {
        const int lmax = max_length();
        BigInt sum = 0;
        for (int l : lengths) sum += BigInt(1) << (lmax - l);
        return sum <= (BigInt(1) << lmax);
    }

    // Expected codeword length under a count table (same indexing).
    double expected_length(const std::vector<std::uint64_t>& counts) const {
        if (counts.size() != lengths.size())
            throw std::invalid_argument("expected_length: count table size mismatch");
        double total = 0, bits = 0;
        for (std::size_t b = 0; b < counts.size(); ++b) {
            total += static_cast<double>(counts[b]);
            bits += static_cast<double>(counts[b]) * lengths[b];
        }
        return total == 0 ? 0.0 : bits / total;
    }

    // One line per block, "<block> <codeword> <length>", canonical order.
    void dump(std::ostream& os, const Alphabet& alphabet) const {
        for (std::size_t b = 0; b < words.size(); ++b)
            os << block_to_string(alphabet, block_length, b) << ' ' << words[b].to_string()
               << ' ' << lengths[b] << '\n';
    }
};

namespace detail {

inline void finalize_lengths(PrefixCode& code) {
    code.lengths.resize(code.words.size());
    for (std::size_t b = 0; b < code.words.size(); ++b)
        code.lengths[b] = static_cast<int>(code.words[b].size());
    if (!code.kraft_ok()) throw std::logic_error("prefix code violates the Kraft inequality");
}

}  // namespace detail

// Fixed-length code: every one of nwords blocks gets its value written in
// ceil(log2 nwords) bits. Used for the tail of a partially filled block.
inline PrefixCode fixed_length_code(std::uint64_t nwords, int block_length) {
    if (nwords == 0) throw std::invalid_argument("fixed_length_code: empty domain");
    int len = 0;
    while ((std::uint64_t(1) << len) < nwords) ++len;
    PrefixCode code;
    code.block_length = block_length;
    code.words.resize(nwords);
    for (std::uint64_t b = 0; b < nwords; ++b)
        for (int i = len - 1; i >= 0; --i) code.words[b].push_back((b >> i) & 1u);
    detail::finalize_lengths(code);
    return code;
}

// Classical Shannon code for a positive block distribution: sort blocks by
// nonincreasing probability, give block b the first ceil(log2(1/mu(b))) bits
// of the binary expansion of the cumulative probability before it.
inline PrefixCode shannon_code_for(const std::vector<Rational>& block_probs, int block_length) {
    if (block_probs.empty()) throw std::invalid_argument("shannon_code_for: empty distribution");
    Rational total = 0;
    for (const Rational& p : block_probs) {
        if (p <= 0) throw std::invalid_argument("shannon_code_for: probabilities must be positive");
        total += p;
    }
    if (total != 1) throw std::invalid_argument("shannon_code_for: probabilities must sum to 1");

    std::vector<std::uint64_t> order(block_probs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        if (block_probs[a] != block_probs[b]) return block_probs[a] > block_probs[b];
        return a < b;
    });

    PrefixCode code;
    code.block_length = block_length;
    code.words.resize(block_probs.size());
    Rational cum = 0;
    for (std::uint64_t b : order) {
        const int len = ceil_log2_inverse(block_probs[b]);
        // Emit len bits of the expansion of cum by exact doubling.
        BigInt rem = numerator(cum);
        const BigInt den = denominator(cum);
        BitString word;
        for (int t = 0; t < len; ++t) {
            rem <<= 1;
            if (rem >= den) {
                word.push_back(true);
                rem -= den;
            } else {
                word.push_back(false);
            }
        }
        code.words[b] = std::move(word);
        cum += block_probs[b];
    }
    detail::finalize_lengths(code);
    return code;
}

// Huffman code for a block count table. Zero counts are smoothed to 1 so the
// code stays total. Merging prefers lower total count, then the subtree
// whose smallest block value is smaller; the codebook is then re-emitted in
// canonical form (sorted by length, then block value).
inline PrefixCode huffman_code_for(const std::vector<BigInt>& counts, int block_length) {
    const std::size_t n = counts.size();
    if (n < 2) throw std::invalid_argument("huffman_code_for: need at least 2 blocks");
    for (const BigInt& c : counts)
        if (c < 0) throw std::invalid_argument("huffman_code_for: negative count");

    struct Node {
        BigInt count;
        std::uint64_t rep;  // smallest block value in the subtree
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * n - 1);
    for (std::size_t b = 0; b < n; ++b)
        nodes.push_back({counts[b] == 0 ? BigInt(1) : counts[b], b, -1, -1});

    const auto heavier = [&nodes](int a, int b) {
        if (nodes[a].count != nodes[b].count) return nodes[a].count > nodes[b].count;
        return nodes[a].rep > nodes[b].rep;
    };
    std::priority_queue<int, std::vector<int>, decltype(heavier)> heap(heavier);
    for (std::size_t i = 0; i < n; ++i) heap.push(static_cast<int>(i));

    while (heap.size() > 1) {
        const int a = heap.top();
        heap.pop();
        const int b = heap.top();
        heap.pop();
        nodes.push_back({nodes[a].count + nodes[b].count, std::min(nodes[a].rep, nodes[b].rep),
                         a, b});
        heap.push(static_cast<int>(nodes.size() - 1));
    }

    std::vector<int> lengths(n, 0);
    std::vector<std::pair<int, int>> stack{{heap.top(), 0}};
    while (!stack.empty()) {
        const auto [id, depth] = stack.back();
        stack.pop_back();
        if (nodes[id].left < 0) {
            lengths[nodes[id].rep] = depth;
        } else {
            stack.emplace_back(nodes[id].left, depth + 1);
            stack.emplace_back(nodes[id].right, depth + 1);
        }
    }

    // Canonical assignment: sort by (length, block value), count upward.
    std::vector<std::uint64_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
        return a < b;
    });

    PrefixCode code;
    code.block_length = block_length;
    code.words.resize(n);
    BigInt next = 0;
    int prev_len = lengths[order[0]];
    for (std::uint64_t b : order) {
        next <<= (lengths[b] - prev_len);
        prev_len = lengths[b];
        BitString word;
        for (int i = lengths[b] - 1; i >= 0; --i)
            word.push_back(boost::multiprecision::bit_test(next, static_cast<unsigned>(i)));
        code.words[b] = std::move(word);
        ++next;
    }
    detail::finalize_lengths(code);
    return code;
}

}  // namespace fsdim
