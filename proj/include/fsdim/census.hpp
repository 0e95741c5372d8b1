#pragma once

// Block frequency analysis. census() counts every length-k window of a
// sequence in one pass with rolling index arithmetic; block_census() counts
// the disjoint k-blocks used to train block coders. normality_report()
// compares window frequencies of every block against their product
// probabilities, which is Borel's normality criterion restricted to a
// finite prefix and a finite block-length budget.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsdim/measure.hpp"
#include "fsdim/sequence.hpp"

namespace fsdim {

// Largest table any block-indexed operation is allowed to allocate.
inline constexpr std::uint64_t kBlockTableLimit = std::uint64_t(1) << 24;

// |Sigma|^k, guarded against the table limit.
inline std::uint64_t block_table_size(std::size_t sigma, int k) {
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) {
        size *= sigma;
        if (size > kBlockTableLimit)
            throw std::invalid_argument("block table |Sigma|^k exceeds 2^24; reduce k");
    }
    return size;
}

inline std::string block_to_string(const Alphabet& alphabet, int k, std::uint64_t block) {
    std::string s(static_cast<std::size_t>(k), '\0');
    for (int i = k - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = alphabet.symbol(block % alphabet.size());
        block /= alphabet.size();
    }
    return s;
}

struct FrequencyCensus {
    int block_length = 0;
    std::uint64_t windows = 0;           // number of windows counted
    std::vector<std::uint64_t> counts;   // indexed by canonical block value

    std::uint64_t count(std::uint64_t block) const { return counts.at(block); }
    double frequency(std::uint64_t block) const {
        return windows == 0 ? 0.0 : static_cast<double>(counts.at(block)) / static_cast<double>(windows);
    }
};

// Counts every window w[i..i+k) for 0 <= i <= |w|-k.
inline FrequencyCensus census(const SymbolSeq& w, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > w.size())
        throw std::invalid_argument("census: need 1 <= k <= |w|");
    const std::size_t sigma = w.alphabet().size();
    const std::uint64_t table = block_table_size(sigma, k);

    FrequencyCensus c;
    c.block_length = k;
    c.counts.assign(table, 0);

    std::uint64_t idx = 0;
    std::uint64_t high = 1;  // sigma^(k-1), weight of the window's first symbol
    for (int i = 0; i < k - 1; ++i) high *= sigma;

    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i >= static_cast<std::size_t>(k))
            idx -= high * w[i - static_cast<std::size_t>(k)];
        idx = idx * sigma + w[i];
        if (i + 1 >= static_cast<std::size_t>(k)) ++c.counts[idx];
    }
    c.windows = w.size() - static_cast<std::size_t>(k) + 1;
    return c;
}

// Counts the disjoint blocks w[begin..begin+k), w[begin+k..begin+2k), ...
// inside w[begin, end); a trailing partial block is ignored.
inline FrequencyCensus block_census(const SymbolSeq& w, std::size_t begin, std::size_t end, int k) {
    if (k < 1 || begin > end || end > w.size())
        throw std::invalid_argument("block_census: bad range or block length");
    const std::size_t sigma = w.alphabet().size();
    const std::uint64_t table = block_table_size(sigma, k);

    FrequencyCensus c;
    c.block_length = k;
    c.counts.assign(table, 0);
    const std::size_t blocks = (end - begin) / static_cast<std::size_t>(k);
    for (std::size_t b = 0; b < blocks; ++b) {
        std::uint64_t idx = 0;
        for (int j = 0; j < k; ++j) idx = idx * sigma + w[begin + b * k + j];
        ++c.counts[idx];
    }
    c.windows = blocks;
    return c;
}

struct NormalityRow {
    int k = 0;
    double max_deviation = 0.0;
    std::uint64_t worst_block = 0;
};

struct NormalityReport {
    std::vector<NormalityRow> rows;

    bool accepted(double epsilon) const {
        for (const auto& r : rows)
            if (r.max_deviation > epsilon) return false;
        return true;
    }
};

// For each k <= kmax, the worst |window frequency - product probability|
// over all of Sigma^k.
inline NormalityReport normality_report(const SymbolSeq& w, const ProbMeasure& alpha, int kmax) {
    require_same_alphabet(alpha, w);
    if (kmax < 1) throw std::invalid_argument("normality_report: kmax must be >= 1");
    if (static_cast<std::size_t>(kmax) > w.size())
        throw std::invalid_argument("normality_report: kmax exceeds sequence length");
    const std::size_t sigma = alpha.size();
    block_table_size(sigma, kmax);

    NormalityReport report;
    std::vector<double> prob{1.0};  // product probabilities for the previous k
    for (int k = 1; k <= kmax; ++k) {
        std::vector<double> next(prob.size() * sigma);
        for (std::size_t b = 0; b < next.size(); ++b)
            next[b] = prob[b / sigma] * to_double(alpha.prob(b % sigma));
        prob.swap(next);

        const FrequencyCensus c = census(w, k);
        NormalityRow row;
        row.k = k;
        for (std::uint64_t b = 0; b < prob.size(); ++b) {
            const double dev = std::abs(c.frequency(b) - prob[b]);
            if (dev > row.max_deviation) {
                row.max_deviation = dev;
                row.worst_block = b;
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace fsdim
