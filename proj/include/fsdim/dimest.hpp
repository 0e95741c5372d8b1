#pragma once

// Ratio-trajectory estimators for the finite-state beta-dimensions. For a
// coder C and prefix lengths n_1 < ... < n_m, the trajectory records
// r_j = bits(n_j) / I_beta(w_{n_j}); liminf and limsup over the infinite
// sequence are approximated by min and max over checkpoints in the tail
// (all checkpoints live in [n/2, n], the burn-in convention), and the
// dimension estimates take the minimum over the coder family.
//
// Two modes: integer mode runs real block-coder machines (Shannon/Huffman
// codes over the beta-product and smoothed-empirical distributions, four
// coders per k); ideal mode charges fractional bits log2(1/mu_hat(block))
// with mu_hat frozen from the first half, removing integer-length redundancy.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsdim/alphabet.hpp"
#include "fsdim/block_coder.hpp"
#include "fsdim/census.hpp"
#include "fsdim/format.hpp"
#include "fsdim/fsc.hpp"
#include "fsdim/generate.hpp"
#include "fsdim/measure.hpp"
#include "fsdim/rational.hpp"
#include "fsdim/sequence.hpp"

namespace fsdim {

enum class DimMode { ideal, integer_code };

inline std::string to_string(DimMode mode) {
    return mode == DimMode::ideal ? "ideal" : "integer";
}

inline DimMode parse_dim_mode(const std::string& name) {
    if (name == "ideal") return DimMode::ideal;
    if (name == "integer") return DimMode::integer_code;
    throw std::invalid_argument("unknown mode '" + name + "' (expected ideal or integer)");
}

// 32 geometrically spaced prefix lengths from n/2 to n. The scale table is
// round(2^(j/31) * 2^60) frozen as integers, so the grid never depends on
// the platform's transcendental functions; checkpoint j is
// floor(n * scale[j] / 2^61), clamped to [1, n] and deduplicated.
inline std::vector<std::uint64_t> default_checkpoints(std::uint64_t n) {
    static constexpr std::uint64_t kScale[32] = {
        1152921504606846976ull, 1178990714961582200ull, 1205649387587429439ull,
        1232910851072571320ull, 1260788735383703818ull, 1289296978680637100ull,
        1318449834284984281ull, 1348261877806422236ull, 1378748014430087397ull,
        1409923486368750034ull, 1441803880483492892ull, 1474405136076704315ull,
        1507743552861282130ull, 1541835799110032674ull, 1576698919989339425ull,
        1612350346081267858ull, 1648807902098367311ull, 1686089815795527045ull,
        1724214727083342154ull, 1763201697347545766ull, 1803070218979166985ull,
        1843840225120179385ull, 1885532099629512605ull, 1928166687274409778ull,
        1971765304152226178ull, 2016349748347879698ull, 2061942310832281584ull,
        2108565786607196330ull, 2156243486102102860ull, 2204999246828755097ull,
        2254857445299268883ull, 2305843009213693952ull};
    if (n == 0) throw std::invalid_argument("default_checkpoints: empty sequence");
    std::vector<std::uint64_t> cps;
    cps.reserve(32);
    for (std::uint64_t scale : kScale) {
        BigInt c = (BigInt(n) * scale) >> 61;
        std::uint64_t cp = c.convert_to<std::uint64_t>();
        cp = std::max<std::uint64_t>(cp, 1);
        cp = std::min(cp, n);
        if (cps.empty() || cp > cps.back()) cps.push_back(cp);
    }
    return cps;
}

struct RatioTrajectory {
    std::vector<std::uint64_t> checkpoints;
    std::vector<double> ratios;
    std::string coder;

    double final_ratio() const { return ratios.back(); }
    double tail_min() const { return *std::min_element(ratios.begin(), ratios.end()); }
    double tail_max() const { return *std::max_element(ratios.begin(), ratios.end()); }
};

namespace detail {

inline void validate_checkpoints(const std::vector<std::uint64_t>& checkpoints, std::uint64_t n) {
    if (checkpoints.empty()) throw std::invalid_argument("checkpoint list is empty");
    std::uint64_t prev = 0;
    for (std::uint64_t cp : checkpoints) {
        if (cp <= prev) throw std::invalid_argument("checkpoints must be strictly increasing");
        if (cp < 1 || cp > n) throw std::invalid_argument("checkpoint outside [1, |w|]");
        prev = cp;
    }
}

}  // namespace detail

// Machine-level trajectory: bits(n) counts the output bits the transducer has
// emitted after reading the length-n prefix (the |C(w)| of the dimension
// definition; no end-of-input flush is added mid-stream).
inline RatioTrajectory ratio_trajectory(const SymbolSeq& w, const ProbMeasure& beta,
                                        const FiniteStateCompressor& coder,
                                        const std::vector<std::uint64_t>& checkpoints,
                                        std::string descriptor = "fsc") {
    require_same_alphabet(beta, w);
    if (coder.alphabet_size() != static_cast<int>(beta.alphabet().size()))
        throw std::invalid_argument("coder alphabet does not match measure");
    detail::validate_checkpoints(checkpoints, w.size());

    RatioTrajectory traj;
    traj.checkpoints = checkpoints;
    traj.coder = std::move(descriptor);
    traj.ratios.reserve(checkpoints.size());

    RunState run = coder.begin_run();
    NeumaierSum info;
    std::size_t next_cp = 0;
    for (std::uint64_t i = 0; i < w.size() && next_cp < checkpoints.size(); ++i) {
        const std::uint8_t s = w[i];
        coder.step(run, s);
        info.add(beta.cost_bits(s));
        if (i + 1 == checkpoints[next_cp]) {
            traj.ratios.push_back(static_cast<double>(run.bits_emitted) / info.value());
            ++next_cp;
        }
    }
    return traj;
}

// Ideal-code trajectory: fractional bits under the smoothed empirical k-block
// distribution frozen from the first half of w; the partial block pending at
// a checkpoint is charged at the empirical per-symbol (unigram) cost.
inline RatioTrajectory ideal_ratio_trajectory(const SymbolSeq& w, const ProbMeasure& beta,
                                              int k, const std::vector<std::uint64_t>& checkpoints) {
    require_same_alphabet(beta, w);
    if (k < 1) throw std::invalid_argument("block length must be >= 1");
    const std::uint64_t sigma = w.alphabet().size();
    const std::uint64_t table = block_table_size(sigma, k);
    const std::uint64_t n = w.size();
    const std::uint64_t train_end = n / 2;
    detail::validate_checkpoints(checkpoints, n);
    if (checkpoints.front() < std::max<std::uint64_t>(train_end, 1))
        throw std::invalid_argument("checkpoints must lie in the second half of the sequence");

    const std::vector<Rational> mu_k = smoothed_block_probs(block_census(w, 0, train_end, k).counts);
    const std::vector<Rational> mu_1 =
        k == 1 ? mu_k : smoothed_block_probs(block_census(w, 0, train_end, 1).counts);
    std::vector<double> cost_k(table), cost_1(sigma);
    for (std::uint64_t b = 0; b < table; ++b) cost_k[b] = -log2_rational(mu_k[b]);
    for (std::uint64_t s = 0; s < sigma; ++s) cost_1[s] = -log2_rational(mu_1[s]);

    RatioTrajectory traj;
    traj.checkpoints = checkpoints;
    traj.coder = "ideal";
    traj.ratios.reserve(checkpoints.size());

    NeumaierSum block_bits, info;
    double pending_bits = 0;
    std::uint64_t block = 0;
    int filled = 0;
    std::size_t next_cp = 0;
    for (std::uint64_t i = 0; i < n && next_cp < checkpoints.size(); ++i) {
        const std::uint8_t s = w[i];
        info.add(beta.cost_bits(s));
        block = block * sigma + s;
        pending_bits += cost_1[s];
        if (++filled == k) {
            block_bits.add(cost_k[block]);
            block = 0;
            filled = 0;
            pending_bits = 0;
        }
        if (i + 1 == checkpoints[next_cp]) {
            traj.ratios.push_back((block_bits.value() + pending_bits) / info.value());
            ++next_cp;
        }
    }
    return traj;
}

struct CoderDiagnostics {
    int k = 0;
    std::string coder;
    double final_ratio = 0;
    double tail_min = 0;
    double tail_max = 0;
};

struct DimEstimate {
    double dim_lower_est = 0;  // estimates dim_FS^beta: min over family of tail minima
    double dim_upper_est = 0;  // estimates Dim_FS^beta: min over family of tail maxima
    std::optional<double> predicted;  // divergence-formula value when alpha is known
    DimMode mode = DimMode::ideal;
    std::uint64_t n = 0;
    std::vector<CoderDiagnostics> per_coder;
};

namespace detail {

inline CoderDiagnostics diagnostics_of(int k, const RatioTrajectory& traj) {
    return CoderDiagnostics{k, traj.coder, traj.final_ratio(), traj.tail_min(), traj.tail_max()};
}

}  // namespace detail

inline DimEstimate estimate_dimensions(const SymbolSeq& w, const ProbMeasure& beta, int kmax,
                                       DimMode mode) {
    require_same_alphabet(beta, w);
    if (w.size() < 1000)
        throw std::invalid_argument("sequence too short: dimension estimation needs |w| >= 1000");
    if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
    block_table_size(w.alphabet().size(), kmax);  // throws when sigma^kmax is not tabulable

    const std::uint64_t n = w.size();
    const std::vector<std::uint64_t> cps = default_checkpoints(n);

    DimEstimate est;
    est.mode = mode;
    est.n = n;
    for (int k = 1; k <= kmax; ++k) {
        if (mode == DimMode::ideal) {
            est.per_coder.push_back(detail::diagnostics_of(k, ideal_ratio_trajectory(w, beta, k, cps)));
        } else {
            const std::vector<std::uint64_t> counts = block_census(w, 0, n / 2, k).counts;
            const BlockCoder coders[4] = {
                make_beta_shannon_coder(beta, k),
                make_beta_huffman_coder(beta, k),
                make_empirical_shannon_coder(w.alphabet(), counts, k),
                make_empirical_huffman_coder(w.alphabet(), counts, k),
            };
            for (const BlockCoder& coder : coders)
                est.per_coder.push_back(detail::diagnostics_of(
                    k, ratio_trajectory(w, beta, coder.machine(), cps, coder.descriptor())));
        }
    }

    est.dim_lower_est = std::numeric_limits<double>::infinity();
    est.dim_upper_est = std::numeric_limits<double>::infinity();
    for (const CoderDiagnostics& d : est.per_coder) {
        est.dim_lower_est = std::min(est.dim_lower_est, d.tail_min);
        est.dim_upper_est = std::min(est.dim_upper_est, d.tail_max);
    }
    return est;
}

struct ExperimentReport {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    DimEstimate estimate;
    NormalityReport normality;  // census of the generated input against alpha
};

// Generate an alpha-distributed prefix, estimate its beta-dimensions, and
// attach the predicted divergence-formula value and the normality census.
// Deterministic for a fixed seed.
inline ExperimentReport divergence_experiment(const ProbMeasure& alpha, const ProbMeasure& beta,
                                              std::uint64_t n, std::uint64_t seed, int kmax,
                                              DimMode mode) {
    require_same_alphabet(alpha, beta);
    ExperimentReport report;
    report.n = n;
    report.seed = seed;
    const SymbolSeq w = generate(GenSpec{alpha, n, seed});
    report.estimate = estimate_dimensions(w, beta, kmax, mode);
    report.estimate.predicted = divergence_formula_value(alpha, beta);
    report.normality = normality_report(w, alpha, kmax);
    return report;
}

// CSV report: one row per (k, coder) plus a summary row (k = 0, coder "all")
// carrying the family-wide estimates. Floating-point fields use 6 decimals;
// predicted/abs_error print as "nan" when no source measure is known.
inline void dim_report_csv(std::ostream& os, const DimEstimate& est) {
    os << "k,coder,mode,n,ratio,dim_lower,dim_upper,predicted,abs_error\n";
    const std::string mode = to_string(est.mode);
    const auto row = [&](int k, const std::string& coder, double ratio, double lo, double hi) {
        os << k << ',' << coder << ',' << mode << ',' << est.n << ',' << format_fixed(ratio) << ','
           << format_fixed(lo) << ',' << format_fixed(hi) << ',';
        if (est.predicted) {
            os << format_fixed(*est.predicted) << ',' << format_fixed(std::abs(lo - *est.predicted));
        } else {
            os << "nan,nan";
        }
        os << '\n';
    };
    double best_final = std::numeric_limits<double>::infinity();
    for (const CoderDiagnostics& d : est.per_coder) {
        best_final = std::min(best_final, d.final_ratio);
        row(d.k, d.coder, d.final_ratio, d.tail_min, d.tail_max);
    }
    row(0, "all", best_final, est.dim_lower_est, est.dim_upper_est);
}

}  // namespace fsdim
