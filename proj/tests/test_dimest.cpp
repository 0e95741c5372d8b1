#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "fsdim/fsdim.hpp"
#include "testutil.hpp"

using namespace fsdim;

namespace {

BlockCoder identity_coder() {
    return BlockCoder(testutil::binary(), fixed_length_code(2, 1), "identity");
}

std::vector<std::string> csv_lines(const DimEstimate& est) {
    std::ostringstream os;
    dim_report_csv(os, est);
    std::vector<std::string> lines;
    std::istringstream is(os.str());
    for (std::string line; std::getline(is, line);) lines.push_back(line);
    return lines;
}

const CoderDiagnostics& find_coder(const DimEstimate& est, int k, const std::string& name) {
    for (const CoderDiagnostics& d : est.per_coder)
        if (d.k == k && d.coder == name) return d;
    FAIL("missing coder " << name << " at k=" << k);
    return est.per_coder.front();  // unreachable
}

}  // namespace

TEST_CASE("default checkpoint grid") {
    SECTION("n = 2^20: 32 geometric points from n/2 to n") {
        const auto cps = default_checkpoints(std::uint64_t(1) << 20);
        REQUIRE(cps.size() == 32);
        CHECK(cps.front() == 524288);
        CHECK(cps.back() == 1048576);
        for (std::size_t i = 1; i < cps.size(); ++i) REQUIRE(cps[i] > cps[i - 1]);
    }
    SECTION("n = 1000 stays inside [n/2, n]") {
        const auto cps = default_checkpoints(1000);
        CHECK(cps.front() == 500);
        CHECK(cps.back() == 1000);
        for (std::uint64_t cp : cps) {
            REQUIRE(cp >= 500);
            REQUIRE(cp <= 1000);
        }
    }
    SECTION("tiny n collapses after deduplication") {
        CHECK(default_checkpoints(1) == std::vector<std::uint64_t>{1});
        CHECK(default_checkpoints(2) == std::vector<std::uint64_t>{1, 2});
    }
    SECTION("n = 0 is rejected") {
        CHECK_THROWS_AS(default_checkpoints(0), std::invalid_argument);
    }
}

TEST_CASE("machine-level ratio trajectory") {
    SplitMix64 rng(0x77);
    const SymbolSeq w = testutil::random_sequence(rng, testutil::binary(), 1000);
    SECTION("identity coder against uniform beta is exactly 1") {
        const auto traj = ratio_trajectory(w, testutil::uniform2(), identity_coder().machine(),
                                           {1, 10, 100, 857, 1000}, "identity");
        REQUIRE(traj.ratios.size() == 5);
        for (double r : traj.ratios) REQUIRE(r == 1.0);
        CHECK(traj.coder == "identity");
        CHECK(traj.final_ratio() == 1.0);
        CHECK(traj.tail_min() == 1.0);
        CHECK(traj.tail_max() == 1.0);
    }
    SECTION("uniform 4-block coder is exactly 1 at block boundaries") {
        const BlockCoder coder = make_beta_shannon_coder(testutil::uniform2(), 4);
        const auto traj =
            ratio_trajectory(w, testutil::uniform2(), coder.machine(), {4, 8, 400, 1000});
        for (double r : traj.ratios) REQUIRE(r == 1.0);
    }
    SECTION("mid-block checkpoints count only emitted bits") {
        const BlockCoder coder = make_beta_shannon_coder(testutil::uniform2(), 4);
        const auto traj = ratio_trajectory(w, testutil::uniform2(), coder.machine(), {6});
        REQUIRE(traj.ratios.size() == 1);
        CHECK(traj.ratios[0] == Catch::Approx(4.0 / 6.0));
    }
    SECTION("checkpoint validation") {
        const FiniteStateCompressor m = identity_coder().machine();
        const ProbMeasure u = testutil::uniform2();
        CHECK_THROWS_AS(ratio_trajectory(w, u, m, {}), std::invalid_argument);
        CHECK_THROWS_AS(ratio_trajectory(w, u, m, {10, 10}), std::invalid_argument);
        CHECK_THROWS_AS(ratio_trajectory(w, u, m, {0, 10}), std::invalid_argument);
        CHECK_THROWS_AS(ratio_trajectory(w, u, m, {1001}), std::invalid_argument);
    }
    SECTION("alphabet mismatch is rejected") {
        CHECK_THROWS_AS(ratio_trajectory(w, testutil::uniform3(), identity_coder().machine(), {1}),
                        std::invalid_argument);
    }
}

TEST_CASE("block coding approaches the entropy rate on its own source") {
    const SymbolSeq w = generate(GenSpec{testutil::skew34(), 1000000, 7});
    const BlockCoder coder = make_beta_shannon_coder(testutil::skew34(), 8);
    const auto traj = ratio_trajectory(w, testutil::skew34(), coder.machine(),
                                       default_checkpoints(w.size()));
    CHECK(traj.final_ratio() >= 0.99);
    CHECK(traj.final_ratio() <= 1.13);  // ceil overhead is < 1 bit per 8-symbol block
}

TEST_CASE("ideal trajectory") {
    SECTION("uniform source, uniform beta: ratio is 1 within noise") {
        const SymbolSeq w = generate(GenSpec{testutil::uniform2(), 1000000, 11});
        const auto traj =
            ideal_ratio_trajectory(w, testutil::uniform2(), 4, default_checkpoints(w.size()));
        CHECK(traj.coder == "ideal");
        CHECK(std::abs(traj.final_ratio() - 1.0) <= 0.01);
    }
    SECTION("biased source, uniform beta: ratio approaches H(alpha)") {
        const SymbolSeq w = generate(GenSpec{testutil::skew34(), 1000000, 12});
        const auto traj =
            ideal_ratio_trajectory(w, testutil::uniform2(), 4, default_checkpoints(w.size()));
        CHECK(std::abs(traj.final_ratio() - 0.811278124459132864) <= 0.02);
    }
    SECTION("constant sequence compresses to nearly nothing") {
        const SymbolSeq w = testutil::constant(1000000);
        const auto traj =
            ideal_ratio_trajectory(w, testutil::uniform2(), 1, default_checkpoints(w.size()));
        REQUIRE(traj.final_ratio() > 0.0);
        CHECK(traj.final_ratio() < 1e-4);
        CHECK(traj.tail_max() < 1e-4);
    }
    SECTION("checkpoints must sit in the evaluation half") {
        const SymbolSeq w = testutil::constant(1000);
        CHECK_THROWS_AS(ideal_ratio_trajectory(w, testutil::uniform2(), 1, {499, 1000}),
                        std::invalid_argument);
        CHECK_NOTHROW(ideal_ratio_trajectory(w, testutil::uniform2(), 1, {500, 1000}));
    }
    SECTION("block length must be positive") {
        const SymbolSeq w = testutil::constant(1000);
        CHECK_THROWS_AS(ideal_ratio_trajectory(w, testutil::uniform2(), 0, {1000}),
                        std::invalid_argument);
    }
}

TEST_CASE("information denominator matches the cross cost rate") {
    const ProbMeasure alpha = testutil::uniform2();
    const ProbMeasure beta = testutil::skew34();
    const SymbolSeq w = generate(GenSpec{alpha, std::uint64_t(1) << 20, 5});
    NeumaierSum info;
    for (std::size_t i = 0; i < w.size(); ++i) info.add(beta.cost_bits(w[i]));
    const double rate = info.value() / static_cast<double>(w.size());
    CHECK(std::abs(rate - cross_cost_rate(alpha, beta)) <= 0.005);

    const auto traj = ideal_ratio_trajectory(w, beta, 1, default_checkpoints(w.size()));
    CHECK(std::abs(traj.final_ratio() - 0.828144490757274584) <= 0.015);
}

TEST_CASE("estimate_dimensions guards") {
    const ProbMeasure u = testutil::uniform2();
    CHECK_THROWS_AS(estimate_dimensions(testutil::constant(999), u, 2, DimMode::ideal),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_dimensions(testutil::constant(1000), u, 0, DimMode::ideal),
                    std::invalid_argument);
    const SymbolSeq w3(testutil::ternary(), std::vector<std::uint8_t>(1000, 0));
    CHECK_THROWS_AS(estimate_dimensions(w3, testutil::uniform3(), 16, DimMode::ideal),
                    std::invalid_argument);  // 3^16 block table exceeds the limit
}

TEST_CASE("estimate ordering and per-coder consistency") {
    SplitMix64 seeds(0xABCDE);
    for (DimMode mode : {DimMode::ideal, DimMode::integer_code}) {
        for (int trial = 0; trial < 3; ++trial) {
            const SymbolSeq w = generate(GenSpec{testutil::skew34(), 5000, seeds.next()});
            const DimEstimate est = estimate_dimensions(w, testutil::skew34(), 3, mode);
            REQUIRE(est.dim_lower_est <= est.dim_upper_est + 1e-12);
            REQUIRE(est.per_coder.size() == (mode == DimMode::ideal ? 3u : 12u));
            for (const CoderDiagnostics& d : est.per_coder) {
                REQUIRE(d.tail_min <= d.final_ratio + 1e-12);
                REQUIRE(d.final_ratio <= d.tail_max + 1e-12);
                REQUIRE(d.tail_min > 0.0);
            }
            CHECK_FALSE(est.predicted.has_value());
        }
    }
}

TEST_CASE("integer mode family layout") {
    const SymbolSeq w = generate(GenSpec{testutil::uniform2(), 4096, 3});
    const DimEstimate est = estimate_dimensions(w, testutil::uniform2(), 2, DimMode::integer_code);
    REQUIRE(est.per_coder.size() == 8);
    const std::vector<std::string> order{"shannon-beta", "huffman-beta", "shannon-emp",
                                         "huffman-emp"};
    for (int k = 1; k <= 2; ++k)
        for (int j = 0; j < 4; ++j) {
            CHECK(est.per_coder[4 * (k - 1) + j].k == k);
            CHECK(est.per_coder[4 * (k - 1) + j].coder == order[j]);
        }
}

TEST_CASE("ideal family is stable across block lengths on an i.i.d. source") {
    const SymbolSeq w = generate(GenSpec{testutil::skew34(), std::uint64_t(1) << 20, 21});
    const DimEstimate est = estimate_dimensions(w, testutil::uniform2(), 6, DimMode::ideal);
    REQUIRE(est.per_coder.size() == 6);
    for (const CoderDiagnostics& d : est.per_coder) {
        CHECK(d.coder == "ideal");
        CHECK(std::abs(d.final_ratio - 0.811278124459132864) <= 0.02);
    }
    for (std::size_t i = 1; i < est.per_coder.size(); ++i)
        CHECK(est.per_coder[i].final_ratio <= est.per_coder[i - 1].final_ratio + 0.01);
}

TEST_CASE("ideal trajectories lower-bound the integer shannon coder") {
    const SymbolSeq w = generate(GenSpec{testutil::uniform2(), std::uint64_t(1) << 18, 31});
    const ProbMeasure beta = testutil::skew34();
    const DimEstimate ideal = estimate_dimensions(w, beta, 4, DimMode::ideal);
    const DimEstimate integer = estimate_dimensions(w, beta, 4, DimMode::integer_code);
    for (int k = 1; k <= 4; ++k) {
        const CoderDiagnostics& id = find_coder(ideal, k, "ideal");
        const CoderDiagnostics& sh = find_coder(integer, k, "shannon-emp");
        REQUIRE(id.tail_min <= sh.tail_min + 0.001);
    }
}

TEST_CASE("huffman coders never lose to shannon coders at the final checkpoint") {
    const SymbolSeq w = generate(GenSpec{testutil::skew34(), std::uint64_t(1) << 18, 41});
    const DimEstimate est = estimate_dimensions(w, testutil::skew34(), 4, DimMode::integer_code);
    for (int k = 1; k <= 4; ++k) {
        REQUIRE(find_coder(est, k, "huffman-beta").final_ratio <=
                find_coder(est, k, "shannon-beta").final_ratio + 1e-12);
        REQUIRE(find_coder(est, k, "huffman-emp").final_ratio <=
                find_coder(est, k, "shannon-emp").final_ratio + 1e-12);
    }
}

TEST_CASE("divergence experiment") {
    SECTION("deterministic for a fixed seed") {
        const ExperimentReport a = divergence_experiment(testutil::skew34(), testutil::uniform2(),
                                                         2000, 9, 2, DimMode::ideal);
        const ExperimentReport b = divergence_experiment(testutil::skew34(), testutil::uniform2(),
                                                         2000, 9, 2, DimMode::ideal);
        REQUIRE(a.estimate.per_coder.size() == b.estimate.per_coder.size());
        for (std::size_t i = 0; i < a.estimate.per_coder.size(); ++i) {
            CHECK(a.estimate.per_coder[i].final_ratio == b.estimate.per_coder[i].final_ratio);
            CHECK(a.estimate.per_coder[i].tail_min == b.estimate.per_coder[i].tail_min);
            CHECK(a.estimate.per_coder[i].tail_max == b.estimate.per_coder[i].tail_max);
        }
        CHECK(a.estimate.dim_lower_est == b.estimate.dim_lower_est);
        CHECK(a.estimate.dim_upper_est == b.estimate.dim_upper_est);
        REQUIRE(a.estimate.predicted.has_value());
        CHECK(*a.estimate.predicted == Catch::Approx(0.811278124459132864).margin(1e-15));
        CHECK(a.n == 2000);
        CHECK(a.seed == 9);
        REQUIRE(a.normality.rows.size() == 2);
    }
    SECTION("alphabet mismatch is rejected") {
        CHECK_THROWS_AS(divergence_experiment(testutil::uniform2(), testutil::uniform3(), 2000, 1,
                                              2, DimMode::ideal),
                        std::invalid_argument);
    }
}

TEST_CASE("csv report") {
    const SymbolSeq w = generate(GenSpec{testutil::uniform2(), 2000, 13});
    SECTION("shape and summary row without a known source") {
        const DimEstimate est = estimate_dimensions(w, testutil::uniform2(), 3, DimMode::ideal);
        const auto lines = csv_lines(est);
        REQUIRE(lines.size() == 1 + 3 + 1);
        CHECK(lines[0] == "k,coder,mode,n,ratio,dim_lower,dim_upper,predicted,abs_error");
        CHECK(lines[1].rfind("1,ideal,ideal,2000,", 0) == 0);
        CHECK(lines.back().rfind("0,all,ideal,2000,", 0) == 0);
        CHECK(lines[1].find("nan,nan") != std::string::npos);
        CHECK(lines.back().find("nan,nan") != std::string::npos);
    }
    SECTION("integer mode emits four rows per block length") {
        const DimEstimate est =
            estimate_dimensions(w, testutil::uniform2(), 2, DimMode::integer_code);
        const auto lines = csv_lines(est);
        REQUIRE(lines.size() == 1 + 4 * 2 + 1);
        CHECK(lines[1].rfind("1,shannon-beta,integer,2000,", 0) == 0);
        CHECK(lines[4].rfind("1,huffman-emp,integer,2000,", 0) == 0);
        CHECK(lines.back().rfind("0,all,integer,2000,", 0) == 0);
    }
    SECTION("predicted column and error appear for experiments, byte-stable") {
        const ExperimentReport rep = divergence_experiment(testutil::skew34(), testutil::uniform2(),
                                                           2000, 9, 2, DimMode::ideal);
        std::ostringstream run1, run2;
        dim_report_csv(run1, rep.estimate);
        dim_report_csv(run2, rep.estimate);
        CHECK(run1.str() == run2.str());
        const auto lines = csv_lines(rep.estimate);
        REQUIRE(lines.size() == 4);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            CHECK(lines[i].find(",0.811278,") != std::string::npos);
            CHECK(lines[i].find("nan") == std::string::npos);
        }
    }
}
