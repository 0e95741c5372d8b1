#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "fsdim/fsdim.hpp"
#include "testutil.hpp"

using namespace fsdim;
using Catch::Matchers::WithinAbs;

// High-precision reference values, evaluated independently with 50-digit
// arithmetic and frozen here to 18 significant digits.
namespace oracle {
constexpr double kEntropy34 = 0.811278124459132864;        // H(3/4, 1/4)
constexpr double kKl34Uniform = 0.188721875540867136;      // D((3/4,1/4) || u2)
constexpr double kKlUniform34 = 0.207518749639421909;      // D(u2 || (3/4,1/4))
constexpr double kInfo00 = 0.830074998557687637;           // 2 * log2(4/3)
constexpr double kDivUniform34 = 0.828144490757274584;     // 1 / (1 + D(u2||(3/4,1/4)))
constexpr double kCrossUniform34 = 1.20751874963942191;    // sum u2(a) log2(1/(3/4,1/4)(a))
}  // namespace oracle

TEST_CASE("alphabet construction and lookup") {
    Alphabet bin = testutil::binary();
    CHECK(bin.size() == 2);
    CHECK(bin.symbol(0) == '0');
    CHECK(bin.symbol(1) == '1');
    CHECK(bin.index('1') == 1);
    CHECK(bin.has('0'));
    CHECK_FALSE(bin.has('2'));
    CHECK_THROWS_AS(bin.index('x'), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({'a'}), std::invalid_argument);       // degenerate
    CHECK_THROWS_AS(Alphabet({'a', 'a'}), std::invalid_argument);  // duplicate
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1") == Rational(1));
    CHECK(parse_rational("0.2500") == Rational(1, 4));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e-3"), std::invalid_argument);
}

TEST_CASE("measure validation") {
    Alphabet bin = testutil::binary();
    CHECK_THROWS_AS(ProbMeasure(bin, {Rational(1), Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(ProbMeasure(bin, {Rational(1, 2), Rational(1, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(ProbMeasure(bin, {Rational(3, 4), Rational(1, 2)}), std::invalid_argument);
    CHECK(ProbMeasure::uniform(bin).prob(0) == Rational(1, 2));
}

TEST_CASE("entropy examples") {
    CHECK(entropy(testutil::uniform2()) == 1.0);
    CHECK(entropy(ProbMeasure::uniform(Alphabet({'a', 'b', 'c', 'd'}))) == 2.0);
    CHECK_THAT(entropy(testutil::skew34()), WithinAbs(oracle::kEntropy34, 1e-12));
}

TEST_CASE("kl divergence examples and asymmetry") {
    CHECK(kl_divergence(testutil::uniform2(), testutil::uniform2()) == 0.0);
    CHECK_THAT(kl_divergence(testutil::skew34(), testutil::uniform2()),
               WithinAbs(oracle::kKl34Uniform, 1e-12));
    CHECK_THAT(kl_divergence(testutil::uniform2(), testutil::skew34()),
               WithinAbs(oracle::kKlUniform34, 1e-12));
    CHECK_THROWS_AS(kl_divergence(testutil::uniform2(), testutil::uniform3()),
                    std::invalid_argument);
}

TEST_CASE("self-information examples") {
    Alphabet bin = testutil::binary();
    CHECK(self_information(testutil::uniform2(), SymbolSeq::from_string(bin, "0101")) == 4.0);
    CHECK_THAT(self_information(testutil::skew34(), SymbolSeq::from_string(bin, "00")),
               WithinAbs(oracle::kInfo00, 1e-12));
    CHECK(self_information(testutil::skew34(), SymbolSeq(bin, {})) == 0.0);
}

TEST_CASE("word probability examples") {
    Alphabet bin = testutil::binary();
    CHECK(word_probability(testutil::uniform2(), SymbolSeq::from_string(bin, "010")) ==
          Rational(1, 8));
    CHECK(word_probability(testutil::skew34(), SymbolSeq::from_string(bin, "01")) ==
          Rational(3, 16));
    CHECK(word_probability(testutil::skew34(), SymbolSeq(bin, {})) == Rational(1));
}

TEST_CASE("divergence formula value examples") {
    CHECK(divergence_formula_value(testutil::skew34(), testutil::skew34()) == 1.0);
    CHECK(divergence_formula_value(testutil::uniform3(), testutil::uniform3()) == 1.0);
    CHECK_THAT(divergence_formula_value(testutil::skew34(), testutil::uniform2()),
               WithinAbs(oracle::kEntropy34, 1e-12));  // H + D = 1 exactly under uniform beta
    CHECK_THAT(divergence_formula_value(testutil::uniform2(), testutil::skew34()),
               WithinAbs(oracle::kDivUniform34, 1e-12));
}

TEST_CASE("cross cost rate examples") {
    CHECK(cross_cost_rate(testutil::uniform2(), testutil::uniform2()) == 1.0);
    CHECK(cross_cost_rate(testutil::skew34(), testutil::uniform2()) == 1.0);
    CHECK_THAT(cross_cost_rate(testutil::uniform2(), testutil::skew34()),
               WithinAbs(oracle::kCrossUniform34, 1e-12));
}

TEST_CASE("Gibbs inequality over fuzzed measure pairs") {
    SplitMix64 rng(0xC0FFEE);
    Alphabet bin = testutil::binary();
    Alphabet ter = testutil::ternary();
    for (int trial = 0; trial < 1000; ++trial) {
        const Alphabet& alphabet = (trial % 2 == 0) ? bin : ter;
        ProbMeasure a = testutil::random_measure(rng, alphabet);
        ProbMeasure b =
            (trial % 5 == 0) ? a : testutil::random_measure(rng, alphabet);
        const double d = kl_divergence(a, b);
        REQUIRE(d >= 0.0);
        if (a.probs() == b.probs()) {
            REQUIRE(d == 0.0);
        } else {
            REQUIRE(d > 0.0);
        }
    }
}

TEST_CASE("self-information additivity over fuzzed concatenations") {
    SplitMix64 rng(0xADD17);
    Alphabet bin = testutil::binary();
    for (int trial = 0; trial < 1000; ++trial) {
        ProbMeasure beta = testutil::random_measure(rng, bin);
        const std::size_t nu = rng.next() % 10000, nv = rng.next() % 10000;
        SymbolSeq u = testutil::random_sequence(rng, bin, nu);
        SymbolSeq v = testutil::random_sequence(rng, bin, nv);
        std::vector<std::uint8_t> joined = u.indices();
        joined.insert(joined.end(), v.indices().begin(), v.indices().end());
        SymbolSeq uv(bin, std::move(joined));
        REQUIRE_THAT(self_information(beta, uv),
                     WithinAbs(self_information(beta, u) + self_information(beta, v), 1e-9));
    }
}

TEST_CASE("self-information agrees with exact word probability") {
    SplitMix64 rng(0x10635);
    Alphabet ter = testutil::ternary();
    for (int trial = 0; trial < 300; ++trial) {
        ProbMeasure alpha = testutil::random_measure(rng, ter, 50);
        SymbolSeq w = testutil::random_sequence(rng, ter, rng.next() % 65);
        const Rational p = word_probability(alpha, w);
        const double exact = -log2_rational(p);
        REQUIRE_THAT(self_information(alpha, w), WithinAbs(exact, 1e-9));
    }
}

TEST_CASE("cross cost rate decomposes as entropy plus divergence") {
    SplitMix64 rng(0xDEC0);
    Alphabet ter = testutil::ternary();
    for (int trial = 0; trial < 1000; ++trial) {
        ProbMeasure a = testutil::random_measure(rng, ter);
        ProbMeasure b = testutil::random_measure(rng, ter);
        REQUIRE_THAT(cross_cost_rate(a, b),
                     WithinAbs(entropy(a) + kl_divergence(a, b), 1e-12));
    }
}

TEST_CASE("self-information bounds") {
    SplitMix64 rng(0xB0D5);
    Alphabet bin = testutil::binary();
    for (int trial = 0; trial < 200; ++trial) {
        ProbMeasure beta = testutil::random_measure(rng, bin);
        const std::size_t n = 1 + rng.next() % 5000;
        SymbolSeq w = testutil::random_sequence(rng, bin, n);
        const double info = self_information(beta, w);
        REQUIRE(info >= static_cast<double>(n) * beta.min_cost_bits() - 1e-9);
        REQUIRE(info <= static_cast<double>(n) * beta.max_cost_bits() + 1e-9);
    }
}

TEST_CASE("measure JSON parsing") {
    const ProbMeasure m =
        parse_measure_json(R"({"alphabet": ["0","1"], "probs": ["3/4","1/4"]})");
    CHECK(m.alphabet() == testutil::binary());
    CHECK(m.prob(0) == Rational(3, 4));

    const ProbMeasure dec =
        parse_measure_json(R"({"alphabet": ["a","b"], "probs": ["0.75","0.25"]})");
    CHECK(dec.prob(1) == Rational(1, 4));

    CHECK_THROWS_AS(parse_measure_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure_json(R"({"alphabet": ["0","1"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure_json(R"({"alphabet": ["0","1"], "probs": ["1/2"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_measure_json(R"({"alphabet": ["01","1"], "probs": ["1/2","1/2"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_measure_json(R"({"alphabet": ["0","1"], "probs": ["1/2","x"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_measure_json(R"({"alphabet": ["0","1"], "probs": [0.5, 0.5]})"),
                    std::invalid_argument);
}

TEST_CASE("fixed-point formatting") {
    CHECK(format_fixed(1.0) == "1.000000");
    CHECK(format_fixed(0.8112781244) == "0.811278");
    CHECK(format_fixed(-0.0000001) == "0.000000");  // no negative zero
    CHECK(format_fixed(-1.5) == "-1.500000");
    CHECK(format_fixed(std::nan("")) == "nan");
}
