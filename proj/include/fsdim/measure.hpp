#pragma once

// Positive probability measures on a finite alphabet and the closed-form
// information quantities over them: entropy, Kullback-Leibler divergence,
// Shannon self-information, word probabilities, and the divergence-formula
// value H(a) / (H(a) + D(a||b)).
//
// Conventions: probabilities are exact rationals, every logarithm is base 2,
// derived reals are IEEE doubles. Per-symbol bit costs log2(1/p) are
// precomputed once per measure; long sums use compensated summation so the
// rounding error stays O(1) in the sequence length.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fsdim/alphabet.hpp"
#include "fsdim/rational.hpp"
#include "fsdim/sequence.hpp"

namespace fsdim {

// Neumaier's variant of Kahan summation.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

class ProbMeasure {
public:
    ProbMeasure(Alphabet alphabet, std::vector<Rational> probs)
        : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
        if (probs_.size() != alphabet_.size())
            throw std::invalid_argument("measure needs one probability per symbol");
        Rational total = 0;
        for (const Rational& p : probs_) {
            if (p <= 0) throw std::invalid_argument("probabilities must be strictly positive");
            total += p;
        }
        if (total != 1) throw std::invalid_argument("probabilities must sum to exactly 1");
        costs_.reserve(probs_.size());
        for (const Rational& p : probs_) costs_.push_back(-log2_rational(p));
    }

    static ProbMeasure uniform(const Alphabet& alphabet) {
        return ProbMeasure(alphabet, std::vector<Rational>(
                                         alphabet.size(),
                                         Rational(1, static_cast<long>(alphabet.size()))));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return probs_.size(); }
    const Rational& prob(std::size_t i) const { return probs_.at(i); }
    const std::vector<Rational>& probs() const { return probs_; }

    // log2(1/p_i) in bits.
    double cost_bits(std::size_t i) const { return costs_[i]; }
    const std::vector<double>& costs() const { return costs_; }

    double min_cost_bits() const {
        double m = costs_[0];
        for (double c : costs_) m = std::min(m, c);
        return m;
    }
    double max_cost_bits() const {
        double m = costs_[0];
        for (double c : costs_) m = std::max(m, c);
        return m;
    }

    friend bool operator==(const ProbMeasure& a, const ProbMeasure& b) {
        return a.alphabet_ == b.alphabet_ && a.probs_ == b.probs_;
    }
    friend bool operator!=(const ProbMeasure& a, const ProbMeasure& b) { return !(a == b); }

private:
    Alphabet alphabet_;
    std::vector<Rational> probs_;
    std::vector<double> costs_;
};

inline void require_same_alphabet(const ProbMeasure& a, const ProbMeasure& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("measures are over different alphabets");
}

inline void require_same_alphabet(const ProbMeasure& m, const SymbolSeq& w) {
    if (m.alphabet() != w.alphabet())
        throw std::invalid_argument("sequence and measure are over different alphabets");
}

// Shannon entropy H(a) = sum_s a(s) log2(1/a(s)), in bits per symbol.
inline double entropy(const ProbMeasure& a) {
    NeumaierSum h;
    for (std::size_t i = 0; i < a.size(); ++i) h.add(to_double(a.prob(i)) * a.cost_bits(i));
    return h.value();
}

// Kullback-Leibler divergence D(a||b) = sum_s a(s) log2(a(s)/b(s)).
// Exactly 0 iff the rational probability vectors are equal.
inline double kl_divergence(const ProbMeasure& a, const ProbMeasure& b) {
    require_same_alphabet(a, b);
    if (a == b) return 0.0;
    NeumaierSum d;
    for (std::size_t i = 0; i < a.size(); ++i)
        d.add(to_double(a.prob(i)) * (b.cost_bits(i) - a.cost_bits(i)));
    return d.value();
}

// Shannon self-information I_b(w) = sum_i log2(1/b(w[i])), in bits.
inline double self_information(const ProbMeasure& b, const SymbolSeq& w) {
    require_same_alphabet(b, w);
    NeumaierSum s;
    for (std::size_t i = 0; i < w.size(); ++i) s.add(b.cost_bits(w[i]));
    return s.value();
}

// Exact product probability a(w) = prod_i a(w[i]).
inline Rational word_probability(const ProbMeasure& a, const SymbolSeq& w) {
    require_same_alphabet(a, w);
    Rational p = 1;
    for (std::size_t i = 0; i < w.size(); ++i) p *= a.prob(w[i]);
    return p;
}

// Expected per-symbol cost of coding a-distributed symbols at b's prices:
// sum_s a(s) log2(1/b(s)) = H(a) + D(a||b).
inline double cross_cost_rate(const ProbMeasure& a, const ProbMeasure& b) {
    require_same_alphabet(a, b);
    NeumaierSum c;
    for (std::size_t i = 0; i < a.size(); ++i) c.add(to_double(a.prob(i)) * b.cost_bits(i));
    return c.value();
}

// H(a) / (H(a) + D(a||b)), in (0, 1]. Equals 1 exactly when a == b.
inline double divergence_formula_value(const ProbMeasure& a, const ProbMeasure& b) {
    require_same_alphabet(a, b);
    if (a == b) return 1.0;
    const double h = entropy(a);
    const double d = kl_divergence(a, b);
    return h / (h + d);
}

}  // namespace fsdim
