#pragma once

// Exact rational arithmetic used for probability values. Probabilities are
// kept as arbitrary-precision rationals so that equality is decidable and
// products/sums of probabilities never drift.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fsdim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// log2 of a positive big integer, good to ~1e-15 relative error even when
// the integer exceeds 53 bits.
inline double log2_bigint(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("log2_bigint: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(n);
    if (bits <= 1000) return std::log2(n.convert_to<double>());
    const unsigned shift = bits - 512;
    return std::log2((n >> shift).convert_to<double>()) + static_cast<double>(shift);
}

// log2 of a positive rational via log2(num) - log2(den).
inline double log2_rational(const Rational& r) {
    if (r <= 0) throw std::invalid_argument("log2_rational: argument must be positive");
    return log2_bigint(numerator(r)) - log2_bigint(denominator(r));
}

// Smallest l >= 0 with r * 2^l >= 1, i.e. ceil(log2(1/r)), computed exactly.
inline int ceil_log2_inverse(const Rational& r) {
    const BigInt p = numerator(r);
    const BigInt q = denominator(r);
    if (p <= 0) throw std::invalid_argument("ceil_log2_inverse: argument must be positive");
    if (p >= q) return 0;
    unsigned l = boost::multiprecision::msb(q) - boost::multiprecision::msb(p);
    while ((p << l) < q) ++l;
    while (l > 0 && (p << (l - 1)) >= q) --l;
    return static_cast<int>(l);
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline BigInt parse_digits(std::string_view s) {
    BigInt v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace detail

// Parses "p/q" fractions and plain decimal strings ("0.75", ".5", "1")
// into exact rationals. No signs, no exponents.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("not a valid rational: '" + std::string(text) +
                                    "' (expected \"p/q\" or a plain decimal)");
    };
    if (text.empty()) fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) fail();
        const BigInt q = detail::parse_digits(den);
        if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(detail::parse_digits(num), q);
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        if (!detail::all_digits(text)) fail();
        return Rational(detail::parse_digits(text));
    }
    const auto ip = text.substr(0, dot);
    const auto fp = text.substr(dot + 1);
    if (ip.empty() && fp.empty()) fail();
    if (!ip.empty() && !detail::all_digits(ip)) fail();
    if (!fp.empty() && !detail::all_digits(fp)) fail();
    BigInt scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    const BigInt whole = ip.empty() ? BigInt(0) : detail::parse_digits(ip);
    const BigInt frac = fp.empty() ? BigInt(0) : detail::parse_digits(fp);
    return Rational(whole * scale + frac, scale);
}

}  // namespace fsdim
