#pragma once

// Locale-independent numeric formatting for reports: fixed-point with a set
// number of decimals (6 by default, matching every textual interface), with
// round-half-even ties, "nan" for missing values, and no negative zero.

#include <cmath>
#include <cstdio>
#include <string>

namespace fsdim {

inline std::string format_fixed(double value, int digits = 6) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    std::string out(buf);
    if (out[0] == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

}  // namespace fsdim
