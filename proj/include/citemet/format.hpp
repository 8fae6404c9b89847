#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace citemet {

// Presentation rounding: half-up to one decimal place. All computation keeps
// full double precision; this is applied only at the display boundary.
inline double display_round(double v) {
    return std::floor(v * 10.0 + 0.5) / 10.0;
}

// Renders a non-negative value with exactly one decimal digit, half-up.
// Built digit-by-digit so output never depends on printf tie behavior.
inline std::string format_display(double v) {
    const long long tenths = static_cast<long long>(std::floor(v * 10.0 + 0.5));
    std::string out = std::to_string(tenths / 10);
    out += '.';
    out += static_cast<char>('0' + static_cast<int>(tenths % 10));
    return out;
}

// csv number format: integral values keep one decimal ("50.0"), everything
// else is emitted with six significant digits.
inline std::string format_csv_number(double v) {
    char buf[64];
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.1f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", v);
    }
    return buf;
}

// Plot coordinates are integer-valued; %.g keeps them free of trailing ".0".
inline std::string format_coordinate(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace citemet
