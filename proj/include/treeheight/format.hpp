#pragma once

// Shared output formatting: exact rationals as "p" / "p/q" strings, floats
// printed to 12 significant digits. Keeping floats out of the exact fields
// is what makes the machine-readable output byte-stable.

#include <cstdio>
#include <string>

#include "treeheight/rational.hpp"

namespace treeheight {

inline std::string format_double(double v, int significant = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

// Round a double to 12 significant decimal digits (used before placing
// floats in JSON documents so emit -> parse -> emit is byte-identical).
inline double round_to_significant(double v, int significant = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return std::strtod(buf, nullptr);
}

}  // namespace treeheight
