#pragma once

#include <cstdio>
#include <string>

namespace tachyon {

/// Shortest decimal form with `digits` significant digits (the machine
/// output convention; 12 everywhere in the exported tables).
inline std::string format_sig(double value, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

}  // namespace tachyon
