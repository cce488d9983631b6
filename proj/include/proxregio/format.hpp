#pragma once

#include <cstdio>
#include <string>

namespace proxregio {

// Shortest stable decimal rendering used by every report and renderer so
// identical inputs always produce byte-identical output.
inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    // Normalize the rare negative zero so numerically equal values agree.
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

} // namespace proxregio
