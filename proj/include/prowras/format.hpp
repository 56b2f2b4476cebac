#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace prowras {

// shortest round-trip decimal form (CSV data files)
inline std::string fmt_shortest(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// %.{sig}g — metric/JSON display convention
inline std::string fmt_sig(double v, int sig = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

// fixed decimals — results-table cells
inline std::string fmt_fixed(double v, int prec = 3) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

}  // namespace prowras
