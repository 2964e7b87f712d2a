#pragma once

#include <cstdio>
#include <string>

namespace times23 {

// Shortest-faithful decimal for CSV cells; -0 normalized so byte-level
// comparison of emitted files is meaningful.
inline std::string csv_double(double v, int precision = 17) {
    if (v == 0.0) v = 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

} // namespace times23
