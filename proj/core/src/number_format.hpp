#pragma once

#include <charconv>
#include <string>

namespace bst::detail {

// Shortest decimal form that round-trips; integral values print without a dot.
inline std::string format_number(double value) {
    if (value == static_cast<long long>(value) && value > -1e15 && value < 1e15) {
        return std::to_string(static_cast<long long>(value));
    }
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace bst::detail
