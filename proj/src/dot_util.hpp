#pragma once

#include <string>
#include <string_view>

namespace indkernel::detail {

inline std::string dot_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace indkernel::detail
