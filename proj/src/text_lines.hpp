#pragma once

#include <cstddef>
#include <string_view>

namespace gesture::detail {

/// Calls fn(line_number, line) for each '\n'-separated line; strips a trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view bytes, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const std::size_t end = bytes.find('\n', pos);
        std::string_view line = bytes.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(++line_no, line);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
}

}  // namespace gesture::detail
