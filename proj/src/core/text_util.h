// Copyright 2026 The stabcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABCERT_SRC_CORE_TEXT_UTIL_H
#define STABCERT_SRC_CORE_TEXT_UTIL_H

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabcert::text {

inline std::string_view drop_comment(std::string_view line) {
    size_t hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::string_view strip(std::string_view s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return {};
    }
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

/// Whitespace-separated tokens.
inline std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t begin = s.find_first_not_of(" \t\r\n", pos);
        if (begin == std::string_view::npos) {
            break;
        }
        size_t end = s.find_first_of(" \t\r\n", begin);
        if (end == std::string_view::npos) {
            end = s.size();
        }
        out.push_back(s.substr(begin, end - begin));
        pos = end;
    }
    return out;
}

inline std::optional<size_t> parse_size(std::string_view s) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

inline std::optional<double> parse_double(std::string_view s) {
    // std::from_chars for double is available in libstdc++ 11.
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

/// Value of a `key=value` token, or nullopt if the key does not match.
inline std::optional<std::string_view> key_value(std::string_view token, std::string_view key) {
    if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
        return std::nullopt;
    }
    return token.substr(key.size() + 1);
}

}  // namespace stabcert::text

#endif
