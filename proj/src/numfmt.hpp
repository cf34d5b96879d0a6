// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BCCE_SRC_NUMFMT_HPP
#define BCCE_SRC_NUMFMT_HPP

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include "bcce/error.hpp"

namespace bcce::detail {

// 17 significant digits: enough to round-trip any double.
inline std::string format_g17(double value) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(n));
}

inline double parse_double(std::string_view text, std::string_view what) {
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + std::string(what) + " from '" + s + "'");
    }
    if (used != s.size()) {
        throw ConfigError("trailing characters in " + std::string(what) + ": '" + s + "'");
    }
    return value;
}

template <typename Int>
Int parse_integer(std::string_view text, std::string_view what) {
    Int value{};
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace bcce::detail

#endif
