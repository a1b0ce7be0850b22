// Copyright 2026 The strrecon Authors
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

#pragma once

// Oracle-free primitives: occurrence search, borders (presuffixes) and
// periodic strings. All functions are pure.

#include <cstddef>
#include <vector>

#include "strrecon/bitstring.hpp"

namespace strrecon {

namespace detail {

inline void require_nonempty(const Bitstring& s, const char* what) {
    if (s.empty()) throw ContractViolation(std::string(what) + ": empty pattern");
}

}  // namespace detail

inline bool is_substring(const Bitstring& pattern, const Bitstring& text) {
    detail::require_nonempty(pattern, "is_substring");
    return text.view().find(pattern.view()) != std::string_view::npos;
}

/// Number of start positions of `pattern` in `text`, overlaps included.
inline std::size_t count_occurrences(const Bitstring& pattern, const Bitstring& text) {
    detail::require_nonempty(pattern, "count_occurrences");
    std::size_t count = 0;
    for (auto pos = text.view().find(pattern.view()); pos != std::string_view::npos;
         pos = text.view().find(pattern.view(), pos + 1)) {
        ++count;
    }
    return count;
}

/// Classic failure function: border[k] is the length of the longest proper
/// border of the length-(k+1) prefix of `s`.
inline std::vector<std::size_t> border_array(const Bitstring& s) {
    std::vector<std::size_t> border(s.size(), 0);
    std::size_t k = 0;
    for (std::size_t q = 1; q < s.size(); ++q) {
        while (k > 0 && s[q] != s[k]) k = border[k - 1];
        if (s[q] == s[k]) ++k;
        border[q] = k;
    }
    return border;
}

/// All m in [1, |z|] whose length-m prefix equals the length-m suffix,
/// ascending. |z| itself is always included.
inline std::vector<std::size_t> presuffix_lengths(const Bitstring& z) {
    detail::require_nonempty(z, "presuffix_lengths");
    const auto border = border_array(z);
    std::vector<std::size_t> lengths{z.size()};
    for (std::size_t m = border.back(); m > 0; m = border[m - 1]) lengths.push_back(m);
    return {lengths.rbegin(), lengths.rend()};
}

/// Smallest period of `a`.
inline std::size_t period_length(const Bitstring& a) {
    detail::require_nonempty(a, "period_length");
    return a.size() - border_array(a).back();
}

/// Shortest t with a[i] == t[i mod |t|] for all i.
inline Bitstring periodic_string(const Bitstring& a) { return a.prefix(period_length(a)); }

}  // namespace strrecon
