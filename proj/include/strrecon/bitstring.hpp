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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strrecon {

/// A caller broke an operation's precondition (bad length, bad index, ...).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant of an algorithm failed. Never expected on a
/// correct build; carries enough context to reproduce.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Finite string over {0,1}, stored as ASCII '0'/'1' so it can be printed,
/// parsed and compared without conversion.
class Bitstring {
public:
    Bitstring() = default;

    explicit Bitstring(std::string_view bits) : bits_(bits) {
        if (!is_valid(bits)) {
            throw ContractViolation("not a binary string: '" + std::string(bits) + "'");
        }
    }

    static bool is_valid(std::string_view bits) noexcept {
        for (char c : bits) {
            if (c != '0' && c != '1') return false;
        }
        return true;
    }

    /// `count` copies of `unit` concatenated.
    static Bitstring repeat(const Bitstring& unit, std::size_t count) {
        Bitstring out;
        out.bits_.reserve(unit.size() * count);
        for (std::size_t k = 0; k < count; ++k) out.bits_ += unit.bits_;
        return out;
    }

    /// Fixed-width big-endian binary representation of `value`.
    static Bitstring from_uint(std::uint64_t value, std::size_t width) {
        Bitstring out;
        out.bits_.assign(width, '0');
        for (std::size_t k = 0; k < width && k < 64; ++k) {
            if ((value >> k) & 1u) out.bits_[width - 1 - k] = '1';
        }
        return out;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    char operator[](std::size_t pos) const { return bits_[pos]; }
    bool bit(std::size_t pos) const { return bits_[pos] == '1'; }

    std::string_view view() const noexcept { return bits_; }
    const std::string& str() const noexcept { return bits_; }

    Bitstring substr(std::size_t pos, std::size_t len) const {
        if (pos > bits_.size() || len > bits_.size() - pos) {
            throw ContractViolation("Bitstring::substr(" + std::to_string(pos) + ", " + std::to_string(len) +
                                    ") out of range for length " + std::to_string(bits_.size()));
        }
        Bitstring out;
        out.bits_ = bits_.substr(pos, len);
        return out;
    }
    Bitstring prefix(std::size_t len) const { return substr(0, len); }
    Bitstring suffix(std::size_t len) const { return substr(bits_.size() - len, len); }

    bool starts_with(const Bitstring& p) const noexcept { return view().starts_with(p.view()); }
    bool ends_with(const Bitstring& s) const noexcept { return view().ends_with(s.view()); }

    Bitstring reversed() const {
        Bitstring out;
        out.bits_.assign(bits_.rbegin(), bits_.rend());
        return out;
    }

    Bitstring& operator+=(const Bitstring& rhs) {
        bits_ += rhs.bits_;
        return *this;
    }
    Bitstring& push_back(char symbol) {
        if (symbol != '0' && symbol != '1') throw ContractViolation("not a binary symbol");
        bits_.push_back(symbol);
        return *this;
    }

    friend Bitstring operator+(Bitstring lhs, const Bitstring& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend bool operator==(const Bitstring&, const Bitstring&) = default;
    friend std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
        return a.bits_ <=> b.bits_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Bitstring& b) { return os << b.bits_; }

private:
    std::string bits_;
};

inline namespace literals {
inline Bitstring operator""_bits(const char* s, std::size_t n) { return Bitstring(std::string_view(s, n)); }
}  // namespace literals

// Small integer helpers shared by the algorithms and their bound checks.

inline std::size_t ceil_log2(std::size_t n) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < n) ++r;
    return r;
}

inline std::size_t ceil_sqrt(std::size_t n) {
    std::size_t r = 0;
    while (r * r < n) ++r;
    return r;
}

}  // namespace strrecon

template <>
struct std::hash<strrecon::Bitstring> {
    std::size_t operator()(const strrecon::Bitstring& b) const noexcept {
        return std::hash<std::string_view>{}(b.view());
    }
};
