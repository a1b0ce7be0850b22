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

// The substring oracle (chi) and anchored substring oracle (tau), the query
// ledger that charges them, and the simulated 1/4-Grover step.
//
// Algorithms only ever hold a `const SubstringOracle&` and see `length()`,
// `query()` and `grover4()`. The hidden string is reachable only through
// `harness::Access`, which test and verification code uses.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "strrecon/bitstring.hpp"

namespace strrecon {

namespace harness {
struct Access;
}

/// What grover4 hands back when none of the four candidates is a substring.
enum class GroverFallback {
    deterministic,  ///< lexicographically first candidate
    seeded,         ///< uniformly random candidate from the ledger's RNG
};

struct LedgerOptions {
    bool record_transcript = false;
    GroverFallback fallback = GroverFallback::deterministic;
    std::uint64_t fallback_seed = 0;
};

struct TranscriptEntry {
    enum class Kind { classical, anchored, grover };

    Kind kind = Kind::classical;
    std::vector<Bitstring> payload;
    std::size_t index = 0;  // anchored queries only
    Bitstring chosen;       // grover only
    bool answer = false;    // classical and anchored only

    std::string to_line() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::classical:
                os << "C " << payload.at(0) << " -> " << (answer ? 1 : 0);
                break;
            case Kind::anchored:
                os << "A " << index << ' ' << payload.at(0) << " -> " << (answer ? 1 : 0);
                break;
            case Kind::grover:
                os << "G ";
                for (std::size_t k = 0; k < payload.size(); ++k) os << (k ? "," : "") << payload[k];
                os << " -> " << chosen;
                break;
        }
        return os.str();
    }
};

/// Per-run query accounting. Counters only ever grow.
class QueryLedger {
public:
    QueryLedger() : QueryLedger(LedgerOptions{}) {}
    explicit QueryLedger(LedgerOptions options) : options_(options), rng_(options.fallback_seed) {}

    std::uint64_t classical_count() const noexcept { return classical_; }
    std::uint64_t grover_count() const noexcept { return grover_; }
    std::uint64_t total() const noexcept { return classical_ + grover_; }

    /// Grover calls that had no solution among the candidates. Harness statistic;
    /// algorithms must not branch on it.
    std::uint64_t zero_solution_calls() const noexcept { return zero_solution_; }

    const LedgerOptions& options() const noexcept { return options_; }
    const std::vector<TranscriptEntry>& transcript() const noexcept { return transcript_; }

    void write_transcript(std::ostream& os) const {
        for (const auto& e : transcript_) os << e.to_line() << '\n';
    }

private:
    friend class SubstringOracle;
    friend class AnchoredOracle;

    void record(TranscriptEntry entry) {
        if (options_.record_transcript) transcript_.push_back(std::move(entry));
    }

    LedgerOptions options_;
    std::mt19937_64 rng_;
    std::uint64_t classical_ = 0;
    std::uint64_t grover_ = 0;
    std::uint64_t zero_solution_ = 0;
    std::vector<TranscriptEntry> transcript_;
};

/// Result of one simulated 1/4-Grover call. Whether a solution existed is
/// recorded for the harness only.
class GroverOutcome {
public:
    Bitstring chosen;

private:
    friend class SubstringOracle;
    friend struct harness::Access;
    bool solution_existed_ = false;
};

namespace detail {

/// Substring membership over a fixed text using 64-bit packed windows:
/// window(i) holds text[i..i+64) MSB-first, so most candidate positions are
/// rejected by a single masked compare.
class PackedMatcher {
public:
    PackedMatcher() = default;
    explicit PackedMatcher(std::string_view text) : windows_(text.size()) {
        std::uint64_t w = 0;
        for (std::size_t k = 0; k < 64; ++k) w = (w << 1) | (k < text.size() && text[k] == '1');
        for (std::size_t i = 0; i < text.size(); ++i) {
            windows_[i] = w;
            const std::size_t next = i + 64;
            w = (w << 1) | (next < text.size() && text[next] == '1');
        }
    }

    bool contains(std::string_view text, std::string_view pattern) const {
        const std::size_t n = text.size();
        const std::size_t m = pattern.size();
        if (m == 0 || m > n) return false;
        const std::size_t head = std::min<std::size_t>(m, 64);
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < head; ++k) key = (key << 1) | (pattern[k] == '1');
        key <<= (64 - head);
        const std::uint64_t mask = head == 64 ? ~std::uint64_t{0} : ~(~std::uint64_t{0} >> head);
        const std::size_t last = n - m;
        for (std::size_t i = 0; i <= last; ++i) {
            if ((windows_[i] & mask) != key) continue;
            if (m <= 64 || std::memcmp(text.data() + i + 64, pattern.data() + 64, m - 64) == 0) {
                return true;
            }
        }
        return false;
    }

private:
    std::vector<std::uint64_t> windows_;
};

}  // namespace detail

/// chi(x; s): is s a substring of the hidden string x? The length N is public.
class SubstringOracle {
public:
    explicit SubstringOracle(Bitstring hidden) : hidden_(std::move(hidden)), matcher_(hidden_.view()) {
        if (hidden_.empty()) throw ContractViolation("SubstringOracle: hidden string must be nonempty");
    }

    std::size_t length() const noexcept { return hidden_.size(); }

    /// One classical query. Queries must have 1 <= |s| <= N.
    bool query(const Bitstring& s, QueryLedger& ledger) const {
        if (s.empty() || s.size() > length()) {
            throw ContractViolation("query length " + std::to_string(s.size()) + " outside [1, " +
                                    std::to_string(length()) + "]");
        }
        const bool answer = contains(s);
        ++ledger.classical_;
        ledger.record({TranscriptEntry::Kind::classical, {s}, 0, {}, answer});
        return answer;
    }

    /// One 1/4-Grover call over four distinct candidates. A unique solution is
    /// returned as is; with no solution the ledger's fallback rule picks one.
    /// Two or more solutions break the promise the search relies on and raise
    /// InvariantViolation. Candidates longer than N simply cannot match.
    GroverOutcome grover4(const std::array<Bitstring, 4>& candidates, QueryLedger& ledger) const {
        for (std::size_t p = 0; p < 4; ++p) {
            if (candidates[p].empty()) throw ContractViolation("grover4: empty candidate");
            for (std::size_t q = p + 1; q < 4; ++q) {
                if (candidates[p] == candidates[q]) throw ContractViolation("grover4: candidates not distinct");
            }
        }
        std::size_t matches = 0;
        std::size_t found = 0;
        for (std::size_t p = 0; p < 4; ++p) {
            if (contains(candidates[p])) {
                ++matches;
                found = p;
            }
        }
        ++ledger.grover_;
        GroverOutcome out;
        if (matches >= 2) {
            std::string msg = "grover4: " + std::to_string(matches) + " candidates are substrings of the hidden string:";
            for (const auto& c : candidates) msg += ' ' + c.str();
            throw InvariantViolation(msg);
        }
        if (matches == 1) {
            out.chosen = candidates[found];
            out.solution_existed_ = true;
        } else {
            ++ledger.zero_solution_;
            if (ledger.options_.fallback == GroverFallback::seeded) {
                out.chosen = candidates[ledger.rng_() % 4];
            } else {
                out.chosen = *std::min_element(candidates.begin(), candidates.end());
            }
        }
        ledger.record({TranscriptEntry::Kind::grover, {candidates.begin(), candidates.end()}, 0, out.chosen, false});
        return out;
    }

private:
    friend struct harness::Access;

    bool contains(const Bitstring& s) const { return matcher_.contains(hidden_.view(), s.view()); }

    Bitstring hidden_;
    detail::PackedMatcher matcher_;
};

/// tau(X; (i, s)): does X read s starting at index i?
class AnchoredOracle {
public:
    explicit AnchoredOracle(Bitstring hidden) : hidden_(std::move(hidden)) {
        if (hidden_.empty()) throw ContractViolation("AnchoredOracle: hidden string must be nonempty");
    }

    std::size_t length() const noexcept { return hidden_.size(); }

    bool query(std::size_t index, const Bitstring& s, QueryLedger& ledger) const {
        if (s.empty() || index > length() || s.size() > length() - index) {
            throw ContractViolation("anchored query (" + std::to_string(index) + ", length " +
                                    std::to_string(s.size()) + ") out of range");
        }
        const bool answer = hidden_.view().substr(index, s.size()) == s.view();
        ++ledger.classical_;
        ledger.record({TranscriptEntry::Kind::anchored, {s}, index, {}, answer});
        return answer;
    }

private:
    friend struct harness::Access;
    Bitstring hidden_;
};

namespace harness {

/// Verification-side view of oracle internals. Never used on algorithm paths.
struct Access {
    static const Bitstring& hidden(const SubstringOracle& o) noexcept { return o.hidden_; }
    static const Bitstring& hidden(const AnchoredOracle& o) noexcept { return o.hidden_; }
    static bool solution_existed(const GroverOutcome& g) noexcept { return g.solution_existed_; }
};

}  // namespace harness

}  // namespace strrecon
