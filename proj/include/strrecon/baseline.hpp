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

// Classical one-symbol-per-query extension (Skiena and Sundaram).
//
// Rightward phase: holding a working string s, ask for s1. A yes confirms
// s1; a no is taken to mean s0 without spending a query. Because any yes
// confirms everything before it, the unconfirmed tail is always a run of
// assumed zeros. Every `verify_interval` assumed zeros the working string is
// queried; a failure means the right end of x lies inside the run, and a
// binary search over the run length finds the longest true extension. That
// string is then a suffix of x occurring exactly once.
//
// Leftward phase: s is the unique suffix occurrence, so "no" on 1s means 0s
// whenever |s| < N. N is public, so no leftward verification is needed.

#include <cstddef>
#include <optional>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/oracle.hpp"

namespace strrecon {

enum class Direction { right, left };

struct ExtensionState {
    Bitstring confirmed;  // last string known to be a substring
    Bitstring assumed;    // confirmed + assumed zeros (rightward)
    Direction direction = Direction::right;
    std::size_t steps_since_verify = 0;
    bool right_end_hit = false;
};

/// Harness-facing record of what the extension engine verified and searched.
struct ExtensionTrace {
    struct Verification {
        Bitstring candidate;
        bool ok = false;
    };
    /// Binary search over `base + 0^m`, m in [0, run_length]; m = run_length is
    /// the failed verification.
    struct RunSearch {
        Bitstring base;
        std::size_t run_length = 0;
        std::vector<std::pair<std::size_t, bool>> probes;
        std::size_t cut = 0;
    };

    std::vector<Verification> verifications;
    std::vector<RunSearch> searches;
    bool right_end_hit = false;
};

namespace detail {

class ExtensionEngine {
public:
    ExtensionEngine(const SubstringOracle& oracle, QueryLedger& ledger, std::size_t interval, ExtensionTrace* trace)
        : oracle_(oracle), ledger_(ledger), interval_(interval), trace_(trace) {}

    Bitstring run(std::size_t target_len) {
        const Bitstring zero("0");
        state_.assumed = oracle_.query(zero, ledger_) ? zero : Bitstring("1");
        state_.confirmed = state_.assumed;

        while (state_.direction == Direction::right) {
            if (state_.assumed.size() >= target_len) {
                if (state_.steps_since_verify == 0 || verify()) return state_.assumed;
                continue;
            }
            if (state_.steps_since_verify == interval_) {
                verify();
                continue;
            }
            Bitstring probe = state_.assumed;
            probe.push_back('1');
            if (oracle_.query(probe, ledger_)) {
                state_.assumed = std::move(probe);
                state_.confirmed = state_.assumed;
                state_.steps_since_verify = 0;
            } else {
                state_.assumed.push_back('0');
                ++state_.steps_since_verify;
            }
        }

        const Bitstring one("1");
        while (state_.assumed.size() < target_len) {
            Bitstring probe = one + state_.assumed;
            if (oracle_.query(probe, ledger_)) {
                state_.assumed = std::move(probe);
            } else {
                state_.assumed = Bitstring("0") + state_.assumed;
            }
            state_.confirmed = state_.assumed;
        }
        return state_.assumed;
    }

private:
    // Returns true on success. On failure locates the right end and switches
    // direction.
    bool verify() {
        const bool ok = oracle_.query(state_.assumed, ledger_);
        if (trace_) trace_->verifications.push_back({state_.assumed, ok});
        if (ok) {
            state_.confirmed = state_.assumed;
            state_.steps_since_verify = 0;
            return true;
        }
        locate_right_end();
        return false;
    }

    void locate_right_end() {
        const Bitstring base = state_.confirmed;
        const std::size_t run = state_.steps_since_verify;
        ExtensionTrace::RunSearch search{base, run, {}, 0};
        // base + 0^lo is a substring, base + 0^hi is not.
        std::size_t lo = 0;
        std::size_t hi = run;
        while (hi - lo > 1) {
            const std::size_t mid = lo + (hi - lo) / 2;
            const bool ok = oracle_.query(base + Bitstring::repeat(Bitstring("0"), mid), ledger_);
            search.probes.emplace_back(mid, ok);
            (ok ? lo : hi) = mid;
        }
        search.cut = lo;
        if (trace_) {
            trace_->searches.push_back(std::move(search));
            trace_->right_end_hit = true;
        }
        state_.assumed = base + Bitstring::repeat(Bitstring("0"), lo);
        state_.confirmed = state_.assumed;
        state_.steps_since_verify = 0;
        state_.right_end_hit = true;
        state_.direction = Direction::left;
    }

    const SubstringOracle& oracle_;
    QueryLedger& ledger_;
    std::size_t interval_;
    ExtensionTrace* trace_;
    ExtensionState state_;
};

}  // namespace detail

/// Builds a verified substring of length `target_len` (1 <= target_len <= N).
/// `verify_interval` of 0 means the default ceil(sqrt(N)).
inline Bitstring ss_build(const SubstringOracle& oracle, std::size_t target_len, QueryLedger& ledger,
                          std::size_t verify_interval = 0, ExtensionTrace* trace = nullptr) {
    const std::size_t n = oracle.length();
    if (target_len < 1 || target_len > n) {
        throw ContractViolation("ss_build: target length " + std::to_string(target_len) + " outside [1, " +
                                std::to_string(n) + "]");
    }
    const std::size_t interval = verify_interval == 0 ? ceil_sqrt(n) : verify_interval;
    return detail::ExtensionEngine(oracle, ledger, interval, trace).run(target_len);
}

/// Full classical reconstruction: N + O(sqrt N) queries.
inline Bitstring ss_reconstruct(const SubstringOracle& oracle, QueryLedger& ledger, ExtensionTrace* trace = nullptr) {
    return ss_build(oracle, oracle.length(), ledger, 0, trace);
}

/// Budget the engine is held to when building ceil(N/2)+1 symbols.
inline std::size_t ss_build_budget(std::size_t n) {
    return (n + 1) / 2 + 1 + ceil_sqrt(n) + 2 * ceil_log2(n) + 3;
}

}  // namespace strrecon
