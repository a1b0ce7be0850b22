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

// Identify: exact reconstruction of x with about 3N/4 queries.
//
//   1. classical extension to a substring of length ceil(N/2)+1
//   2. MakeOnce, giving a substring that occurs exactly once
//   3. 1/4-Grover extension two symbols to the left per call, with a
//      classical checkpoint every ceil(sqrt N) calls to notice the left end
//   4. 1/4-Grover extension two symbols to the right until length N-1 or N

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "strrecon/baseline.hpp"
#include "strrecon/bitstring.hpp"
#include "strrecon/make_once.hpp"
#include "strrecon/oracle.hpp"

namespace strrecon {

struct IdentifyConfig {
    std::size_t checkpoint_interval = 0;  // 0: ceil(sqrt N)
    GroverFallback grover_fallback = GroverFallback::deterministic;
    std::uint64_t fallback_seed = 0;
    double bound_constant = 12.0;
    /// Below this length the classical baseline runs directly. 0 forces the
    /// full quantum pipeline for every N.
    std::size_t small_n_threshold = 16;
    bool keep_trace = true;
};

struct PhaseCounts {
    std::uint64_t step1 = 0;
    std::uint64_t step2 = 0;
    std::uint64_t step3 = 0;
    std::uint64_t step4 = 0;
};

/// Harness record of the left extension: the block that failed its
/// checkpoint (as successive working strings) and the chosen cut.
struct LeftExtensionTrace {
    std::vector<Bitstring> failed_block;
    std::optional<std::size_t> cut;
    std::size_t checkpoints = 0;
    std::size_t residual_queries = 0;
};

struct ReconstructionReport {
    Bitstring recovered;
    std::uint64_t classical_count = 0;
    std::uint64_t grover_count = 0;
    std::uint64_t total = 0;
    double bound_value = 0;
    bool within_bound = false;
    PhaseCounts phases;
    bool used_baseline = false;
    Bitstring step1_output;
    std::optional<MakeOnceResult> make_once;
    Bitstring step3_prefix;
    LeftExtensionTrace left;
};

/// ceil(3N/4) + c * ceil(sqrt N) * ceil(log2 N).
inline double identify_bound(std::size_t n, double bound_constant) {
    const double three_quarters = static_cast<double>((3 * n + 3) / 4);
    return three_quarters + bound_constant * static_cast<double>(ceil_sqrt(n)) * static_cast<double>(ceil_log2(n));
}

/// Leftward Grover phase. `unique` must occur exactly once in x; returns the prefix of x that
/// ends where that occurrence ends.
inline Bitstring extend_left_grover(const SubstringOracle& oracle, const Bitstring& unique, std::size_t interval,
                                    QueryLedger& ledger, LeftExtensionTrace* trace = nullptr) {
    const std::size_t n = oracle.length();
    if (unique.empty() || unique.size() > n) throw ContractViolation("extend_left_grover: bad input length");
    if (interval == 0) interval = ceil_sqrt(n);

    // Working string s is always `block_start` with 2 * steps symbols prepended.
    Bitstring s = unique;
    std::size_t block_start_len = s.size();
    std::size_t steps = 0;

    auto resolve_residual = [&](Bitstring start) {
        // start occurs once, at position 0 or 1.
        for (const char* lead : {"0", "1"}) {
            if (start.size() >= n) break;
            Bitstring probe = Bitstring(lead) + start;
            if (trace) ++trace->residual_queries;
            if (oracle.query(probe, ledger)) return probe;
        }
        return start;
    };

    for (;;) {
        const bool out_of_room = s.size() + 2 > n;
        if (steps == interval || (out_of_room && steps > 0)) {
            if (trace) ++trace->checkpoints;
            if (oracle.query(s, ledger)) {
                block_start_len = s.size();
                steps = 0;
            } else {
                // s_m = suffix of length block_start_len + 2m; s_0 holds, s_steps fails.
                if (trace) {
                    trace->failed_block.clear();
                    for (std::size_t m = 0; m <= steps; ++m) trace->failed_block.push_back(s.suffix(block_start_len + 2 * m));
                }
                std::size_t lo = 0;
                std::size_t hi = steps;
                while (hi - lo > 1) {
                    const std::size_t mid = lo + (hi - lo) / 2;
                    (oracle.query(s.suffix(block_start_len + 2 * mid), ledger) ? lo : hi) = mid;
                }
                if (trace) trace->cut = lo;
                return resolve_residual(s.suffix(block_start_len + 2 * lo));
            }
        }
        if (s.size() + 2 > n) return resolve_residual(s);

        const std::array<Bitstring, 4> candidates{Bitstring("00") + s, Bitstring("01") + s, Bitstring("10") + s,
                                                  Bitstring("11") + s};
        s = oracle.grover4(candidates, ledger).chosen;
        ++steps;
    }
}

/// Rightward Grover phase. `prefix` must be a prefix of x that occurs exactly once.
inline Bitstring extend_right_grover(const SubstringOracle& oracle, const Bitstring& prefix, QueryLedger& ledger) {
    const std::size_t n = oracle.length();
    if (prefix.size() > n) throw ContractViolation("extend_right_grover: prefix longer than N");
    Bitstring s = prefix;
    while (s.size() + 2 <= n) {
        const std::array<Bitstring, 4> candidates{s + Bitstring("00"), s + Bitstring("01"), s + Bitstring("10"),
                                                  s + Bitstring("11")};
        s = oracle.grover4(candidates, ledger).chosen;
    }
    if (s.size() + 1 == n) {
        Bitstring probe = s + Bitstring("0");
        s = oracle.query(probe, ledger) ? probe : s + Bitstring("1");
    }
    return s;
}

inline ReconstructionReport identify(const SubstringOracle& oracle, const IdentifyConfig& config, QueryLedger& ledger) {
    const std::size_t n = oracle.length();
    ReconstructionReport report;
    const std::uint64_t start = ledger.total();
    const std::uint64_t classical_start = ledger.classical_count();
    const std::uint64_t grover_start = ledger.grover_count();
    auto mark = start;
    auto phase = [&]() {
        const auto now = ledger.total();
        const auto spent = now - mark;
        mark = now;
        return spent;
    };

    if (n < config.small_n_threshold) {
        report.used_baseline = true;
        report.recovered = ss_reconstruct(oracle, ledger);
        report.phases.step1 = phase();
    } else {
        const std::size_t target = std::min(n, (n + 1) / 2 + 1);
        report.step1_output = ss_build(oracle, target, ledger);
        report.phases.step1 = phase();
        if (report.step1_output.size() == n) {
            report.recovered = report.step1_output;
        } else {
            MakeOnceOptions mo;
            mo.keep_trace = config.keep_trace;
            report.make_once = make_once(oracle, report.step1_output, ledger, mo);
            report.phases.step2 = phase();

            const std::size_t interval = config.checkpoint_interval == 0 ? ceil_sqrt(n) : config.checkpoint_interval;
            report.step3_prefix =
                extend_left_grover(oracle, report.make_once->z_out, interval, ledger, &report.left);
            report.phases.step3 = phase();

            report.recovered = extend_right_grover(oracle, report.step3_prefix, ledger);
            report.phases.step4 = phase();
        }
    }

    report.grover_count = ledger.grover_count() - grover_start;
    report.classical_count = ledger.classical_count() - classical_start;
    report.total = ledger.total() - start;
    report.bound_value = identify_bound(n, config.bound_constant);
    report.within_bound = static_cast<double>(report.total) <= report.bound_value;
    return report;
}

inline ReconstructionReport identify(const SubstringOracle& oracle, const IdentifyConfig& config = {}) {
    LedgerOptions options;
    options.fallback = config.grover_fallback;
    options.fallback_seed = config.fallback_seed;
    QueryLedger ledger(options);
    return identify(oracle, config, ledger);
}

}  // namespace strrecon
