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

// Trial generation, sweeps and exhaustive verification.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "strrecon/baseline.hpp"
#include "strrecon/bitstring.hpp"
#include "strrecon/identify.hpp"
#include "strrecon/make_once.hpp"
#include "strrecon/oracle.hpp"
#include "strrecon/strings.hpp"

namespace strrecon {

enum class Generator { uniform, adversarial_periodic, all_ones, user };

inline std::string_view generator_name(Generator g) {
    switch (g) {
        case Generator::uniform: return "uniform";
        case Generator::adversarial_periodic: return "adversarial-periodic";
        case Generator::all_ones: return "all-ones";
        case Generator::user: return "user";
    }
    return "?";
}

inline Generator parse_generator(std::string_view name) {
    for (auto g : {Generator::uniform, Generator::adversarial_periodic, Generator::all_ones, Generator::user}) {
        if (generator_name(g) == name) return g;
    }
    throw ContractViolation("unknown generator: " + std::string(name));
}

/// Per-trial engine, independent of scheduling.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t n, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
    return std::mt19937_64(seq);
}

inline Bitstring random_bits(std::mt19937_64& rng, std::size_t n) {
    std::string s(n, '0');
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = rng();
        s[i] = static_cast<char>('0' + ((word >> (63 - i % 64)) & 1));
    }
    return Bitstring(s);
}

/// Long runs of a short unit t broken by short bursts b, or a 1^m 0^k tail.
inline Bitstring periodic_rich(std::mt19937_64& rng, std::size_t n) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    if (pick(0, 7) == 0) {
        const std::size_t zeros = pick(0, n);
        return Bitstring::repeat(Bitstring("1"), n - zeros) + Bitstring::repeat(Bitstring("0"), zeros);
    }
    const std::size_t max_unit = std::max<std::size_t>(1, std::min<std::size_t>(8, ceil_sqrt(n)));
    const Bitstring t = random_bits(rng, pick(1, max_unit));
    std::string out;
    while (out.size() < n) {
        const std::size_t k = pick(1, std::max<std::size_t>(1, n / (2 * t.size())));
        for (std::size_t r = 0; r < k && out.size() < n; ++r) out += t.str();
        out += random_bits(rng, pick(1, 3)).str();
    }
    out.resize(n);
    return Bitstring(out);
}

inline Bitstring generate(Generator g, std::mt19937_64& rng, std::size_t n, const Bitstring* user = nullptr) {
    switch (g) {
        case Generator::uniform: return random_bits(rng, n);
        case Generator::adversarial_periodic: return periodic_rich(rng, n);
        case Generator::all_ones: return Bitstring::repeat(Bitstring("1"), n);
        case Generator::user:
            if (!user || user->size() != n) throw ContractViolation("user generator needs a string of length n");
            return *user;
    }
    throw ContractViolation("bad generator");
}

struct TrialRecord {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    Generator generator = Generator::uniform;
    Bitstring hidden;
    std::uint64_t classical = 0;
    std::uint64_t grover = 0;
    std::uint64_t total = 0;
    double bound = 0;
    std::uint64_t baseline_total = 0;
    std::uint64_t step2 = 0;
    bool recovered_ok = false;
    bool baseline_ok = false;
    bool grover_unique = true;  // no call saw two matching candidates
    bool once_ok = true;        // MakeOnce output occurs exactly once
    std::vector<std::string> trace_problems;
    std::string error;
    bool within_bound = false;

    /// Every Grover call had at most one solution, MakeOnce's output occurred
    /// once and the hidden string came back.
    bool unique_ok() const { return grover_unique && once_ok && recovered_ok && error.empty(); }
    bool trace_ok() const { return trace_problems.empty(); }
};

/// Runs identify and the classical baseline on `x` and re-checks every
/// per-run guarantee.
inline TrialRecord run_trial(const Bitstring& x, const IdentifyConfig& config, bool with_baseline = true) {
    TrialRecord r;
    r.n = x.size();
    r.hidden = x;
    const SubstringOracle oracle(x);
    try {
        const auto rep = identify(oracle, config);
        r.classical = rep.classical_count;
        r.grover = rep.grover_count;
        r.total = rep.total;
        r.bound = rep.bound_value;
        r.within_bound = rep.within_bound;
        r.step2 = rep.phases.step2;
        r.recovered_ok = rep.recovered == x;
        if (rep.make_once) {
            r.once_ok = count_occurrences(rep.make_once->z_out, x) == 1;
            r.trace_problems = audit_trace(rep.make_once->trace, x.size());
        }
    } catch (const InvariantViolation& e) {
        r.error = e.what();
        if (std::string_view(e.what()).find("grover4") != std::string_view::npos) r.grover_unique = false;
    }
    if (with_baseline) {
        QueryLedger ledger;
        r.baseline_ok = ss_reconstruct(oracle, ledger) == x;
        r.baseline_total = ledger.total();
    }
    return r;
}

struct SweepConfig {
    std::vector<std::size_t> ns;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    Generator generator = Generator::uniform;
    std::optional<Bitstring> user_string;
    IdentifyConfig identify;
    bool with_baseline = true;
    unsigned threads = 1;
};

/// Rows ordered by (position of n in config.ns, trial) whatever the thread count.
inline std::vector<TrialRecord> run_sweep(const SweepConfig& config) {
    if (config.trials < 1) throw ContractViolation("sweep: trials must be at least 1");
    if (config.ns.empty()) throw ContractViolation("sweep: no lengths given");
    for (auto n : config.ns) {
        if (n < 1) throw ContractViolation("sweep: lengths must be positive");
    }
    const std::size_t total = config.ns.size() * config.trials;
    std::vector<TrialRecord> rows(total);
    auto work = [&](std::size_t k) {
        const std::size_t n = config.ns[k / config.trials];
        const std::size_t trial = k % config.trials;
        auto rng = trial_rng(config.seed, n, trial);
        const Bitstring x = generate(config.generator, rng, n, config.user_string ? &*config.user_string : nullptr);
        TrialRecord r = run_trial(x, config.identify, config.with_baseline);
        r.seed = config.seed;
        r.trial = trial;
        r.generator = config.generator;
        rows[k] = std::move(r);
    };
    const unsigned threads = std::max(1u, config.threads);
    if (threads == 1) {
        for (std::size_t k = 0; k < total; ++k) work(k);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t k = t; k < total; k += threads) work(k);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

inline std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline constexpr std::string_view kCsvHeader =
    "n,seed,trial,generator,classical,grover,total,bound,baseline_total,unique_ok,within_bound";

inline void write_csv(std::ostream& os, const std::vector<TrialRecord>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << r.seed << ',' << r.trial << ',' << generator_name(r.generator) << ',' << r.classical << ','
           << r.grover << ',' << r.total << ',' << format_double(r.bound) << ',' << r.baseline_total << ','
           << (r.unique_ok() ? "true" : "false") << ',' << (r.within_bound ? "true" : "false") << '\n';
    }
}

struct VerifyLine {
    std::size_t n = 0;
    std::size_t strings = 0;
    std::size_t failures = 0;
    std::uint64_t max_identify = 0;
    std::uint64_t max_forced = 0;  // full pipeline, no small-N fallback
    std::uint64_t max_baseline = 0;
    std::vector<std::string> examples;  // first few failing inputs
};

/// Exhaustive check over all 2^n strings for n = 1..max_n.
inline std::vector<VerifyLine> verify_all(std::size_t max_n, const IdentifyConfig& config = {}) {
    if (max_n > 16) throw ContractViolation("verify: max_n above 16");
    IdentifyConfig forced = config;
    forced.small_n_threshold = 0;
    std::vector<VerifyLine> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        VerifyLine line;
        line.n = n;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Bitstring x = Bitstring::from_uint(v, n);
            const auto a = run_trial(x, config, true);
            const auto b = run_trial(x, forced, false);
            ++line.strings;
            line.max_identify = std::max(line.max_identify, a.total);
            line.max_forced = std::max(line.max_forced, b.total);
            line.max_baseline = std::max(line.max_baseline, a.baseline_total);
            if (!a.unique_ok() || !b.unique_ok() || !a.baseline_ok) {
                ++line.failures;
                if (line.examples.size() < 4) {
                    line.examples.push_back(x.str() + (a.error.empty() ? b.error : a.error));
                }
            }
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace strrecon
