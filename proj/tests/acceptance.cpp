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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "strrecon/adversary.hpp"
#include "strrecon/experiment.hpp"
#include "strrecon/reduction.hpp"

namespace {

using namespace strrecon;

constexpr std::uint64_t kSeed = 20261015;
constexpr std::size_t kUniformTrials = 1000;
constexpr std::size_t kPeriodicTrials = 200;
const std::vector<std::size_t> kLengths = {64, 256, 1024, 4096};

struct Tally {
    std::size_t runs = 0;
    std::size_t not_recovered = 0;
    std::size_t grover_multi = 0;
    std::size_t not_once = 0;
    std::size_t make_once_runs = 0;
    std::size_t other_errors = 0;
    std::map<std::string, std::size_t> property_failures;
    std::size_t traces_with_failures = 0;
    std::string first_property_failure;

    void add(const TrialRecord& r) {
        ++runs;
        if (!r.recovered_ok) ++not_recovered;
        if (!r.grover_unique) ++grover_multi;
        else if (!r.error.empty()) ++other_errors;
        if (!r.once_ok) ++not_once;
        if (!r.trace_problems.empty()) {
            ++traces_with_failures;
            if (first_property_failure.empty()) first_property_failure = r.hidden.str() + " " + r.trace_problems.front();
        }
        for (const auto& p : r.trace_problems) ++property_failures[property_tag(p)];
    }
};

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::cout << "criterion " << id << ' ' << (pass ? "PASS" : "FAIL") << ": " << detail << std::endl;
    if (!pass) ++failures;
}

std::string breakdown(const std::map<std::string, std::size_t>& m) {
    if (m.empty()) return "none";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : m) {
        os << (first ? "" : " ") << k << '=' << v;
        first = false;
    }
    return os.str();
}

}  // namespace

int main() {
    const auto started = std::chrono::steady_clock::now();

    // Criterion 1 runs: every string up to length 14, default and full pipeline.
    Tally exhaustive;
    std::size_t baseline_wrong = 0;
    std::uint64_t baseline_worst_excess = 0;
    IdentifyConfig defaults;
    IdentifyConfig full = defaults;
    full.small_n_threshold = 0;
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const auto x = Bitstring::from_uint(v, n);
            const auto a = run_trial(x, defaults, true);
            const auto b = run_trial(x, full, false);
            exhaustive.add(a);
            exhaustive.add(b);
            if (!a.baseline_ok) ++baseline_wrong;
            if (a.baseline_total > n) baseline_worst_excess = std::max<std::uint64_t>(baseline_worst_excess, a.baseline_total - n);
        }
    }
    report(1, exhaustive.not_recovered == 0 && exhaustive.grover_multi == 0 && exhaustive.other_errors == 0,
           std::to_string(exhaustive.runs) + " runs (n = 1..14, default and full pipeline), " +
               std::to_string(exhaustive.not_recovered) + " not recovered");

    // Random trials at desk-scale lengths.
    Tally random;
    std::size_t step2_over = 0;
    std::size_t bound_over = 0;
    std::size_t baseline_over = 0;
    std::size_t baseline_random_wrong = 0;
    std::uint64_t step2_worst = 0;
    double mean_4096 = 0;
    std::ostringstream bound_detail;
    for (std::size_t n : kLengths) {
        for (auto gen : {Generator::uniform, Generator::adversarial_periodic}) {
            SweepConfig c;
            c.ns = {n};
            c.trials = gen == Generator::uniform ? kUniformTrials : kPeriodicTrials;
            c.seed = kSeed;
            c.generator = gen;
            c.with_baseline = n >= 256;
            const auto rows = run_sweep(c);
            const std::uint64_t step2_cap = 12 * ceil_sqrt(n) * ceil_log2(n);
            const std::uint64_t baseline_cap = n + 8 * ceil_sqrt(n);
            std::uint64_t worst_total = 0;
            double sum = 0;
            for (const auto& r : rows) {
                random.add(r);
                step2_worst = std::max(step2_worst, r.step2);
                if (r.step2 > step2_cap) ++step2_over;
                if (!r.within_bound) ++bound_over;
                if (c.with_baseline && r.baseline_total > baseline_cap) ++baseline_over;
                if (c.with_baseline && !r.baseline_ok) ++baseline_random_wrong;
                worst_total = std::max(worst_total, r.total);
                sum += static_cast<double>(r.total);
            }
            const double mean = sum / static_cast<double>(rows.size());
            if (n == 4096 && gen == Generator::uniform) mean_4096 = mean;
            bound_detail << ' ' << n << '/' << generator_name(gen) << " worst=" << worst_total
                         << " mean=" << format_double(static_cast<double>(static_cast<std::int64_t>(mean * 10)) / 10)
                         << " bound=" << format_double(identify_bound(n, 12));
        }
    }

    const std::size_t grover_runs = exhaustive.runs + random.runs;
    report(2, exhaustive.grover_multi + random.grover_multi == 0,
           std::to_string(grover_runs) + " runs, " + std::to_string(exhaustive.grover_multi + random.grover_multi) +
               " grover4 calls with two or more solutions; random recovered failures=" +
               std::to_string(random.not_recovered));
    report(3, exhaustive.not_once + random.not_once == 0,
           "MakeOnce output occurring more than once: " + std::to_string(exhaustive.not_once + random.not_once) +
               " of " + std::to_string(grover_runs) + " runs");
    report(4, step2_over == 0,
           "step-2 queries above 12 ceil(sqrt N) ceil(log2 N): " + std::to_string(step2_over) +
               " runs; largest step-2 count " + std::to_string(step2_worst));
    report(5, bound_over == 0 && mean_4096 < 4096.0,
           "runs over bound: " + std::to_string(bound_over) + "; mean total at N=4096 uniform = " +
               format_double(mean_4096) + ";" + bound_detail.str());
    report(6, baseline_wrong == 0 && baseline_random_wrong == 0 && baseline_over == 0,
           "baseline inexact n<=14: " + std::to_string(baseline_wrong) + ", worst excess over n there " +
               std::to_string(baseline_worst_excess) + "; runs above N + 8 ceil(sqrt N) at 256/1024/4096: " +
               std::to_string(baseline_over));

    std::map<std::string, std::size_t> props = exhaustive.property_failures;
    for (const auto& [k, v] : random.property_failures) props[k] += v;
    const std::size_t bad_traces = exhaustive.traces_with_failures + random.traces_with_failures;
    report(7, bad_traces == 0,
           std::to_string(bad_traces) + " traces with property failures (" + breakdown(props) + ")" +
               (bad_traces ? "; first: " + (exhaustive.first_property_failure.empty() ? random.first_property_failure
                                                                                        : exhaustive.first_property_failure)
                           : std::string()));

    // Criterion 8: embedding equivalence.
    std::size_t guarded_mismatch = 0;
    std::size_t guarded_small = 0;
    std::size_t literal_mismatch = 0;
    std::string literal_example;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const auto x = Bitstring::from_uint(v, n);
            const auto g = verify_equivalence(x);
            guarded_mismatch += g.mismatches.size();
            if (n <= 4) guarded_small += g.mismatches.size();
            if (n <= 4) {
                const auto l = verify_equivalence(x, IndexEncoding::literal);
                literal_mismatch += l.mismatches.size();
                if (literal_example.empty() && !l.ok()) {
                    std::ostringstream os;
                    os << "X=" << x << " (" << l.mismatches[0].index << "," << l.mismatches[0].z << ")";
                    literal_example = os.str();
                }
            }
        }
    }
    report(8, guarded_mismatch == 0 && guarded_small == 0,
           "guarded indices: " + std::to_string(guarded_mismatch) + " mismatches for |X| = 2..8; literal indices: " +
               std::to_string(literal_mismatch) + " mismatches for |X| = 2..4, e.g. " + literal_example);

    // Criterion 9: adversary evaluator.
    {
        const auto four = b1_scheme(4);
        const auto scheme_problems = check_scheme(four);
        const auto bound4 = evaluate_bound(four);

        bool mu_ok = true;
        for (std::size_t n : {4u, 16u}) {
            const auto inst = n == 4 ? four : b1_scheme(n);
            const auto view = BlockView::for_length(n);
            BoundEvaluator<Bitstring, AnchoredQuery> eval(inst);
            const Weight expected(static_cast<std::int64_t>(n * (view.alphabet - 1) / view.block_len));
            for (std::size_t x = 0; x < inst.instances.size(); ++x) mu_ok = mu_ok && eval.mu(x) == expected;
        }
        const auto a16 = audit_b1(16, sample_instances(16, 16, kSeed));
        const auto a6 = audit_b1(6, b1_scheme(6).instances);
        const bool resolved = a6.closed_form_checked > 0 && a6.closed_form_m_matches == a6.closed_form_checked &&
                              a6.closed_form_n_matches < a6.closed_form_checked;
        std::ostringstream os;
        os << "n=4 scheme problems=" << scheme_problems.size() << " bound=" << format_double(bound4.value.value_or(0))
           << "; mu closed form at 4 and 16: " << (mu_ok ? "holds" : "fails") << "; n=16 sample of 16 (seed " << kSeed
           << "): " << a16.triples << " triples, max nu product " << a16.max_product << " < " << 3 * 16 * 16
           << ", violations " << a16.product_violations << "; n=6 closed form: M/2^b term matches "
           << a6.closed_form_m_matches << "/" << a6.closed_form_checked << ", n/2^b term matches "
           << a6.closed_form_n_matches;
        report(9, scheme_problems.empty() && bound4.violations.empty() && mu_ok && a16.scheme_violations.empty() &&
                      a16.product_violations == 0 && a16.nu_x_violations == 0 && resolved,
               os.str());
    }

    // Criterion 10: determinism.
    {
        SweepConfig c;
        c.ns = {64, 256, 1024};
        c.trials = 20;
        c.seed = kSeed;
        c.generator = Generator::adversarial_periodic;
        auto render = [&](unsigned threads) {
            c.threads = threads;
            std::ostringstream os;
            write_csv(os, run_sweep(c));
            return os.str();
        };
        const auto first = render(1);
        const bool same = first == render(1) && first == render(3);
        report(10, same, std::string("repeated sweeps ") + (same ? "byte-identical" : "differ") + " (" +
                             std::to_string(first.size()) + " bytes, 1 and 3 threads)");
    }

    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - started);
    std::cout << "summary: " << (10 - failures) << "/10 criteria pass (" << secs.count() << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
