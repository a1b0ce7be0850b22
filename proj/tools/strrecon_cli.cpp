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

// Command-line driver: reconstruction runs, sweeps, exhaustive checks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strrecon/adversary.hpp"
#include "strrecon/experiment.hpp"
#include "strrecon/identify.hpp"
#include "strrecon/reduction.hpp"

namespace {

using namespace strrecon;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Common {
    double bound_constant = 12.0;
    std::size_t checkpoint_interval = 0;
    std::string fallback = "deterministic";
    std::uint64_t fallback_seed = 0;
    std::size_t small_n_threshold = 16;

    IdentifyConfig config() const {
        IdentifyConfig c;
        c.bound_constant = bound_constant;
        c.checkpoint_interval = checkpoint_interval;
        c.grover_fallback = fallback == "seeded" ? GroverFallback::seeded : GroverFallback::deterministic;
        c.fallback_seed = fallback_seed;
        c.small_n_threshold = small_n_threshold;
        return c;
    }

    void attach(CLI::App* app) {
        app->add_option("--bound-constant", bound_constant, "c in ceil(3N/4) + c ceil(sqrt N) ceil(log2 N)")
            ->capture_default_str();
        app->add_option("--checkpoint-interval", checkpoint_interval, "Grover steps between checks (0: ceil(sqrt N))")
            ->capture_default_str();
        app->add_option("--fallback", fallback, "grover4 choice when nothing matches")
            ->check(CLI::IsMember({"deterministic", "seeded"}))
            ->capture_default_str();
        app->add_option("--fallback-seed", fallback_seed, "seed for --fallback seeded")->capture_default_str();
        app->add_option("--small-n-threshold", small_n_threshold, "below this N run the classical baseline")
            ->capture_default_str();
    }
};

Bitstring parse_bits(const std::string& text) {
    if (text.empty() || !Bitstring::is_valid(text)) throw ContractViolation("not a nonempty binary string: " + text);
    return Bitstring(text);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_reconstruct(const std::string& hidden_text, const Common& common, bool show_trace,
                    const std::string& transcript_path) {
    const Bitstring hidden = parse_bits(hidden_text);
    const SubstringOracle oracle(hidden);
    const auto config = common.config();
    LedgerOptions options;
    options.fallback = config.grover_fallback;
    options.fallback_seed = config.fallback_seed;
    options.record_transcript = !transcript_path.empty();
    QueryLedger ledger(options);
    const auto report = identify(oracle, config, ledger);

    std::cout << "n=" << hidden.size() << '\n'
              << "recovered=" << report.recovered << '\n'
              << "exact=" << yes_no(report.recovered == hidden) << '\n'
              << "classical=" << report.classical_count << " grover=" << report.grover_count
              << " total=" << report.total << '\n'
              << "phases step1=" << report.phases.step1 << " step2=" << report.phases.step2
              << " step3=" << report.phases.step3 << " step4=" << report.phases.step4 << '\n'
              << "bound=" << format_double(report.bound_value) << " within_bound=" << yes_no(report.within_bound)
              << '\n';
    if (report.used_baseline) std::cout << "path=baseline\n";
    if (show_trace && report.make_once) {
        std::cout << "step1=" << report.step1_output << '\n';
        write_trace(std::cout, report.make_once->trace);
        std::cout << "z_out=" << report.make_once->z_out << '\n' << "step3=" << report.step3_prefix << '\n';
        for (const auto& p : audit_trace(report.make_once->trace, hidden.size())) std::cout << "property " << p << '\n';
    }
    if (!transcript_path.empty()) {
        std::ofstream out(transcript_path);
        if (!out) throw ContractViolation("cannot write " + transcript_path);
        ledger.write_transcript(out);
    }
    return report.recovered == hidden ? kOk : kViolation;
}

int cmd_baseline(const std::string& hidden_text) {
    const Bitstring hidden = parse_bits(hidden_text);
    const SubstringOracle oracle(hidden);
    QueryLedger ledger;
    const auto recovered = ss_reconstruct(oracle, ledger);
    const std::size_t n = hidden.size();
    std::cout << "n=" << n << '\n'
              << "recovered=" << recovered << '\n'
              << "exact=" << yes_no(recovered == hidden) << '\n'
              << "classical=" << ledger.classical_count() << '\n'
              << "budget=" << n + 8 * ceil_sqrt(n) << '\n';
    return recovered == hidden ? kOk : kViolation;
}

int cmd_sweep(SweepConfig config, const std::string& generator, const std::string& user, const std::string& out_path) {
    if (config.trials < 1) throw ContractViolation("--trials must be at least 1");
    config.generator = parse_generator(generator);
    if (config.generator == Generator::user) {
        if (user.empty()) throw ContractViolation("--generator user needs --string");
        config.user_string = parse_bits(user);
        config.ns = {config.user_string->size()};
    }
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ContractViolation("cannot write " + out_path);
    }
    const auto rows = run_sweep(config);
    write_csv(out_path.empty() ? std::cout : file, rows);

    std::size_t bad_unique = 0;
    std::size_t bad_bound = 0;
    std::size_t trace_flags = 0;
    for (const auto& r : rows) {
        if (!r.unique_ok()) ++bad_unique;
        if (r.n >= 64 && !r.within_bound) ++bad_bound;
        if (!r.trace_ok()) ++trace_flags;
    }
    std::cerr << "rows=" << rows.size() << " unique_failures=" << bad_unique << " bound_failures=" << bad_bound
              << " trace_flags=" << trace_flags << '\n';
    return bad_unique == 0 && bad_bound == 0 ? kOk : kViolation;
}

int cmd_verify(std::size_t max_n, const Common& common) {
    if (max_n < 1 || max_n > 16) throw ContractViolation("--max-n must be in [1, 16]");
    std::size_t failures = 0;
    for (const auto& line : verify_all(max_n, common.config())) {
        std::cout << "n=" << line.n << " strings=" << line.strings << " failures=" << line.failures
                  << " max_identify=" << line.max_identify << " max_full_pipeline=" << line.max_forced
                  << " max_baseline=" << line.max_baseline << '\n';
        for (const auto& e : line.examples) std::cout << "  failing " << e << '\n';
        failures += line.failures;
    }
    std::cout << "total_failures=" << failures << '\n';
    return failures == 0 ? kOk : kViolation;
}

int cmd_embed_check(std::size_t max_len, bool literal) {
    if (max_len < 2 || max_len > 10) throw ContractViolation("--max-len must be in [2, 10]");
    const auto enc = literal ? IndexEncoding::literal : IndexEncoding::guarded;
    std::size_t total = 0;
    for (std::size_t n = 2; n <= max_len; ++n) {
        std::size_t checked = 0;
        std::size_t mismatches = 0;
        std::size_t shown = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const auto report = verify_equivalence(Bitstring::from_uint(v, n), enc);
            checked += report.queries_checked;
            mismatches += report.mismatches.size();
            for (const auto& m : report.mismatches) {
                if (shown++ < 3) {
                    std::cout << "  mismatch X=" << report.x << " i=" << m.index << " z=" << m.z
                              << " anchored=" << m.anchored_answer << " substring=" << m.substring_answer << '\n';
                }
            }
        }
        std::cout << "n=" << n << " encoding=" << (literal ? "literal" : "guarded") << " queries=" << checked
                  << " mismatches=" << mismatches << '\n';
        total += mismatches;
    }
    return total == 0 ? kOk : kViolation;
}

template <class Q>
void print_bound(const BoundResult<Bitstring, Q>& r) {
    std::cout << "triples=" << r.triples << '\n';
    if (r.value) {
        std::cout << "bound=" << format_double(*r.value) << '\n';
        const auto& w = *r.witness;
        std::cout << "witness x=" << w.x << " y=" << w.y << " q=" << w.q << " mu_x=" << w.mu_x << " mu_y=" << w.mu_y
                  << " nu_xq=" << w.nu_xq << " nu_yq=" << w.nu_yq << '\n';
    } else {
        std::cout << "bound=undefined (no distinguishing triple)\n";
    }
    for (const auto& v : r.violations) std::cout << "violation " << v << '\n';
}

int cmd_adversary(const std::string& scheme, std::size_t n, std::size_t l1, std::size_t l2, std::size_t sample,
                  std::uint64_t seed) {
    if (scheme == "b1") {
        if (n > 16) throw ContractViolation("--n above 16 for the block scheme");
        const auto inst = b1_scheme(n);
        std::vector<Bitstring> xs;
        if (sample > 0) xs = sample_instances(n, sample, seed);
        const auto r = evaluate_bound(inst, sample > 0 ? &xs : nullptr);
        std::cout << "scheme=b1 n=" << n << " sample=" << (sample > 0 ? std::to_string(sample) : "all")
                  << " seed=" << seed << '\n';
        print_bound(r);
        const auto audit = audit_b1(n, sample > 0 ? xs : inst.instances);
        const auto view = BlockView::for_length(n);
        std::cout << "max_nu_product=" << audit.max_product << " limit=" << 3 * view.alphabet * view.alphabet << '\n'
                  << "product_violations=" << audit.product_violations
                  << " nu_x_violations=" << audit.nu_x_violations << '\n'
                  << "closed_form checked=" << audit.closed_form_checked
                  << " alphabet_term_matches=" << audit.closed_form_m_matches
                  << " length_term_matches=" << audit.closed_form_n_matches << '\n';
        return r.violations.empty() && audit.product_violations == 0 && audit.nu_x_violations == 0 ? kOk
                                                                                                  : kViolation;
    }
    if (n > 10) throw ContractViolation("--n above 10 for the restricted-length scheme");
    const auto inst = c_scheme(n, l1, l2);
    std::cout << "scheme=c n=" << n << " l1=" << l1 << " l2=" << l2 << " queries=" << inst.queries.size() << '\n';
    const auto r = evaluate_bound(inst);
    print_bound(r);
    return r.violations.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact string reconstruction from substring queries"};
    app.require_subcommand(1);

    Common common;
    std::string hidden;
    bool show_trace = false;
    std::string transcript;
    auto* reconstruct = app.add_subcommand("reconstruct", "run the quantum-query reconstruction on a hidden string");
    reconstruct->add_option("hidden", hidden, "hidden bitstring")->required();
    reconstruct->add_flag("--trace", show_trace, "print the MakeOnce trace");
    reconstruct->add_option("--transcript", transcript, "write the query transcript here");
    common.attach(reconstruct);

    std::string baseline_hidden;
    auto* baseline = app.add_subcommand("baseline", "classical reconstruction");
    baseline->add_option("hidden", baseline_hidden, "hidden bitstring")->required();

    SweepConfig sweep_config;
    std::string generator = "uniform";
    std::string user_string;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "query-count sweep, one CSV row per trial");
    sweep->add_option("--n", sweep_config.ns, "lengths")->delimiter(',');
    sweep->add_option("--trials", sweep_config.trials, "trials per length")->capture_default_str();
    sweep->add_option("--seed", sweep_config.seed, "base seed")->capture_default_str();
    sweep->add_option("--generator", generator, "uniform|adversarial-periodic|all-ones|user")
        ->check(CLI::IsMember({"uniform", "adversarial-periodic", "all-ones", "user"}))
        ->capture_default_str();
    sweep->add_option("--string", user_string, "hidden string for --generator user");
    sweep->add_option("--out", out_path, "CSV path (default stdout)");
    sweep->add_option("--threads", sweep_config.threads, "worker threads")->capture_default_str();
    common.attach(sweep);

    std::size_t max_n = 12;
    auto* verify = app.add_subcommand("verify", "exhaustive exactness check for all strings up to --max-n");
    verify->add_option("--max-n", max_n, "largest length (at most 16)")->capture_default_str();

    std::size_t max_len = 8;
    bool literal = false;
    auto* embed = app.add_subcommand("embed-check", "anchored-to-substring embedding equivalence");
    embed->add_option("--max-len", max_len, "largest |X| (at most 10)")->capture_default_str();
    embed->add_flag("--literal", literal, "use unguarded fixed-width indices");

    std::string scheme = "b1";
    std::size_t adv_n = 4;
    std::size_t l1 = 0;
    std::size_t l2 = 1;
    std::size_t sample = 0;
    std::uint64_t seed = 2024;
    auto* adversary = app.add_subcommand("adversary", "brute-force weighted adversary bound");
    adversary->add_option("--scheme", scheme, "b1|c")->check(CLI::IsMember({"b1", "c"}))->capture_default_str();
    adversary->add_option("--n", adv_n, "instance length")->capture_default_str();
    adversary->add_option("--l1", l1, "long-query cutoff (c scheme; 0: n)")->capture_default_str();
    adversary->add_option("--l2", l2, "short-query cutoff (c scheme)")->capture_default_str();
    adversary->add_option("--sample", sample, "instances to sample (0: all)")->capture_default_str();
    adversary->add_option("--seed", seed, "sampling seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*reconstruct) return cmd_reconstruct(hidden, common, show_trace, transcript);
        if (*baseline) return cmd_baseline(baseline_hidden);
        if (*sweep) {
            if (sweep_config.ns.empty()) throw ContractViolation("--n is required");
            sweep_config.identify = common.config();
            return cmd_sweep(sweep_config, generator, user_string, out_path);
        }
        if (*verify) return cmd_verify(max_n, common);
        if (*embed) return cmd_embed_check(max_len, literal);
        if (*adversary) return cmd_adversary(scheme, adv_n, l1 == 0 ? adv_n : l1, l2, sample, seed);
    } catch (const ContractViolation& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kViolation;
    }
    return kUsage;
}
