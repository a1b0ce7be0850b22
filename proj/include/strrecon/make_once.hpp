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

// MakeOnce: grow a substring z of length > N/2 (by powers of its border
// periods, to the left) until it occurs exactly once in x.
//
// Each iteration l picks the shortest presuffix a of z whose periodic string
// t is new, extends z by the largest power of t, splits the result as
// u t^j a and t^h a w, and if needed extends once more by the largest power
// of u. Queries are spent only by the two power searches.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/oracle.hpp"
#include "strrecon/strings.hpp"

namespace strrecon {

struct BorderChoice {
    Bitstring a;  // presuffix of z
    Bitstring t;  // periodic string of a
};

/// Shortest presuffix of z whose periodic string is not in `used`.
inline std::optional<BorderChoice> find_a(const Bitstring& z, const std::vector<Bitstring>& used) {
    for (std::size_t len : presuffix_lengths(z)) {
        Bitstring a = z.prefix(len);
        Bitstring t = periodic_string(a);
        if (std::find(used.begin(), used.end(), t) == used.end()) return BorderChoice{std::move(a), std::move(t)};
    }
    return std::nullopt;
}

namespace detail {

// Largest k in [0, k_max] with unit^k + tail a substring; k = 0 is known
// true. Monotone because unit^(k-1) tail is a substring of unit^k tail.
inline std::size_t max_power(const SubstringOracle& oracle, const Bitstring& unit, const Bitstring& tail,
                             QueryLedger& ledger) {
    const std::size_t n = oracle.length();
    if (tail.size() >= n) return 0;
    std::size_t lo = 0;
    std::size_t hi = (n - tail.size()) / unit.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (oracle.query(Bitstring::repeat(unit, mid) + tail, ledger)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace detail

/// Largest i such that t^i z is a substring of x. z must be a known substring.
inline std::size_t max_left_power(const SubstringOracle& oracle, const Bitstring& t, const Bitstring& z,
                                  QueryLedger& ledger) {
    if (t.empty() || z.empty()) throw ContractViolation("max_left_power: empty argument");
    return detail::max_power(oracle, t, z, ledger);
}

/// Largest k such that u^k z' is a substring of x. Requires |u| > |t|.
inline std::size_t max_u_power(const SubstringOracle& oracle, const Bitstring& u, const Bitstring& z_ext,
                               std::size_t t_len, QueryLedger& ledger) {
    if (u.empty() || z_ext.empty()) throw ContractViolation("max_u_power: empty argument");
    if (u.size() <= t_len) {
        throw InvariantViolation("max_u_power: |u| = " + std::to_string(u.size()) + " not greater than |t| = " +
                                 std::to_string(t_len));
    }
    return detail::max_power(oracle, u, z_ext, ledger);
}

struct SplitJ {
    Bitstring u;
    std::size_t j = 0;
};

/// Largest j with z' = u t^j a.
inline SplitJ split_j(const Bitstring& z_ext, const Bitstring& t, const Bitstring& a) {
    if (t.empty()) throw ContractViolation("split_j: empty period");
    if (!z_ext.ends_with(a)) throw ContractViolation("split_j: a is not a suffix of z'");
    std::size_t j = 0;
    std::size_t covered = a.size();
    while (covered + t.size() <= z_ext.size() &&
           z_ext.view().substr(z_ext.size() - covered - t.size(), t.size()) == t.view()) {
        covered += t.size();
        ++j;
    }
    return {z_ext.prefix(z_ext.size() - covered), j};
}

/// Largest h with z' = t^h a w.
inline std::size_t split_h(const Bitstring& z_ext, const Bitstring& t, const Bitstring& a) {
    if (t.empty()) throw ContractViolation("split_h: empty period");
    if (!z_ext.starts_with(a)) throw ContractViolation("split_h: a is not a prefix of z'");
    std::size_t h = 0;
    Bitstring probe = t + a;
    while (probe.size() <= z_ext.size() && z_ext.starts_with(probe)) {
        ++h;
        probe = t + probe;
    }
    return h;
}

enum class Branch {
    keep,      // z_{l+1} = z'
    u_power,   // z_{l+1} = u^k z'
};

struct MakeOnceIteration {
    std::size_t l = 0;
    Bitstring z;
    Bitstring a;
    Bitstring t;
    Bitstring b;  // a = t b
    std::size_t i = 0;
    Bitstring z_ext;  // z' = t^i z
    Bitstring u;
    std::size_t j = 0;
    std::size_t h = 0;
    Branch branch = Branch::keep;
    std::optional<std::size_t> k;
    Bitstring z_next;
    std::uint64_t queries = 0;
};

struct MakeOnceTrace {
    std::vector<MakeOnceIteration> iterations;  // empty when retention is off
    std::vector<Bitstring> periods;             // T
    std::vector<Bitstring> anchors;             // A
    std::size_t l_max = 1;
    std::size_t a_equals_z = 0;                 // iterations where a_l was z_l itself
    std::vector<std::string> violations;        // property failures seen while running
};

struct MakeOnceOptions {
    /// Enforce |z| > N/2. Loop-body tests on short inputs switch it off.
    bool require_long_input = true;
    bool keep_trace = true;
};

struct MakeOnceResult {
    Bitstring z_out;
    MakeOnceTrace trace;
};

/// Largest iteration count the loop may reach before property 8 is broken.
inline std::size_t make_once_l_max_bound(std::size_t n) { return ceil_sqrt(2 * n) + 2; }

/// Per-iteration structural checks (P1, P2/P3, P7) and the cross-iteration
/// checks against the previous iteration (P4, P5, P6). Returns one line per
/// failed property, each of the form "iteration <l>: P<k> ...".
inline std::vector<std::string> check_iteration(const MakeOnceIteration& cur, const MakeOnceIteration* prev) {
    std::vector<std::string> out;
    auto fail = [&](const char* what) { out.push_back("iteration " + std::to_string(cur.l) + ": " + what); };
    if (!(cur.a == cur.t + cur.b && cur.b.size() < cur.t.size())) fail("P1 a = t b with |b| < |t|");
    if (!cur.z_next.starts_with(cur.z_ext) || !cur.z_next.starts_with(cur.a)) fail("P2 z', a prefixes of z_next");
    if (!cur.z_next.ends_with(cur.z) || !cur.z_next.ends_with(cur.a)) fail("P3 z, a suffixes of z_next");
    if (cur.branch == Branch::u_power && cur.u.size() <= cur.t.size()) fail("P7 |u| > |t|");
    if (prev) {
        if (!(cur.a.starts_with(prev->a) && cur.a.ends_with(prev->a) && cur.a.size() > prev->a.size())) {
            fail("P4 a_l presuffix of a_{l+1}, strictly longer");
        }
        if (cur.a.size() < prev->a.size() + prev->t.size()) fail("P5 |a_{l+1}| >= |a_l| + |t_l|");
        if (cur.t.size() <= prev->t.size()) fail("P6 |t_{l+1}| > |t_l|");
    }
    return out;
}

/// "P<k>" tag of a line produced by check_iteration or audit_trace.
inline std::string property_tag(const std::string& problem) {
    const auto at = problem.find(": P");
    return at == std::string::npos ? std::string("?") : problem.substr(at + 2, 2);
}

/// Full property audit of a retained trace, including the l_max bound.
inline std::vector<std::string> audit_trace(const MakeOnceTrace& trace, std::size_t n) {
    std::vector<std::string> problems;
    if (trace.iterations.empty()) problems = trace.violations;
    const MakeOnceIteration* prev = nullptr;
    for (const auto& it : trace.iterations) {
        for (auto& bad : check_iteration(it, prev)) problems.push_back(std::move(bad));
        prev = &it;
    }
    if (trace.l_max > make_once_l_max_bound(n)) {
        problems.push_back("trace: P8 l_max = " + std::to_string(trace.l_max) + " exceeds " +
                           std::to_string(make_once_l_max_bound(n)));
    }
    return problems;
}

inline MakeOnceResult make_once(const SubstringOracle& oracle, const Bitstring& z, QueryLedger& ledger,
                                MakeOnceOptions options = {}) {
    const std::size_t n = oracle.length();
    if (z.empty() || z.size() > n) throw ContractViolation("make_once: input length outside [1, N]");
    if (options.require_long_input && 2 * z.size() <= n) {
        throw ContractViolation("make_once: input length " + std::to_string(z.size()) + " is not > N/2");
    }

    MakeOnceResult result;
    auto& trace = result.trace;
    Bitstring current = z;
    std::optional<MakeOnceIteration> prev;
    const std::size_t guard = ceil_sqrt(2 * n) + 3;

    for (std::size_t l = 1;; ++l) {
        auto choice = find_a(current, trace.periods);
        if (!choice) {
            trace.l_max = l;
            break;
        }
        if (l > guard) {
            throw InvariantViolation("make_once: more than " + std::to_string(guard) + " iterations (P8)");
        }

        const std::uint64_t before = ledger.total();
        MakeOnceIteration it;
        it.l = l;
        it.z = current;
        it.a = std::move(choice->a);
        it.t = std::move(choice->t);
        it.b = it.a.suffix(it.a.size() - it.t.size());
        if (it.a == it.z) ++trace.a_equals_z;
        trace.periods.push_back(it.t);
        trace.anchors.push_back(it.a);

        it.i = max_left_power(oracle, it.t, it.z, ledger);
        it.z_ext = Bitstring::repeat(it.t, it.i) + it.z;
        auto [u, j] = split_j(it.z_ext, it.t, it.a);
        it.u = std::move(u);
        it.j = j;
        it.h = split_h(it.z_ext, it.t, it.a);

        if (it.u.empty() || it.h < it.j) {
            it.branch = Branch::keep;
            it.z_next = it.z_ext;
        } else {
            it.branch = Branch::u_power;
            it.k = max_u_power(oracle, it.u, it.z_ext, it.t.size(), ledger);
            it.z_next = Bitstring::repeat(it.u, *it.k) + it.z_ext;
        }
        it.queries = ledger.total() - before;

        for (auto& bad : check_iteration(it, prev ? &*prev : nullptr)) trace.violations.push_back(std::move(bad));

        current = it.z_next;
        if (options.keep_trace) trace.iterations.push_back(it);
        prev = std::move(it);
    }

    if (trace.l_max > make_once_l_max_bound(n)) {
        throw InvariantViolation("make_once: l_max = " + std::to_string(trace.l_max) + " breaks P8");
    }
    result.z_out = std::move(current);
    return result;
}

/// One line per iteration with every recorded field.
inline void write_trace(std::ostream& os, const MakeOnceTrace& trace) {
    for (const auto& it : trace.iterations) {
        os << "l=" << it.l << " z=" << it.z << " a=" << it.a << " t=" << it.t << " b=" << it.b << " i=" << it.i
           << " z'=" << it.z_ext << " u=" << it.u << " j=" << it.j << " h=" << it.h
           << " branch=" << (it.branch == Branch::keep ? "keep" : "u_power") << " k=";
        if (it.k) {
            os << *it.k;
        } else {
            os << '-';
        }
        os << " z_next=" << it.z_next << " queries=" << it.queries << '\n';
    }
    os << "l_max=" << trace.l_max << '\n';
}

}  // namespace strrecon
