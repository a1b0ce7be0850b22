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

// Embedding of an anchored-substring instance X (length n) into a plain
// substring instance X', cell by cell:
//
//   X' = B(0) B(0)^R # x_0 ## B(1) B(1)^R # x_1 ## ... B(n-1) B(n-1)^R # x_{n-1}
//
// with # = 1^(10 ceil(log2 n)) and B(i) a fixed-width index. An anchored
// query (i, z_1..z_m) becomes the run of cells i..i+m-1 joined by ##.
//
// Two index encodings are offered. `literal` uses width ceil(log2 n); an
// index whose binary form ends the cell in ones merges with the separator
// runs, so translated queries can match misaligned (n = 2 and n = 4 already
// show false positives). `guarded` prepends a 0 guard bit so every B(i) B(i)^R
// is delimited by zeros, which pins every long run of ones to a separator.

#include <cstddef>
#include <string>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/oracle.hpp"

namespace strrecon {

enum class IndexEncoding { literal, guarded };

struct EmbeddingLayout {
    std::size_t n = 0;
    std::size_t index_width = 0;
    std::size_t sep_len = 0;
    std::size_t cell_len = 0;
    std::size_t gap = 0;
    IndexEncoding encoding = IndexEncoding::guarded;

    static EmbeddingLayout for_length(std::size_t n, IndexEncoding encoding = IndexEncoding::guarded) {
        if (n < 2) throw ContractViolation("embedding needs n >= 2");
        EmbeddingLayout layout;
        layout.n = n;
        layout.encoding = encoding;
        const std::size_t log_n = ceil_log2(n);
        layout.index_width = log_n + (encoding == IndexEncoding::guarded ? 1 : 0);
        layout.sep_len = 10 * log_n;
        layout.cell_len = 2 * layout.index_width + layout.sep_len + 1;
        layout.gap = 2 * layout.sep_len;
        return layout;
    }

    std::size_t embedded_length() const { return n * cell_len + (n - 1) * gap; }

    Bitstring index_bits(std::size_t i) const { return Bitstring::from_uint(i, index_width); }

    /// B(i) B(i)^R # symbol
    Bitstring cell(std::size_t i, char symbol) const {
        const Bitstring b = index_bits(i);
        Bitstring out = b + b.reversed() + Bitstring(std::string(sep_len, '1'));
        out.push_back(symbol);
        return out;
    }

    Bitstring separator_pair() const { return Bitstring(std::string(gap, '1')); }
};

inline Bitstring embed(const Bitstring& x, IndexEncoding encoding = IndexEncoding::guarded) {
    const auto layout = EmbeddingLayout::for_length(x.size(), encoding);
    Bitstring out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out += layout.separator_pair();
        out += layout.cell(i, x[i]);
    }
    return out;
}

/// The substring query that reads z at anchor i through the embedding.
inline Bitstring translate_query(std::size_t i, const Bitstring& z, const EmbeddingLayout& layout) {
    if (z.empty() || i > layout.n || z.size() > layout.n - i) {
        throw ContractViolation("translate_query: (" + std::to_string(i) + ", length " + std::to_string(z.size()) +
                                ") out of range for n = " + std::to_string(layout.n));
    }
    Bitstring out;
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (k > 0) out += layout.separator_pair();
        out += layout.cell(i + k, z[k]);
    }
    return out;
}

struct EmbeddingMismatch {
    std::size_t index = 0;
    Bitstring z;
    bool anchored_answer = false;
    bool substring_answer = false;
};

struct EquivalenceReport {
    Bitstring x;
    IndexEncoding encoding = IndexEncoding::guarded;
    std::size_t queries_checked = 0;
    std::vector<EmbeddingMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Compares tau(X; (i, z)) with chi(embed(X); translate_query(i, z)) for every
/// legal anchored query. Mismatches are findings, not errors.
inline EquivalenceReport verify_equivalence(const Bitstring& x, IndexEncoding encoding = IndexEncoding::guarded,
                                            std::size_t max_length = 10) {
    if (x.size() > max_length) {
        throw ContractViolation("verify_equivalence: |X| = " + std::to_string(x.size()) + " above cap " +
                                std::to_string(max_length));
    }
    const auto layout = EmbeddingLayout::for_length(x.size(), encoding);
    const AnchoredOracle anchored(x);
    const SubstringOracle embedded(embed(x, encoding));
    QueryLedger ledger;

    EquivalenceReport report;
    report.x = x;
    report.encoding = encoding;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t len = 1; len <= n - i; ++len) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
                const Bitstring z = Bitstring::from_uint(bits, len);
                const bool tau = anchored.query(i, z, ledger);
                const bool chi = embedded.query(translate_query(i, z, layout), ledger);
                ++report.queries_checked;
                if (tau != chi) report.mismatches.push_back({i, z, tau, chi});
            }
        }
    }
    return report;
}

}  // namespace strrecon
