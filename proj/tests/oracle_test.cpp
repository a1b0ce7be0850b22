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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "strrecon/oracle.hpp"
#include "test_support.hpp"

namespace strrecon {
namespace {

using namespace strrecon::literals;
using harness::Access;

std::array<Bitstring, 4> quad(const char* a, const char* b, const char* c, const char* d) {
    return {Bitstring(a), Bitstring(b), Bitstring(c), Bitstring(d)};
}

TEST(SubstringOracle, AnswersAndCounts) {
    QueryLedger ledger;
    EXPECT_TRUE(SubstringOracle("1010110110110111110"_bits).query("1011011"_bits, ledger));
    EXPECT_TRUE(SubstringOracle("101"_bits).query("01"_bits, ledger));
    EXPECT_FALSE(SubstringOracle("1111"_bits).query("00"_bits, ledger));
    EXPECT_EQ(ledger.classical_count(), 3u);
    EXPECT_EQ(ledger.grover_count(), 0u);
    EXPECT_EQ(ledger.total(), 3u);
}

TEST(SubstringOracle, LengthContract) {
    const SubstringOracle o("0110"_bits);
    QueryLedger ledger;
    EXPECT_THROW(o.query(Bitstring(""), ledger), ContractViolation);
    EXPECT_THROW(o.query("01100"_bits, ledger), ContractViolation);
    EXPECT_EQ(ledger.total(), 0u);
    EXPECT_THROW(SubstringOracle(Bitstring("")), ContractViolation);
}

TEST(AnchoredOracle, Examples) {
    const AnchoredOracle o("0110"_bits);
    QueryLedger ledger;
    EXPECT_TRUE(o.query(1, "11"_bits, ledger));
    EXPECT_FALSE(o.query(0, "1"_bits, ledger));
    EXPECT_TRUE(o.query(2, "10"_bits, ledger));
    EXPECT_EQ(ledger.classical_count(), 3u);
    EXPECT_THROW(o.query(3, "10"_bits, ledger), ContractViolation);
    EXPECT_THROW(o.query(5, "1"_bits, ledger), ContractViolation);
    EXPECT_THROW(o.query(0, Bitstring(""), ledger), ContractViolation);
    EXPECT_EQ(ledger.classical_count(), 3u);
}

TEST(Grover4, UniqueSolution) {
    const SubstringOracle o("11010010"_bits);
    QueryLedger ledger;
    const auto g = o.grover4(quad("00100", "01100", "10100", "11100"), ledger);
    EXPECT_EQ(g.chosen.str(), "10100");
    EXPECT_TRUE(Access::solution_existed(g));
    EXPECT_EQ(ledger.grover_count(), 1u);
    EXPECT_EQ(ledger.classical_count(), 0u);
}

TEST(Grover4, NoSolutionFallsBackToFirstCandidate) {
    const SubstringOracle o("0110"_bits);
    QueryLedger ledger;
    const auto g = o.grover4(quad("010110", "000110", "100110", "110110"), ledger);
    EXPECT_EQ(g.chosen.str(), "000110");
    EXPECT_FALSE(Access::solution_existed(g));
    EXPECT_EQ(ledger.grover_count(), 1u);
    EXPECT_EQ(ledger.zero_solution_calls(), 1u);
}

TEST(Grover4, TwoSolutionsIsAnInvariantViolation) {
    // "0011" and "0110" both occur in 00110.
    const SubstringOracle o("00110"_bits);
    QueryLedger ledger;
    EXPECT_THROW(o.grover4(quad("0011", "0110", "1111", "1010"), ledger), InvariantViolation);
}

TEST(Grover4, RejectsDuplicateOrEmptyCandidates) {
    const SubstringOracle o("00110"_bits);
    QueryLedger ledger;
    EXPECT_THROW(o.grover4(quad("0011", "0011", "1111", "1010"), ledger), ContractViolation);
    EXPECT_THROW(o.grover4(quad("", "0011", "1111", "1010"), ledger), ContractViolation);
}

TEST(Grover4, SeededFallbackIsReproducible) {
    const SubstringOracle o("0000"_bits);
    auto run = [&](std::uint64_t seed) {
        LedgerOptions opt;
        opt.fallback = GroverFallback::seeded;
        opt.fallback_seed = seed;
        QueryLedger ledger(opt);
        std::string picks;
        for (int k = 0; k < 16; ++k) picks += o.grover4(quad("11", "10", "01", "111"), ledger).chosen.str() + ",";
        return picks;
    };
    EXPECT_EQ(run(3), run(3));
}

TEST(Grover4, AgreesWithBruteForce) {
    const auto hidden = testing::all_strings_up_to(10);
    const auto stems = testing::all_strings_up_to(4);
    for (const auto& x : hidden) {
        const SubstringOracle o(x);
        for (const auto& s : stems) {
            for (int side = 0; side < 2; ++side) {
                std::array<Bitstring, 4> c;
                for (int p = 0; p < 4; ++p) {
                    const auto pair = Bitstring::from_uint(static_cast<std::uint64_t>(p), 2);
                    c[static_cast<std::size_t>(p)] = side ? pair + s : s + pair;
                }
                std::size_t matches = 0;
                Bitstring only;
                for (const auto& cand : c) {
                    if (testing::naive_contains(cand.str(), x.str())) {
                        ++matches;
                        only = cand;
                    }
                }
                QueryLedger ledger;
                if (matches >= 2) {
                    ASSERT_THROW(o.grover4(c, ledger), InvariantViolation);
                } else {
                    const auto g = o.grover4(c, ledger);
                    ASSERT_EQ(Access::solution_existed(g), matches == 1);
                    if (matches == 1) ASSERT_EQ(g.chosen, only) << x;
                }
                ASSERT_EQ(ledger.grover_count(), 1u);
            }
        }
    }
}

TEST(PackedMatcher, AgreesWithNaiveScanOnLongStrings) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 300;
        std::string x;
        for (std::size_t i = 0; i < n; ++i) x += (rng() % 3 == 0) ? '0' : '1';
        const SubstringOracle o{Bitstring(x)};
        QueryLedger ledger;
        for (int k = 0; k < 50; ++k) {
            const std::size_t m = 1 + rng() % n;
            std::string p;
            if (k % 2 == 0) {
                const std::size_t at = rng() % (n - m + 1);
                p = x.substr(at, m);
                if (rng() % 2 && m > 0) p[rng() % m] ^= 1;
            } else {
                for (std::size_t i = 0; i < m; ++i) p += (rng() % 3 == 0) ? '0' : '1';
            }
            ASSERT_EQ(o.query(Bitstring(p), ledger), testing::naive_contains(p, x)) << p << " in " << x;
        }
    }
}

TEST(QueryLedger, TranscriptHasOneLinePerCall) {
    LedgerOptions opt;
    opt.record_transcript = true;
    QueryLedger ledger(opt);
    const SubstringOracle o("0110"_bits);
    const AnchoredOracle a("0110"_bits);
    o.query("11"_bits, ledger);
    a.query(2, "10"_bits, ledger);
    o.grover4(quad("0110", "1110", "0010", "1010"), ledger);
    std::ostringstream os;
    ledger.write_transcript(os);
    EXPECT_EQ(os.str(), "C 11 -> 1\nA 2 10 -> 1\nG 0110,1110,0010,1010 -> 0110\n");
    EXPECT_EQ(ledger.transcript().size(), ledger.total());
}

}  // namespace
}  // namespace strrecon
