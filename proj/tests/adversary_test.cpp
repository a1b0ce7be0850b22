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

#include <map>
#include <set>

#include "strrecon/adversary.hpp"
#include "test_support.hpp"

namespace strrecon {
namespace {

using namespace strrecon::literals;

// Membership in Q(a, l, b) straight from the definition.
bool in_query_set(std::size_t i, std::size_t len, std::size_t a, std::size_t l, std::size_t b, std::size_t L) {
    if (l == 0 && b == 0) {
        if (len != a) return false;
        for (std::size_t j = 0; (j + 1) * L <= i + L; ++j) {
            if (j * L <= i && i + a <= (j + 1) * L) return true;
        }
        return false;
    }
    if ((i + a) % L != 0 || i + a < a) return false;
    return len == a + l * L + b;
}

TEST(BlockView, RejectsNonDividingLengths) {
    EXPECT_THROW(BlockView::for_length(5), ContractViolation);
    EXPECT_THROW(BlockView::for_length(1), ContractViolation);
    const auto v = BlockView::for_length(16);
    EXPECT_EQ(v.block_len, 4u);
    EXPECT_EQ(v.alphabet, 16u);
    EXPECT_EQ(v.blocks, 4u);
    EXPECT_EQ(v.distance("0000111100001111"_bits, "0001111100001110"_bits), 2u);
}

TEST(QuerySet, SmallExamples) {
    const auto within = query_set(1, 0, 0, 4);
    EXPECT_EQ(within.size(), 8u);
    for (const auto& q : within) EXPECT_EQ(q.s.size(), 1u);

    const auto whole = query_set(0, 1, 0, 4);
    std::set<std::size_t> anchors;
    for (const auto& q : whole) {
        EXPECT_EQ(q.s.size(), 2u);
        anchors.insert(q.index);
    }
    EXPECT_EQ(whole.size(), 8u);
    EXPECT_EQ(anchors, (std::set<std::size_t>{0, 2}));

    EXPECT_THROW(query_set(0, 0, 0, 4), ContractViolation);
    EXPECT_THROW(query_set(2, 0, 0, 4), ContractViolation);
    EXPECT_THROW(query_set(0, 3, 0, 4), ContractViolation);
}

TEST(QuerySet, MatchesDefinitionAndPartitionsAllQueries) {
    for (std::size_t n : {4u, 6u, 12u}) {
        const auto view = BlockView::for_length(n);
        std::map<std::pair<std::size_t, std::size_t>, int> hits;
        for (const auto& shape : query_shapes(n)) {
            std::set<std::pair<std::size_t, std::size_t>> windows;
            for (const auto& q : query_set(shape.a, shape.l, shape.b, n)) {
                windows.insert({q.index, q.s.size()});
                ASSERT_EQ(shape_of(view, q.index, q.s.size()), shape);
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t len = 1; i + len <= n; ++len) {
                    const bool member = in_query_set(i, len, shape.a, shape.l, shape.b, view.block_len);
                    ASSERT_EQ(member, windows.count({i, len}) == 1)
                        << "n=" << n << " (" << shape.a << "," << shape.l << "," << shape.b << ") i=" << i
                        << " len=" << len;
                }
            }
            for (const auto& w : windows) ++hits[w];
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t len = 1; i + len <= n; ++len) ASSERT_EQ((hits[{i, len}]), 1);
        }
    }
}

TEST(B1Weights, Cases) {
    const auto view = BlockView::for_length(4);
    // Block distance 2.
    EXPECT_EQ(b1_weights(view, "0000"_bits, "1010"_bits, {0, "00"_bits}), std::make_pair(Weight(0), Weight(0)));
    // Differing block fully read.
    EXPECT_EQ(b1_weights(view, "0000"_bits, "0011"_bits, {1, "000"_bits}).second, Weight(1));
    // Differing block partially read, tau(X) = 1: l + 1 with l = 1.
    EXPECT_EQ(b1_weights(view, "0000"_bits, "0010"_bits, {1, "000"_bits}).second, Weight(1));
    const auto partial = b1_weights(view, "0000"_bits, "0100"_bits, {1, "000"_bits});
    EXPECT_EQ(partial.first, Weight(1));
    EXPECT_EQ(partial.second, Weight(2));
    EXPECT_EQ(b1_weights(view, "0100"_bits, "0000"_bits, {1, "000"_bits}).second, Weight(1, 2));
    // Same answer on both sides.
    EXPECT_EQ(b1_weights(view, "0000"_bits, "0001"_bits, {0, "00"_bits}).second, Weight(0));
}

TEST(B1Scheme, ValidExhaustivelyAtFour) {
    const auto inst = b1_scheme(4);
    const auto problems = check_scheme(inst);
    EXPECT_TRUE(problems.empty()) << problems.front();
}

TEST(B1Scheme, MuClosedForm) {
    for (std::size_t n : {4u, 16u}) {
        const auto view = BlockView::for_length(n);
        const auto inst = b1_scheme(n);
        BoundEvaluator<Bitstring, AnchoredQuery> eval(inst);
        const Weight expected(static_cast<std::int64_t>(n * (view.alphabet - 1) / view.block_len));
        const std::size_t stride = n == 4 ? 1 : 997;
        for (std::size_t x = 0; x < inst.instances.size(); x += stride) ASSERT_EQ(eval.mu(x), expected);
    }
}

TEST(B1Scheme, HooksDoNotChangeTheBound) {
    const auto with_hooks = b1_scheme(4);
    auto plain = with_hooks;
    plain.partners = nullptr;
    plain.distinguishing = nullptr;
    const auto a = evaluate_bound(with_hooks);
    const auto b = evaluate_bound(plain);
    ASSERT_TRUE(a.value && b.value);
    EXPECT_DOUBLE_EQ(*a.value, *b.value);
    EXPECT_EQ(a.triples, b.triples);
    EXPECT_TRUE(a.violations.empty());
    EXPECT_GT(*a.value, 0.0);
}

TEST(B1Scheme, ClosedFormUsesAlphabetSizeInLastTerm) {
    const auto audit = audit_b1(6, testing::all_strings(6));
    EXPECT_TRUE(audit.scheme_violations.empty());
    EXPECT_GT(audit.closed_form_checked, 0u);
    EXPECT_EQ(audit.closed_form_m_matches, audit.closed_form_checked);
    EXPECT_LT(audit.closed_form_n_matches, audit.closed_form_checked);
    EXPECT_EQ(audit.nu_y_unexpected, 0u);
    EXPECT_EQ(audit.product_violations, 0u);
    EXPECT_EQ(audit.nu_x_violations, 0u);
}

TEST(B1Scheme, ProductBoundOnSampleAtSixteen) {
    const auto audit = audit_b1(16, sample_instances(16, 6, 2024));
    EXPECT_TRUE(audit.scheme_violations.empty());
    EXPECT_GT(audit.triples, 0u);
    EXPECT_EQ(audit.product_violations, 0u);
    EXPECT_EQ(audit.nu_x_violations, 0u);
    EXPECT_LT(audit.max_product, Weight(3 * 16 * 16));
}

TEST(CScheme, MuAndValidity) {
    const auto inst = c_scheme(5, 4, 1);
    BoundEvaluator<Bitstring, Bitstring> eval(inst);
    for (std::size_t x = 0; x < inst.instances.size(); ++x) ASSERT_EQ(eval.mu(x), Weight(31));
    EXPECT_TRUE(check_scheme(inst).empty());
}

TEST(CScheme, EmptyQuerySetHasNoBound) {
    const auto inst = c_scheme(5, 6, 0);
    EXPECT_TRUE(inst.queries.empty());
    EXPECT_FALSE(evaluate_bound(inst).value);
}

TEST(CScheme, LongQueryNuCap) {
    const std::size_t n = 7;
    const auto inst = c_scheme(n, 4, 1);
    BoundEvaluator<Bitstring, Bitstring> eval(inst);
    for (std::size_t y = 0; y < inst.instances.size(); ++y) {
        for (std::size_t q = 0; q < inst.queries.size(); ++q) {
            const auto& qs = inst.queries[q];
            if (qs.size() < 4 || eval.answer(y, q)) continue;
            ASSERT_LE(eval.nu(y, q), Weight(static_cast<std::int64_t>(c_scheme_long_query_cap(n, qs.size()))));
        }
    }
}

TEST(CScheme, RestrictingQueriesRaisesTheBound) {
    const auto full = evaluate_bound(c_scheme(6, 1, 0));
    const auto restricted = evaluate_bound(c_scheme(6, 6, 1));
    ASSERT_TRUE(full.value && restricted.value);
    EXPECT_LT(*full.value, *restricted.value);
    ASSERT_TRUE(full.witness);
    const auto& w = *full.witness;
    EXPECT_NE(is_substring(w.q, w.x), is_substring(w.q, w.y));
    EXPECT_DOUBLE_EQ(*full.value, std::sqrt(to_double(w.ratio())));
}

TEST(Evaluator, ReportsBrokenSchemes) {
    auto inst = c_scheme(3, 1, 0);
    inst.w_prime = [](const Bitstring&, const Bitstring&, const Bitstring&) { return Weight(1, 2); };
    EXPECT_FALSE(check_scheme(inst).empty());
    EXPECT_FALSE(evaluate_bound(inst).violations.empty());
}

}  // namespace
}  // namespace strrecon
