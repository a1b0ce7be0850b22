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

// Brute-force evaluation of the strong weighted adversary bound.
//
// For a weight scheme (w, w') over instances S and queries Q,
//   mu(x)   = sum_y w(x, y)
//   nu(x,q) = sum_y w'(x, y, q)
// and the bound is the minimum of sqrt(mu(x) mu(y) / (nu(x,q) nu(y,q))) over
// triples with w(x,y) > 0 and differing answers. Weights are exact rationals;
// only the final square root is floating point.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "strrecon/bitstring.hpp"
#include "strrecon/strings.hpp"

namespace strrecon {

using Weight = boost::rational<std::int64_t>;

inline const Weight kZero{0};

inline double to_double(const Weight& w) { return boost::rational_cast<double>(w); }

template <class X, class Q>
struct AdversaryInstance {
    std::vector<X> instances;
    std::vector<Q> queries;
    std::function<bool(const X&, const Q&)> answer;
    std::function<bool(const X&, const X&)> same_target;
    std::function<Weight(const X&, const X&)> w;
    std::function<Weight(const X&, const X&, const Q&)> w_prime;
    /// Optional: a superset of every y with w(x,y) or some w'(x,y,q) nonzero.
    /// Unset means "all instances".
    std::function<std::vector<X>(const X&)> partners;
    /// Optional: a superset of every q on which x and y answer differently.
    /// Unset means "all queries".
    std::function<std::vector<Q>(const X&, const X&)> distinguishing;
};

template <class X, class Q>
struct AdversaryTriple {
    X x;
    X y;
    Q q;
    Weight mu_x;
    Weight mu_y;
    Weight nu_xq;
    Weight nu_yq;

    Weight ratio() const { return (mu_x * mu_y) / (nu_xq * nu_yq); }
};

template <class X, class Q>
struct BoundResult {
    std::optional<double> value;  // empty when no triple qualifies
    std::optional<AdversaryTriple<X, Q>> witness;
    std::size_t triples = 0;
    std::vector<std::string> violations;
};

template <class X, class Q>
class BoundEvaluator {
public:
    static constexpr std::size_t kAnswerTableLimit = std::size_t{1} << 24;
    static constexpr std::size_t kCacheLimit = std::size_t{1} << 21;
    static constexpr std::size_t kMaxViolations = 32;

    explicit BoundEvaluator(const AdversaryInstance<X, Q>& instance) : inst_(instance) {
        for (std::size_t i = 0; i < inst_.instances.size(); ++i) x_index_.emplace(inst_.instances[i], i);
        for (std::size_t i = 0; i < inst_.queries.size(); ++i) q_index_.emplace(inst_.queries[i], i);
        const std::size_t cells = inst_.instances.size() * inst_.queries.size();
        if (cells > 0 && cells <= kAnswerTableLimit) {
            table_.resize(cells);
            for (std::size_t x = 0; x < inst_.instances.size(); ++x) {
                for (std::size_t q = 0; q < inst_.queries.size(); ++q) {
                    table_[x * inst_.queries.size() + q] = inst_.answer(inst_.instances[x], inst_.queries[q]);
                }
            }
        }
    }

    std::size_t index_of(const X& x) const {
        auto it = x_index_.find(x);
        if (it == x_index_.end()) throw ContractViolation("adversary: value is not an instance");
        return it->second;
    }

    bool answer(std::size_t x, std::size_t q) const {
        if (!table_.empty()) return table_[x * inst_.queries.size() + q] != 0;
        return inst_.answer(inst_.instances[x], inst_.queries[q]);
    }

    const std::vector<std::size_t>& partners(std::size_t x) {
        auto it = partners_.find(x);
        if (it != partners_.end()) return it->second;
        std::vector<std::size_t> out;
        if (inst_.partners) {
            for (const auto& y : inst_.partners(inst_.instances[x])) out.push_back(index_of(y));
        } else {
            out.resize(inst_.instances.size());
            for (std::size_t y = 0; y < out.size(); ++y) out[y] = y;
        }
        return partners_.emplace(x, std::move(out)).first->second;
    }

    Weight mu(std::size_t x) {
        auto it = mu_.find(x);
        if (it != mu_.end()) return it->second;
        Weight sum = 0;
        for (std::size_t y : partners(x)) sum += inst_.w(inst_.instances[x], inst_.instances[y]);
        return mu_.emplace(x, sum).first->second;
    }

    Weight nu(std::size_t x, std::size_t q) {
        const std::uint64_t key = static_cast<std::uint64_t>(x) * inst_.queries.size() + q;
        auto it = nu_.find(key);
        if (it != nu_.end()) return it->second;
        Weight sum = 0;
        const auto& xv = inst_.instances[x];
        const auto& qv = inst_.queries[q];
        for (std::size_t y : partners(x)) sum += inst_.w_prime(xv, inst_.instances[y], qv);
        return nu_.emplace(key, sum).first->second;
    }

    /// Visits every qualifying triple for x in `xs` (indices). Returns the
    /// number of triples visited; scheme violations seen on the way are
    /// appended to `violations`.
    template <class Visit>
    std::size_t for_each_triple(const std::vector<std::size_t>& xs, Visit&& visit,
                                std::vector<std::string>& violations) {
        std::size_t count = 0;
        for (std::size_t x : xs) {
            trim_caches();
            const auto& xv = inst_.instances[x];
            const auto xs_partners = partners(x);
            for (std::size_t y : xs_partners) {
                const auto& yv = inst_.instances[y];
                const Weight wxy = inst_.w(xv, yv);
                if (wxy <= kZero) continue;
                if (inst_.w(yv, xv) != wxy) report(violations, "w not symmetric", x, y);
                if (inst_.same_target(xv, yv)) report(violations, "w > 0 on equal targets", x, y);
                for (std::size_t q : candidate_queries(x, y)) {
                    if (answer(x, q) == answer(y, q)) continue;
                    const auto& qv = inst_.queries[q];
                    const Weight fwd = inst_.w_prime(xv, yv, qv);
                    const Weight back = inst_.w_prime(yv, xv, qv);
                    if (fwd < kZero || back < kZero || fwd * back < wxy * wxy) {
                        report(violations, "w'(x,y,q) w'(y,x,q) < w(x,y)^2", x, y);
                    }
                    AdversaryTriple<X, Q> t{xv, yv, qv, mu(x), mu(y), nu(x, q), nu(y, q)};
                    if (t.nu_xq <= kZero || t.nu_yq <= kZero) {
                        report(violations, "nu vanishes on a distinguishing triple", x, y);
                        continue;
                    }
                    ++count;
                    visit(t);
                }
            }
        }
        return count;
    }

    BoundResult<X, Q> evaluate(const std::vector<X>* sample = nullptr) {
        std::vector<std::size_t> xs;
        if (sample) {
            for (const auto& x : *sample) xs.push_back(index_of(x));
        } else {
            xs.resize(inst_.instances.size());
            for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = i;
        }
        BoundResult<X, Q> result;
        std::optional<Weight> best;
        result.triples = for_each_triple(
            xs,
            [&](const AdversaryTriple<X, Q>& t) {
                const Weight r = t.ratio();
                if (!best || r < *best) {
                    best = r;
                    result.witness = t;
                }
            },
            result.violations);
        if (best) result.value = std::sqrt(to_double(*best));
        return result;
    }

private:
    std::vector<std::size_t> candidate_queries(std::size_t x, std::size_t y) {
        std::vector<std::size_t> out;
        if (inst_.distinguishing) {
            for (const auto& q : inst_.distinguishing(inst_.instances[x], inst_.instances[y])) {
                auto it = q_index_.find(q);
                if (it != q_index_.end()) out.push_back(it->second);
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        } else {
            out.resize(inst_.queries.size());
            for (std::size_t q = 0; q < out.size(); ++q) out[q] = q;
        }
        return out;
    }

    void trim_caches() {
        if (nu_.size() > kCacheLimit) nu_.clear();
        if (partners_.size() > kCacheLimit / 64) partners_.clear();
        if (mu_.size() > kCacheLimit) mu_.clear();
    }

    static void report(std::vector<std::string>& out, const char* what, std::size_t x, std::size_t y) {
        if (out.size() < kMaxViolations) {
            out.push_back(std::string(what) + " at instances #" + std::to_string(x) + ", #" + std::to_string(y));
        }
    }

    const AdversaryInstance<X, Q>& inst_;
    std::map<X, std::size_t> x_index_;
    std::map<Q, std::size_t> q_index_;
    std::vector<std::uint8_t> table_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> partners_;
    std::unordered_map<std::size_t, Weight> mu_;
    std::unordered_map<std::uint64_t, Weight> nu_;
};

template <class X, class Q>
BoundResult<X, Q> evaluate_bound(const AdversaryInstance<X, Q>& instance, const std::vector<X>* sample = nullptr) {
    return BoundEvaluator<X, Q>(instance).evaluate(sample);
}

/// Exhaustive check of the weight-scheme conditions over x in `sample` (all
/// instances when null), every y and every q. Also checks that the optional
/// partner and distinguishing hooks are true supersets.
template <class X, class Q>
std::vector<std::string> check_scheme(const AdversaryInstance<X, Q>& inst, const std::vector<X>* sample = nullptr) {
    std::vector<std::string> problems;
    auto note = [&](const std::string& what, const X& x, const X& y) {
        if (problems.size() < 32) {
            std::ostringstream os;
            os << what << " (x=" << x << ", y=" << y << ")";
            problems.push_back(os.str());
        }
    };
    const auto& xs = sample ? *sample : inst.instances;
    for (const auto& x : xs) {
        std::vector<X> partners;
        if (inst.partners) {
            partners = inst.partners(x);
            std::sort(partners.begin(), partners.end());
        }
        for (const auto& y : inst.instances) {
            const Weight w = inst.w(x, y);
            const bool is_partner = !inst.partners || std::binary_search(partners.begin(), partners.end(), y);
            if (w < kZero) note("negative w", x, y);
            if (w != inst.w(y, x)) note("w not symmetric", x, y);
            if (inst.same_target(x, y) && w != kZero) note("w nonzero on equal targets", x, y);
            if (w != kZero && !is_partner) note("partners hook misses a weighted pair", x, y);
            std::vector<Q> dist;
            if (inst.distinguishing) {
                dist = inst.distinguishing(x, y);
                std::sort(dist.begin(), dist.end());
            }
            for (const auto& q : inst.queries) {
                const Weight wp = inst.w_prime(x, y, q);
                const bool differ = inst.answer(x, q) != inst.answer(y, q);
                if (wp < kZero) note("negative w'", x, y);
                if ((!differ || inst.same_target(x, y)) && wp != kZero) note("w' nonzero where it must vanish", x, y);
                if (wp != kZero && !is_partner) note("partners hook misses a weighted triple", x, y);
                if (differ && !inst.same_target(x, y)) {
                    if (wp * inst.w_prime(y, x, q) < w * w) note("w'(x,y,q) w'(y,x,q) < w(x,y)^2", x, y);
                    if (inst.distinguishing && w != kZero && !std::binary_search(dist.begin(), dist.end(), q)) {
                        note("distinguishing hook misses a query", x, y);
                    }
                }
            }
        }
    }
    return problems;
}

// ---------------------------------------------------------------------------
// Anchored-substring scheme over blocks of ceil(log2 n) symbols.

struct AnchoredQuery {
    std::size_t index = 0;
    Bitstring s;

    friend bool operator==(const AnchoredQuery&, const AnchoredQuery&) = default;
    friend std::strong_ordering operator<=>(const AnchoredQuery& a, const AnchoredQuery& b) {
        if (auto c = a.index <=> b.index; c != 0) return c;
        return a.s <=> b.s;
    }
    friend std::ostream& operator<<(std::ostream& os, const AnchoredQuery& q) {
        return os << '(' << q.index << ',' << q.s << ')';
    }
};

inline bool anchored_answer(const Bitstring& x, const AnchoredQuery& q) {
    return q.index <= x.size() && q.s.size() <= x.size() - q.index &&
           x.view().substr(q.index, q.s.size()) == q.s.view();
}

/// X seen as n / L symbols over an alphabet of M = 2^L, L = ceil(log2 n).
struct BlockView {
    std::size_t n = 0;
    std::size_t block_len = 0;
    std::size_t alphabet = 0;  // M
    std::size_t blocks = 0;

    static BlockView for_length(std::size_t n) {
        if (n < 2) throw ContractViolation("BlockView: n must be at least 2");
        BlockView v;
        v.n = n;
        v.block_len = ceil_log2(n);
        if (n % v.block_len != 0) {
            throw ContractViolation("BlockView: block length " + std::to_string(v.block_len) + " does not divide n = " +
                                    std::to_string(n));
        }
        v.alphabet = std::size_t{1} << v.block_len;
        v.blocks = n / v.block_len;
        return v;
    }

    std::size_t block_of(std::size_t pos) const { return pos / block_len; }

    std::size_t distance(const Bitstring& x, const Bitstring& y) const {
        std::size_t d = 0;
        for (std::size_t j = 0; j < blocks; ++j) {
            if (x.view().substr(j * block_len, block_len) != y.view().substr(j * block_len, block_len)) ++d;
        }
        return d;
    }

    /// Index of the one block where x and y differ, if they differ in exactly one.
    std::optional<std::size_t> single_difference(const Bitstring& x, const Bitstring& y) const {
        std::optional<std::size_t> found;
        for (std::size_t j = 0; j < blocks; ++j) {
            if (x.view().substr(j * block_len, block_len) != y.view().substr(j * block_len, block_len)) {
                if (found) return std::nullopt;
                found = j;
            }
        }
        return found;
    }
};

/// (a, l, b): a trailing letters of one block, l whole blocks, b leading
/// letters of the next. Reads inside a single block that do not cover it
/// entirely have shape (length, 0, 0).
struct QueryShape {
    std::size_t a = 0;
    std::size_t l = 0;
    std::size_t b = 0;

    friend bool operator==(const QueryShape&, const QueryShape&) = default;
};

inline QueryShape shape_of(const BlockView& view, std::size_t index, std::size_t length) {
    const std::size_t L = view.block_len;
    const bool one_block = view.block_of(index) == view.block_of(index + length - 1);
    if (one_block && !(index % L == 0 && length == L)) return {length, 0, 0};
    const std::size_t a = (L - index % L) % L;
    const std::size_t rest = length - a;
    return {a, rest / L, rest % L};
}

/// Materializes Q(a, l, b) for strings of length n.
inline std::vector<AnchoredQuery> query_set(std::size_t a, std::size_t l, std::size_t b, std::size_t n) {
    const auto view = BlockView::for_length(n);
    const std::size_t L = view.block_len;
    if (a >= L || b >= L || l > view.blocks) throw ContractViolation("query_set: parameter out of range");
    if (a == 0 && l == 0) throw ContractViolation("query_set: (a, l) must not be (0, 0)");

    std::vector<std::pair<std::size_t, std::size_t>> windows;  // (index, length)
    if (l == 0 && b == 0) {
        for (std::size_t j = 0; j < view.blocks; ++j) {
            for (std::size_t i = j * L; i + a <= (j + 1) * L; ++i) windows.emplace_back(i, a);
        }
    } else {
        const std::size_t len = a + l * L + b;
        for (std::size_t j = (a > 0 ? 1 : 0); j <= view.blocks; ++j) {
            const std::size_t i = j * L - a;
            if (i + len <= n) windows.emplace_back(i, len);
        }
    }
    std::vector<AnchoredQuery> out;
    for (auto [i, len] : windows) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            out.push_back({i, Bitstring::from_uint(bits, len)});
        }
    }
    return out;
}

/// All shapes (a, l, b) that yield a nonempty query set for length n.
inline std::vector<QueryShape> query_shapes(std::size_t n) {
    const auto view = BlockView::for_length(n);
    std::vector<QueryShape> shapes;
    for (std::size_t a = 0; a < view.block_len; ++a) {
        for (std::size_t l = 0; l <= view.blocks; ++l) {
            for (std::size_t b = 0; b < view.block_len; ++b) {
                if (a == 0 && l == 0) continue;
                if (l == 0 && b > 0 && a == 0) continue;
                if (a + l * view.block_len + b > n) continue;
                shapes.push_back({a, l, b});
            }
        }
    }
    return shapes;
}

/// (w, w') for the block scheme.
inline std::pair<Weight, Weight> b1_weights(const BlockView& view, const Bitstring& x, const Bitstring& y,
                                            const AnchoredQuery& q) {
    const auto diff = view.single_difference(x, y);
    if (!diff) return {Weight(0), Weight(0)};
    const Weight w(1);
    const bool tx = anchored_answer(x, q);
    if (tx == anchored_answer(y, q)) return {w, Weight(0)};

    const std::size_t L = view.block_len;
    const auto shape = shape_of(view, q.index, q.s.size());
    const std::size_t first = view.block_of(q.index);
    const std::size_t last = view.block_of(q.index + q.s.size() - 1);
    const bool fully_read = *diff * L >= q.index && (*diff + 1) * L <= q.index + q.s.size();
    if (*diff < first || *diff > last) {
        throw InvariantViolation("b1_weights: answers differ but the differing block is not read");
    }
    const auto l1 = static_cast<std::int64_t>(shape.l + 1);
    if (fully_read) return {w, Weight(1)};
    return {w, tx ? Weight(l1) : Weight(1, l1)};
}

inline AdversaryInstance<Bitstring, AnchoredQuery> b1_scheme(std::size_t n) {
    const auto view = BlockView::for_length(n);
    if (n > 20) throw ContractViolation("b1_scheme: n above desk scale");
    AdversaryInstance<Bitstring, AnchoredQuery> inst;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) inst.instances.push_back(Bitstring::from_uint(v, n));
    for (const auto& s : query_shapes(n)) {
        auto part = query_set(s.a, s.l, s.b, n);
        inst.queries.insert(inst.queries.end(), part.begin(), part.end());
    }
    std::sort(inst.queries.begin(), inst.queries.end());
    inst.answer = anchored_answer;
    inst.same_target = [](const Bitstring& x, const Bitstring& y) { return x == y; };
    inst.w = [view](const Bitstring& x, const Bitstring& y) {
        return Weight(view.single_difference(x, y) ? 1 : 0);
    };
    inst.w_prime = [view](const Bitstring& x, const Bitstring& y, const AnchoredQuery& q) {
        return b1_weights(view, x, y, q).second;
    };
    inst.partners = [view](const Bitstring& x) {
        std::vector<Bitstring> out;
        const std::size_t L = view.block_len;
        for (std::size_t j = 0; j < view.blocks; ++j) {
            for (std::uint64_t v = 0; v < view.alphabet; ++v) {
                const Bitstring block = Bitstring::from_uint(v, L);
                if (block.view() == x.view().substr(j * L, L)) continue;
                out.push_back(x.prefix(j * L) + block + x.suffix(view.n - (j + 1) * L));
            }
        }
        return out;
    };
    inst.distinguishing = [view](const Bitstring& x, const Bitstring& y) {
        std::vector<AnchoredQuery> out;
        const auto diff = view.single_difference(x, y);
        if (!diff) return out;
        const std::size_t lo = *diff * view.block_len;
        const std::size_t hi = lo + view.block_len;  // exclusive
        for (std::size_t i = 0; i < hi; ++i) {
            for (std::size_t len = std::max<std::size_t>(1, lo + 1 > i ? lo + 1 - i : 1); i + len <= view.n; ++len) {
                out.push_back({i, x.substr(i, len)});
                out.push_back({i, y.substr(i, len)});
            }
        }
        return out;
    };
    return inst;
}

/// Closed-form and inequality audit of the block scheme over sampled x.
struct B1Audit {
    std::size_t triples = 0;
    std::size_t product_violations = 0;  // nu(X,q) nu(Y,q) >= 3 M^2
    std::size_t nu_x_violations = 0;     // nu(X,q) >= 3 (l+1) M with tau(X;q) = 1
    std::size_t nu_y_unexpected = 0;     // nu(Y,q) outside {1, M/(2^a (l+1)), M/(2^b (l+1))}
    std::size_t closed_form_checked = 0;
    std::size_t closed_form_m_matches = 0;  // (M - M/2^b) term
    std::size_t closed_form_n_matches = 0;  // (M - n/2^b) term
    Weight max_product = 0;
    std::vector<std::string> scheme_violations;
};

inline B1Audit audit_b1(std::size_t n, const std::vector<Bitstring>& sample) {
    const auto view = BlockView::for_length(n);
    const auto inst = b1_scheme(n);
    BoundEvaluator<Bitstring, AnchoredQuery> eval(inst);
    std::vector<std::size_t> xs;
    for (const auto& x : sample) xs.push_back(eval.index_of(x));

    const auto M = static_cast<std::int64_t>(view.alphabet);
    const auto N = static_cast<std::int64_t>(n);
    B1Audit audit;
    audit.triples = eval.for_each_triple(
        xs,
        [&](const AdversaryTriple<Bitstring, AnchoredQuery>& t) {
            // Orient so that `one` answers 1.
            const bool x_one = anchored_answer(t.x, t.q);
            const Weight nu_one = x_one ? t.nu_xq : t.nu_yq;
            const Weight nu_zero = x_one ? t.nu_yq : t.nu_xq;
            const auto shape = shape_of(view, t.q.index, t.q.s.size());
            const auto l1 = static_cast<std::int64_t>(shape.l + 1);
            const Weight pa(std::int64_t{1} << shape.a);
            const Weight pb(std::int64_t{1} << shape.b);

            const Weight product = nu_one * nu_zero;
            if (product > audit.max_product) audit.max_product = product;
            if (product >= Weight(3 * M * M)) ++audit.product_violations;
            if (nu_one >= Weight(3 * l1 * M)) ++audit.nu_x_violations;
            if (nu_zero != Weight(1) && nu_zero != Weight(M) / (pa * l1) && nu_zero != Weight(M) / (pb * l1)) {
                ++audit.nu_y_unexpected;
            }

            const Weight head = (Weight(M) - Weight(M) / pa) * l1 + Weight(static_cast<std::int64_t>(shape.l) * (M - 1));
            const Weight with_m = head + (Weight(M) - Weight(M) / pb) * l1;
            const Weight with_n = head + (Weight(M) - Weight(N) / pb) * l1;
            ++audit.closed_form_checked;
            if (nu_one == with_m) ++audit.closed_form_m_matches;
            if (nu_one == with_n) ++audit.closed_form_n_matches;
        },
        audit.scheme_violations);
    return audit;
}

/// Deterministic sample of `count` distinct instances of length n.
inline std::vector<Bitstring> sample_instances(std::size_t n, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Bitstring> out;
    const std::uint64_t space = std::uint64_t{1} << n;
    count = std::min<std::uint64_t>(count, space);
    std::vector<std::uint64_t> seen;
    while (out.size() < count) {
        const std::uint64_t v = rng() & (space - 1);
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
        seen.push_back(v);
        out.push_back(Bitstring::from_uint(v, n));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Unit-weight scheme over substring queries with restricted lengths.

/// S = {0,1}^n, Q = substring queries with |q| >= long_cutoff or
/// |q| <= short_cutoff, unit weights on every distinguishable pair.
inline AdversaryInstance<Bitstring, Bitstring> c_scheme(std::size_t n, std::size_t long_cutoff,
                                                        std::size_t short_cutoff) {
    if (n < 1 || n > 16) throw ContractViolation("c_scheme: n outside [1, 16]");
    AdversaryInstance<Bitstring, Bitstring> inst;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) inst.instances.push_back(Bitstring::from_uint(v, n));
    for (std::size_t len = 1; len <= n; ++len) {
        if (len < long_cutoff && len > short_cutoff) continue;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) inst.queries.push_back(Bitstring::from_uint(v, len));
    }
    inst.answer = [](const Bitstring& x, const Bitstring& q) { return is_substring(q, x); };
    inst.same_target = [](const Bitstring& x, const Bitstring& y) { return x == y; };
    inst.w = [](const Bitstring& x, const Bitstring& y) { return Weight(x == y ? 0 : 1); };
    inst.w_prime = [](const Bitstring& x, const Bitstring& y, const Bitstring& q) {
        return Weight(x != y && is_substring(q, x) != is_substring(q, y) ? 1 : 0);
    };
    return inst;
}

/// Union bound on how many length-n strings contain a given q.
inline std::uint64_t c_scheme_long_query_cap(std::size_t n, std::size_t q_len) {
    return static_cast<std::uint64_t>(n - q_len + 1) << (n - q_len);
}

}  // namespace strrecon
