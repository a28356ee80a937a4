/**************************************************************************
 * Copyright 2026 The qdk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <gtest/gtest.h>

#include "printers.hpp"

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "qdk/codes.hpp"

namespace {

using namespace qdk;
using Vec = std::vector<elem_t>;

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

Vec word_from_index(std::uint64_t idx, std::uint64_t q, std::size_t n) {
    Vec w(n);
    for (auto& x : w) {
        x = static_cast<elem_t>(idx % q);
        idx /= q;
    }
    return w;
}

std::size_t weight(const Vec& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](elem_t x) { return x != 0; }));
}

// c is in the cyclic code iff c(x) h(x) = 0 mod x^n - 1, tested on every
// word of GF(q)^n.
struct CyclicOracle {
    std::uint64_t size = 0;
    std::size_t d = 0;
};

CyclicOracle cyclic_oracle(const CyclicCode& c) {
    const std::uint64_t q = c.spec->q();
    const Poly h = c.check_poly(), mod = Poly::xn_minus_1(c.spec, c.n);
    CyclicOracle out{0, c.n + 1};
    for (std::uint64_t idx = 0; idx < ipow(q, c.n); ++idx) {
        Vec w = word_from_index(idx, q, c.n);
        if (!((Poly(c.spec, w) * h) % mod).is_zero()) continue;
        ++out.size;
        if (idx) out.d = std::min(out.d, weight(w));
    }
    return out;
}

// Every union of cyclotomic cosets other than Z_n itself.
std::vector<std::vector<std::uint64_t>> proper_coset_unions(std::uint64_t n, std::uint64_t q) {
    auto part = cyclotomic_cosets(n, q).cosets;
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t mask = 0; mask + 1 < (1ull << part.size()); ++mask) {
        std::vector<std::uint64_t> j;
        for (std::size_t i = 0; i < part.size(); ++i)
            if (mask >> i & 1) j.insert(j.end(), part[i].begin(), part[i].end());
        std::sort(j.begin(), j.end());
        out.push_back(j);
    }
    return out;
}

TEST(Cyclic, Examples) {
    // The canonical GF(8) has primitive root x^2 with minimal polynomial
    // x^3+x^2+1, so the coset {1,2,4} picks that factor.
    auto c = cyclic_code_from_roots(7, 2, {1, 2, 4});
    EXPECT_EQ(c.gen_poly.str(), "x^3+x^2+1");
    EXPECT_EQ(c.k, 4u);
    EXPECT_EQ(cyclic_code_from_roots(7, 2, {3, 5, 6}).gen_poly.str(), "x^3+x+1");
    auto par = cyclic_code_from_roots(7, 2, {0});
    EXPECT_EQ(par.gen_poly.str(), "x+1");
    EXPECT_EQ(par.k, 6u);
    EXPECT_EQ(c.check_poly() * c.gen_poly, Poly::xn_minus_1(c.spec, 7));
}

TEST(Cyclic, Errors) {
    try {
        cyclic_code_from_roots(7, 2, {1});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::not_coset_closed);
    }
    try {
        cyclic_code_from_roots(6, 2, {0});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::not_coprime);
    }
    try {
        cyclic_code_from_roots(3, 2, {0, 1, 2});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::bad_parameters);
    }
    EXPECT_THROW(cyclic_code_from_roots(3, 2, {3}), error);
}

TEST(Cyclic, GeneratorDividesAndMatchesOracle) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{7, 2}, {9, 2}, {11, 2}, {5, 2}, {4, 3}, {8, 3}, {5, 4}, {3, 4}, {4, 5}, {6, 5}, {4, 7}}) {
        for (const auto& j : proper_coset_unions(n, q)) {
            auto c = cyclic_code_from_roots(n, q, j);
            ASSERT_TRUE((Poly::xn_minus_1(c.spec, n) % c.gen_poly).is_zero());
            ASSERT_EQ(c.gen_poly.degree(), static_cast<int>(j.size()));
            ASSERT_EQ(c.gen_poly.lead(), 1u);
            auto lin = code_to_linear(c);
            auto oracle = cyclic_oracle(c);
            ASSERT_EQ(oracle.size, ipow(q, c.k)) << n << " " << q;
            auto params = min_distance(lin);
            ASSERT_EQ(params.d, oracle.d) << n << " " << q << " " << c.gen_poly.str();
            ASSERT_EQ(params.k, c.k);
        }
    }
}

TEST(Cyclic, ShiftClosure) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{7, 2}, {15, 2}, {9, 2}, {8, 3}, {5, 4}, {6, 5}}) {
        for (const auto& j : proper_coset_unions(n, q)) {
            auto c = cyclic_code_from_roots(n, q, j);
            if (ipow(q, c.k) > 4096) continue;
            auto lin = code_to_linear(c);
            const Field& f = *c.spec;
            for (std::uint64_t idx = 0; idx < ipow(q, c.k); ++idx) {
                Vec word(n, 0);
                std::uint64_t v = idx;
                for (std::size_t i = 0; i < c.k; ++i, v /= q)
                    for (std::size_t t = 0; t < static_cast<std::size_t>(n); ++t)
                        word[t] = f.add(word[t], f.mul(static_cast<elem_t>(v % q), lin.rows.row(i)[t]));
                Vec shifted(n);
                for (int t = 0; t < n; ++t) shifted[(t + 1) % n] = word[t];
                ASSERT_TRUE(lin.contains(shifted));
            }
        }
    }
}

TEST(CodeToLinear, Examples) {
    auto even = code_to_linear(cyclic_code_from_roots(3, 2, {0}));
    EXPECT_EQ(even.rows, subspace_from_generators(field_create(2, 1), 3, {{1, 1, 0}, {0, 1, 1}}));
    EXPECT_EQ(even.rows.str(), "1 0 1;0 1 1");
    auto ham = code_to_linear(cyclic_code_from_roots(7, 2, {1, 2, 4}));
    EXPECT_EQ(ham.k(), 4u);
    std::set<Vec> words;
    for (std::uint64_t i = 0; i < 16; ++i) {
        Vec w(7, 0);
        for (std::size_t r = 0; r < 4; ++r)
            if (i >> r & 1)
                for (std::size_t t = 0; t < 7; ++t) w[t] ^= ham.rows.row(r)[t];
        words.insert(w);
    }
    EXPECT_EQ(words.size(), 16u);
}

TEST(MinDistance, Examples) {
    auto ham = min_distance(code_to_linear(cyclic_code_from_roots(7, 2, {1, 2, 4})));
    EXPECT_EQ(ham.d, 3u);
    EXPECT_FALSE(ham.mds);
    auto f2 = field_create(2, 1);
    auto full = min_distance({full_space(f2, 5)});
    EXPECT_EQ(full.d, 1u);
    EXPECT_TRUE(full.mds);
    for (std::size_t n = 1; n <= 9; ++n) {
        auto rep = min_distance({subspace_from_generators(f2, n, {Vec(n, 1)})});
        EXPECT_EQ(rep.d, n);
        EXPECT_TRUE(rep.mds);
    }
    EXPECT_THROW(make_code_params(5, 3, 4), error);
    try {
        min_distance({full_space(f2, 30)});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::cap_exceeded);
    }
}

TEST(MinDistance, ThreadCountDoesNotChangeResult) {
    auto lin = code_to_linear(cyclic_code_from_roots(15, 2, {1, 2, 4, 8}));
    set_thread_budget(6);
    auto a = min_distance(lin);
    set_thread_budget(1);
    auto b = min_distance(lin);
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.d, 3u);
}

TEST(Nrc, Examples) {
    auto f2 = field_create(2, 1), f3 = field_create(3, 1);
    auto pts = nrc_points(2, 2);
    ASSERT_EQ(pts.size(), 3u);
    EXPECT_EQ(pts[0], subspace_from_generators(f2, 3, {{1, 0, 0}}));
    EXPECT_EQ(pts[1], subspace_from_generators(f2, 3, {{1, 1, 1}}));
    EXPECT_EQ(pts[2], subspace_from_generators(f2, 3, {{0, 0, 1}}));
    for (std::uint64_t q : {2, 3, 4, 5, 7}) EXPECT_EQ(sorted(nrc_points(1, q)), sorted(all_subspaces(field_of_order(q), 2, 1)));
    auto conic = nrc_points(2, 3);
    std::vector<Subspace> expect;
    for (Vec v : {Vec{1, 0, 0}, Vec{1, 1, 1}, Vec{1, 2, 1}, Vec{0, 0, 1}}) expect.push_back(subspace_from_generators(f3, 3, {v}));
    EXPECT_EQ(conic, expect);
}

TEST(Arc, Examples) {
    EXPECT_TRUE(arc_check(nrc_points(2, 3), 3));
    auto pts = nrc_points(2, 5);
    pts.push_back(pts[2]);
    EXPECT_FALSE(arc_check(pts, 2));
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11})
        for (std::size_t n = 1; n + 2 <= q; ++n) EXPECT_TRUE(arc_check(nrc_points(n, q), n + 1)) << q << " " << n;
}

TEST(Arc, MatchesCombinationSearch) {
    // an r-subset is dependent iff some nonzero coefficient vector kills it
    std::mt19937 rng(31);
    for (std::uint64_t q : {2, 3, 4}) {
        FieldSpec f = field_of_order(q);
        const Field& F = *f;
        auto points = all_subspaces(f, 3, 1);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Subspace> pick;
            for (const auto& p : points)
                if (rng() % 3 == 0) pick.push_back(p);
            for (std::size_t r = 1; r <= 3; ++r) {
                bool arc = true;
                std::vector<std::size_t> idx(r);
                std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
                    if (!arc) return;
                    if (pos == r) {
                        for (std::uint64_t cidx = 1; cidx < ipow(q, r); ++cidx) {
                            Vec c = word_from_index(cidx, q, r), sum(3, 0);
                            for (std::size_t i = 0; i < r; ++i)
                                for (std::size_t t = 0; t < 3; ++t) sum[t] = F.add(sum[t], F.mul(c[i], pick[idx[i]].basis[t]));
                            if (weight(sum) == 0) arc = false;
                        }
                        return;
                    }
                    for (std::size_t i = from; i < pick.size(); ++i) {
                        idx[pos] = i;
                        rec(pos + 1, i + 1);
                    }
                };
                rec(0, 0);
                ASSERT_EQ(arc_check(pick, r), arc) << q << " " << r << " " << pick.size();
            }
        }
    }
}

TEST(Rs, Examples) {
    auto a = min_distance(rs_code(4, 2, 5));
    EXPECT_EQ(a.n, 5u);
    EXPECT_EQ(a.k, 2u);
    EXPECT_EQ(a.d, 4u);
    EXPECT_TRUE(a.mds);
    auto full = rs_code(5, 4, 4);
    EXPECT_EQ(full.rows, full_space(field_create(5, 1), 4));
    EXPECT_EQ(min_distance(full).d, 1u);
    auto b = min_distance(rs_code(3, 2, 4));
    EXPECT_EQ(b.d, 3u);
    EXPECT_TRUE(b.mds);
    EXPECT_THROW(rs_code(3, 2, 5), error);
    EXPECT_THROW(rs_code(3, 0, 2), error);
    EXPECT_THROW(rs_code(3, 3, 2), error);
}

TEST(Rs, MdsByDirectEvaluation) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
        FieldSpec f = field_of_order(q);
        const Field& F = *f;
        for (std::size_t len = 1; len <= q + 1; ++len)
            for (std::size_t k = 1; k <= std::min<std::size_t>(4, len); ++k) {
                // codewords: evaluations of every polynomial of degree < k
                std::size_t dmin = len + 1;
                std::vector<Vec> words;
                for (std::uint64_t idx = 0; idx < ipow(q, k); ++idx) {
                    Vec coef = word_from_index(idx, q, k), w(len);
                    for (std::size_t j = 0; j < len; ++j) {
                        if (j == q) {
                            w[j] = coef[k - 1];
                            continue;
                        }
                        elem_t acc = 0;
                        for (std::size_t i = k; i-- > 0;) acc = F.add(F.mul(acc, static_cast<elem_t>(j)), coef[i]);
                        w[j] = acc;
                    }
                    if (idx) dmin = std::min(dmin, weight(w));
                    words.push_back(w);
                }
                auto code = rs_code(q, k, len);
                for (const auto& w : words) ASSERT_TRUE(code.contains(w));
                auto params = min_distance(code);
                ASSERT_EQ(params.k, k);
                ASSERT_EQ(params.d, dmin) << q << " " << k << " " << len;
                ASSERT_EQ(params.d, len - k + 1);
                ASSERT_TRUE(params.mds);
            }
    }
}

TEST(CountCyclic, Examples) {
    EXPECT_EQ(count_cyclic_codes(7, 2).oracle, 8u);
    EXPECT_EQ(count_cyclic_codes(1, 2).oracle, 2u);
    EXPECT_EQ(count_cyclic_codes(3, 2).oracle, 4u);
    auto c = count_cyclic_codes(3, 2);
    ASSERT_EQ(c.formula_values.size(), 4u);
    EXPECT_EQ(c.formula_values[0], rational(1, 2));
    EXPECT_EQ(c.formula_values[1], rational(1));
    EXPECT_EQ(c.formula_values[2], rational(1));
    EXPECT_EQ(c.formula_values[3], rational(0));
    try {
        count_cyclic_codes(4, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::not_coprime);
    }
}

TEST(CountCyclic, OracleIsTwoToTheCosets) {
    for (std::uint64_t q : {2, 3})
        for (std::uint64_t n = 1; n <= 20; ++n) {
            if (std::gcd(n, q) != 1) continue;
            auto c = count_cyclic_codes(n, q);
            ASSERT_EQ(c.oracle, 1ull << cyclotomic_cosets(n, q).cosets.size()) << n << " " << q;
            ASSERT_EQ(c.num_cosets, cyclotomic_cosets(n, q).cosets.size());
        }
}

}  // namespace
