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

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qdk/polyring.hpp"

namespace {

using namespace qdk;

Poly P(FieldSpec f, std::vector<elem_t> c) { return Poly(f, std::move(c)); }

Poly random_poly(FieldSpec f, std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<elem_t> coef(0, f->q() - 1);
    std::vector<elem_t> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = coef(rng);
    return P(f, c);
}

// Orbits of n-subsets of GF(q) under r -> a r + b: the root-set picture of
// the affine action on split polynomials.
std::uint64_t affine_orbits_on_root_sets(std::uint64_t n, std::uint64_t q) {
    FieldSpec f = field_of_order(q);
    std::set<std::set<elem_t>> seen;
    std::uint64_t orbits = 0;
    for (std::uint64_t mask = 0; mask < (1ull << q); ++mask) {
        if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != n) continue;
        std::set<elem_t> roots;
        for (elem_t x = 0; x < q; ++x)
            if (mask >> x & 1) roots.insert(x);
        if (seen.count(roots)) continue;
        ++orbits;
        for (elem_t a = 1; a < q; ++a)
            for (elem_t b = 0; b < q; ++b) {
                std::set<elem_t> img;
                for (elem_t r : roots) img.insert(f->add(f->mul(a, r), b));
                seen.insert(img);
            }
    }
    return orbits;
}

TEST(PolyArith, Examples) {
    auto f2 = field_create(2, 1);
    EXPECT_EQ((P(f2, {1, 1}) * P(f2, {1, 1})).str(), "x^2+1");
    auto a = P(f2, {1, 0, 1, 1});
    EXPECT_EQ(a + Poly::zero(f2), a);
    auto f3 = field_create(3, 1);
    auto [q, r] = divmod(Poly::xn_minus_1(f3, 3), P(f3, {2, 1}));
    EXPECT_EQ(q.str(), "x^2+x+1");
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(Poly::zero(f3).degree(), Poly::zero_degree);
}

TEST(PolyArith, Errors) {
    auto f2 = field_create(2, 1), f3 = field_create(3, 1);
    try {
        (void)(P(f2, {1}) + P(f3, {1}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::spec_mismatch);
    }
    try {
        divmod(P(f2, {1, 1}), Poly::zero(f2));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::division_by_zero);
    }
}

TEST(PolyArith, DivmodRoundTrip) {
    std::mt19937 rng(11);
    for (auto spec : {field_create(2, 1), field_create(3, 1), field_create(2, 2), field_create(5, 1), field_create(3, 2)}) {
        for (int i = 0; i < 300; ++i) {
            Poly a = random_poly(spec, rng, 9), b = random_poly(spec, rng, 5);
            if (b.is_zero()) continue;
            auto [q, r] = divmod(a, b);
            ASSERT_EQ(q * b + r, a);
            ASSERT_LT(r.degree(), b.degree());
        }
    }
}

TEST(PolyGcd, Examples) {
    auto f2 = field_create(2, 1), f3 = field_create(3, 1);
    EXPECT_EQ(poly_gcd(P(f3, {1, 2}), Poly::zero(f3)), P(f3, {1, 2}).monic());
    EXPECT_EQ(poly_gcd(P(f2, {0, 1, 1}), P(f2, {1, 0, 1})).str(), "x+1");
    EXPECT_EQ(poly_gcd(P(f2, {0, 1}), P(f2, {1, 1})).str(), "1");
    try {
        poly_gcd(Poly::zero(f2), Poly::zero(f2));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::both_zero);
    }
}

TEST(Cosets, Examples) {
    EXPECT_EQ(cyclotomic_cosets(7, 2).cosets, (std::vector<std::vector<std::uint64_t>>{{0}, {1, 2, 4}, {3, 5, 6}}));
    EXPECT_EQ(cyclotomic_cosets(3, 2).cosets, (std::vector<std::vector<std::uint64_t>>{{0}, {1, 2}}));
    EXPECT_EQ(cyclotomic_cosets(1, 5).cosets, (std::vector<std::vector<std::uint64_t>>{{0}}));
    try {
        cyclotomic_cosets(4, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::not_coprime);
    }
}

TEST(FactorXn1, Examples) {
    auto f2 = field_create(2, 1);
    auto render = [](const std::vector<Poly>& v) {
        std::vector<std::string> out;
        for (const auto& p : v) out.push_back(p.str());
        return out;
    };
    EXPECT_EQ(render(factor_xn_minus_1(3, f2)), (std::vector<std::string>{"x+1", "x^2+x+1"}));
    EXPECT_EQ(render(factor_xn_minus_1(7, f2)), (std::vector<std::string>{"x+1", "x^3+x+1", "x^3+x^2+1"}));
    try {
        factor_xn_minus_1(2, f2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::not_coprime);
    }
}

TEST(FactorXn1, ProductCountAndDegrees) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        FieldSpec spec = field_of_order(q);
        for (std::uint64_t n = 1; n <= 30; ++n) {
            if (std::gcd(n, q) != 1) continue;
            auto factors = factor_xn_minus_1(n, spec);
            auto part = cyclotomic_cosets(n, q);
            ASSERT_EQ(factors.size(), part.cosets.size()) << n << " " << q;
            Poly prod = Poly::constant(spec, 1);
            for (const auto& g : factors) {
                prod = prod * g;
                ASSERT_EQ(g.lead(), 1u);
                ASSERT_TRUE(is_irreducible(g)) << g.str();
            }
            ASSERT_EQ(prod, Poly::xn_minus_1(spec, n)) << n << " " << q;
            std::multiset<std::size_t> degs, sizes;
            for (const auto& g : factors) degs.insert(static_cast<std::size_t>(g.degree()));
            for (const auto& c : part.cosets) sizes.insert(c.size());
            ASSERT_EQ(degs, sizes);
            for (std::size_t i = 1; i < factors.size(); ++i) ASSERT_LE(factors[i - 1].str(), factors[i].str());
        }
    }
}

TEST(Irreducibility, CanonicalIrreducibleMatchesFieldModulus) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
        Poly f = canonical_irreducible(field_create(p, 1), m);
        auto mod = field_create(p, m)->modulus();
        EXPECT_EQ(f.c, std::vector<elem_t>(mod.begin(), mod.end()));
    }
    // Over GF(4): the least monic irreducible quadratic with nonzero constant.
    auto f4 = field_create(2, 2);
    Poly g = canonical_irreducible(f4, 2);
    EXPECT_TRUE(is_irreducible(g));
    // a quadratic is irreducible iff it has no root
    std::optional<Poly> first;
    for (std::uint64_t k0 = 1; k0 < 4 && !first; ++k0)
        for (std::uint64_t k1 = 0; k1 < 4 && !first; ++k1) {
            elem_t c0 = 0, c1 = 0;
            for (elem_t a = 0; a < 4; ++a) {
                if (f4->lex_key(a) == k0) c0 = a;
                if (f4->lex_key(a) == k1) c1 = a;
            }
            Poly cand = P(f4, {c0, c1, 1});
            bool root = false;
            for (elem_t x = 0; x < 4; ++x) root = root || cand.eval(x) == 0;
            if (!root) first = cand;
        }
    ASSERT_TRUE(first.has_value());
    EXPECT_EQ(g, *first);
    EXPECT_EQ(canonical_irreducible(field_create(3, 1), 1).str(), "x+1");
}

TEST(Rendering, DescendingPowers) {
    auto f3 = field_create(3, 1);
    EXPECT_EQ(P(f3, {2, 0, 2}).str(), "2x^2+2");
    EXPECT_EQ(P(f3, {0, 1}).str(), "x");
    EXPECT_EQ(Poly::zero(f3).str(), "0");
    auto f4 = field_create(2, 2);
    EXPECT_EQ(P(f4, {1, 2, 1}).str(), "x^2+[0,1]x+1");
}

TEST(FallingFactorial, Examples) {
    EXPECT_EQ(falling_factorial(3, 2), 6);
    EXPECT_EQ(falling_factorial(9, 0), 1);
    EXPECT_EQ(falling_factorial(5, 3), 60);
}

TEST(Stirling, Examples) {
    for (std::uint64_t n = 0; n < 8; ++n) EXPECT_EQ(stirling_first(n, n), 1);
    EXPECT_EQ(stirling_first(3, 1), 2);
    EXPECT_EQ(stirling_first(3, 2), -3);
    bigint sum = 0;
    for (std::uint64_t k = 0; k <= 3; ++k) sum += stirling_first(3, k) * boost::multiprecision::pow(bigint(5), k);
    EXPECT_EQ(sum, 60);
    try {
        stirling_first(2, 3);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::index_out_of_range);
    }
}

TEST(Stirling, GeneratesFallingFactorial) {
    for (std::uint64_t n = 0; n <= 10; ++n)
        for (std::int64_t q = 0; q <= 16; ++q) {
            bigint sum = 0;
            for (std::uint64_t k = 0; k <= n; ++k)
                sum += stirling_first(n, k) * boost::multiprecision::pow(bigint(q), static_cast<unsigned>(k));
            ASSERT_EQ(sum, falling_factorial(q, n)) << n << " " << q;
        }
}

TEST(SplitFormula, ExactRationals) {
    EXPECT_EQ(count_split_polys_formula(1, 2), rational(1));
    EXPECT_EQ(count_split_polys_formula(2, 3), rational(3, 2));
    EXPECT_EQ(count_split_polys_formula(2, 2), rational(2));
    EXPECT_THROW(count_split_polys_formula(2, 1), error);
}

TEST(BruteSplit, Examples) {
    EXPECT_EQ(brute_count_split_polys(2, 2, split_mode::monic_distinct_roots), 1);
    EXPECT_EQ(brute_count_split_polys(2, 3, split_mode::monic_distinct_roots), 3);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) EXPECT_EQ(brute_count_split_polys(1, q, split_mode::monic_distinct_roots), q);
}

TEST(BruteSplit, MatchesBinomial) {
    for (std::uint64_t q : {2, 3, 4, 5, 7})
        for (std::uint64_t n = 1; n <= q; ++n)
            ASSERT_EQ(brute_count_split_polys(n, q, split_mode::monic_distinct_roots),
                      binomial(static_cast<std::int64_t>(q), static_cast<std::int64_t>(n)))
                << n << " " << q;
}

TEST(BruteSplit, AffineOrbitsMatchRootSetOrbits) {
    for (std::uint64_t q : {2, 3, 4, 5})
        for (std::uint64_t n = 1; n <= q; ++n)
            ASSERT_EQ(brute_count_split_polys(n, q, split_mode::affine_orbits), affine_orbits_on_root_sets(n, q))
                << n << " " << q;
    EXPECT_EQ(brute_count_split_polys(1, 5, split_mode::affine_orbits), 1);
}

TEST(BruteSplit, ThreadCountDoesNotChangeResult) {
    set_thread_budget(4);
    auto a = brute_count_split_polys(4, 7, split_mode::monic_distinct_roots);
    auto b = brute_count_split_polys(3, 5, split_mode::affine_orbits);
    set_thread_budget(1);
    EXPECT_EQ(a, brute_count_split_polys(4, 7, split_mode::monic_distinct_roots));
    EXPECT_EQ(b, brute_count_split_polys(3, 5, split_mode::affine_orbits));
}

TEST(BruteSplit, Cap) {
    try {
        brute_count_split_polys(9, 7, split_mode::monic_distinct_roots);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::cap_exceeded);
    }
}

}  // namespace
