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

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "grassmann.hpp"
#include "polyring.hpp"

namespace qdk {

/// The ideal generated by g(x) = prod_{j in J} (x - beta^j) in
/// GF(q)[x]/(x^n - 1), beta = alpha^((q^l - 1)/n) for the primitive alpha of the
/// splitting field GF(q^l).
struct CyclicCode {
    FieldSpec spec;
    std::size_t n = 0;
    std::vector<std::uint64_t> root_exponents;
    Poly gen_poly;
    std::size_t k = 0;

    /// h(x) = (x^n - 1) / g(x).
    Poly check_poly() const { return divmod(Poly::xn_minus_1(spec, n), gen_poly).first; }
};

/// Row space of a full-rank generator matrix, kept in RREF.
struct LinearCode {
    Subspace rows;

    FieldSpec spec() const { return rows.spec; }
    std::size_t n() const { return rows.n; }
    std::size_t k() const { return rows.k; }

    bool contains(std::span<const elem_t> word) const { return contains_vector(rows, word); }
};

struct CodeParams {
    std::size_t n = 0, k = 0, d = 0;
    bool mds = false;
};

inline CodeParams make_code_params(std::size_t n, std::size_t k, std::size_t d) {
    if (d < 1 || d + k > n + 1) raise(errc::internal, "Singleton bound violated");
    return {n, k, d, d + k == n + 1};
}

inline CyclicCode cyclic_code_from_roots(std::uint64_t n, std::uint64_t q, std::vector<std::uint64_t> roots) {
    FieldSpec spec = field_of_order(q);
    if (n == 0) raise(errc::bad_parameters, "length must be positive");
    if (std::gcd(n, q) != 1) raise(errc::not_coprime, "gcd(n, q) != 1");
    for (auto j : roots)
        if (j >= n) raise(errc::bad_parameters, "root exponent " + std::to_string(j) + " is not in Z_n");
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (auto j : roots)
        if (!std::binary_search(roots.begin(), roots.end(), j * (q % n) % n))
            raise(errc::not_coset_closed, "root set is not closed under multiplication by q mod n (" + std::to_string(j) +
                                              " -> " + std::to_string(j * q % n) + ")");
    if (roots.size() >= n) raise(errc::bad_parameters, "root set must be a proper subset of Z_n");
    SplittingField sf = splitting_field(n, spec);
    Poly g = root_product(sf, spec, roots);
    return {spec, n, roots, g, n - roots.size()};
}

/// Rows x^i g(x), i < k, reduced to RREF.
inline LinearCode code_to_linear(const CyclicCode& c) {
    std::vector<elem_t> rows(c.k * c.n, 0);
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.gen_poly.c.size(); ++j) rows[i * c.n + i + j] = c.gen_poly.c[j];
    return {subspace_from_matrix(c.spec, c.n, std::move(rows))};
}

/// Exhaustive minimum weight over the q^k - 1 nonzero codewords.
inline CodeParams min_distance(const LinearCode& code) {
    const std::size_t n = code.n(), k = code.k();
    if (k == 0) raise(errc::bad_parameters, "the zero code has no minimum distance");
    const Field& f = *code.spec();
    const std::uint64_t q = f.q();
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < k; ++i) {
        words *= q;
        require_within_cap(words, caps::codewords, "codeword enumeration");
    }
    const std::size_t chunks = 64;
    std::vector<std::size_t> best(chunks, n);
    detail::parallel_chunks(words - 1, chunks, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        std::vector<elem_t> word(n);
        for (std::uint64_t idx = lo + 1; idx < hi + 1; ++idx) {
            std::fill(word.begin(), word.end(), 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < k; ++i, v /= q) {
                elem_t coef = static_cast<elem_t>(v % q);
                if (coef == 0) continue;
                auto row = code.rows.row(i);
                for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(coef, row[j]));
            }
            auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](elem_t x) { return x != 0; }));
            best[c] = std::min(best[c], w);
        }
    });
    return make_code_params(n, k, *std::min_element(best.begin(), best.end()));
}

/// (1, x, ..., x^deg) for x in GF(q) in code order, then (0, ..., 0, 1).
inline std::vector<Subspace> nrc_points(std::size_t deg, std::uint64_t q) {
    if (deg < 1) raise(errc::bad_parameters, "degree must be positive");
    FieldSpec f = field_of_order(q);
    std::vector<Subspace> out;
    for (elem_t x = 0; x < f->q(); ++x) {
        std::vector<elem_t> v(deg + 1);
        v[0] = 1;
        for (std::size_t i = 1; i <= deg; ++i) v[i] = f->mul(v[i - 1], x);
        out.push_back(subspace_from_matrix(f, deg + 1, std::move(v)));
    }
    std::vector<elem_t> inf(deg + 1, 0);
    inf[deg] = 1;
    out.push_back(subspace_from_matrix(f, deg + 1, std::move(inf)));
    return out;
}

/// True iff every r of the points have linearly independent representatives.
inline bool arc_check(const std::vector<Subspace>& points, std::size_t r) {
    if (points.empty()) return true;
    const FieldSpec spec = points.front().spec;
    const std::size_t n = points.front().n;
    for (const auto& p : points)
        if (!(p.spec == spec) || p.n != n || p.k != 1) raise(errc::dimension_mismatch, "arc points must be 1-subspaces of one space");
    if (r > n) raise(errc::bad_parameters, "r exceeds the ambient dimension");
    if (r == 0 || r > points.size()) return true;
    bigint subsets = binomial(static_cast<std::int64_t>(points.size()), static_cast<std::int64_t>(r));
    if (subsets > effective_cap(caps::subsets)) raise(errc::cap_exceeded, "arc check over " + subsets.str() + " subsets");
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<elem_t> stacked(r * n);
    for (;;) {
        for (std::size_t i = 0; i < r; ++i) std::copy_n(points[idx[i]].basis.begin(), n, stacked.begin() + static_cast<std::ptrdiff_t>(i * n));
        if (detail::rank(*spec, stacked, r, n) != r) return false;
        std::size_t i = r;
        while (i-- > 0)
            if (idx[i] != i + points.size() - r) break;
        if (i == static_cast<std::size_t>(-1)) return true;
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Evaluations of 1, x, ..., x^{k-1} at the first len NRC points; at infinity
/// a polynomial evaluates to its x^{k-1} coefficient.
inline LinearCode rs_code(std::uint64_t q, std::size_t k, std::size_t len) {
    FieldSpec f = field_of_order(q);
    if (k < 1 || k > len || len > q + 1) raise(errc::bad_parameters, "rs_code needs 1 <= k <= len <= q+1");
    std::vector<elem_t> g(k * len, 0);
    for (std::size_t j = 0; j < len; ++j) {
        if (j == q) {
            g[(k - 1) * len + j] = 1;
            continue;
        }
        elem_t x = static_cast<elem_t>(j), pw = 1;
        for (std::size_t i = 0; i < k; ++i) {
            g[i * len + j] = pw;
            pw = f->mul(pw, x);
        }
    }
    return {subspace_from_matrix(f, len, std::move(g))};
}

struct CyclicCount {
    std::uint64_t oracle = 0;
    std::size_t num_cosets = 0;
    std::vector<rational> formula_values;  // indexed by k = 0..n
};

/// oracle: distinct monic divisors of x^n - 1, found by multiplying out every
/// subset of its irreducible factors.
inline CyclicCount count_cyclic_codes(std::uint64_t n, std::uint64_t q) {
    FieldSpec spec = field_of_order(q);
    auto factors = factor_xn_minus_1(n, spec);
    if (factors.size() >= 63 || (std::uint64_t{1} << factors.size()) > effective_cap(caps::subsets))
        raise(errc::cap_exceeded, "too many factor subsets");
    const Poly target = Poly::xn_minus_1(spec, n);
    std::set<std::vector<elem_t>> divisors;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << factors.size()); ++mask) {
        Poly g = Poly::constant(spec, 1);
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (mask >> i & 1) g = g * factors[i];
        if ((target % g).is_zero()) divisors.insert(g.c);
    }
    CyclicCount out;
    out.oracle = divisors.size();
    out.num_cosets = cyclotomic_cosets(n, q).cosets.size();
    const auto qi = static_cast<std::int64_t>(q);
    for (std::uint64_t k = 0; k <= n; ++k) out.formula_values.emplace_back(falling_factorial(qi, k), bigint(qi) * qi - qi);
    return out;
}

}  // namespace qdk
