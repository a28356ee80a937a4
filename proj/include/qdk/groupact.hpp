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
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "grassmann.hpp"
#include "polyring.hpp"

namespace qdk {

/// Invertible n x n matrix over GF(q), row-major. Vectors are rows and act
/// by right multiplication.
struct GroupElement {
    FieldSpec spec;
    std::size_t n = 0;
    std::vector<elem_t> mat;

    elem_t at(std::size_t i, std::size_t j) const { return mat[i * n + j]; }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out += ';';
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ' ';
                out += spec->render(mat[i * n + j]);
            }
        }
        return out;
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
        return a.spec == b.spec && a.n == b.n && a.mat == b.mat;
    }
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) noexcept {
        return std::lexicographical_compare_three_way(a.mat.begin(), a.mat.end(), b.mat.begin(), b.mat.end());
    }
};

namespace detail {

inline std::vector<elem_t> mat_mul(const Field& f, std::span<const elem_t> a, std::size_t rows, std::size_t inner,
                                   std::span<const elem_t> b, std::size_t cols) {
    std::vector<elem_t> out(rows * cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            elem_t x = a[i * inner + l];
            if (x == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = f.add(out[i * cols + j], f.mul(x, b[l * cols + j]));
        }
    return out;
}

struct matrix_hash {
    std::size_t operator()(const std::vector<elem_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (elem_t x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

}  // namespace detail

inline GroupElement identity_element(FieldSpec spec, std::size_t n) { return {spec, n, full_space(spec, n).basis}; }

inline bool is_invertible(FieldSpec spec, std::size_t n, const std::vector<elem_t>& mat) {
    return detail::rank(*spec, mat, n, n) == n;
}

inline GroupElement make_group_element(FieldSpec spec, std::size_t n, std::vector<elem_t> mat) {
    if (mat.size() != n * n) raise(errc::dimension_mismatch, "matrix is not " + std::to_string(n) + "x" + std::to_string(n));
    for (elem_t v : mat)
        if (v >= spec->q()) raise(errc::bad_parameters, "matrix entry outside GF(q)");
    if (!is_invertible(spec, n, mat)) raise(errc::not_invertible, "matrix is singular");
    return {spec, n, std::move(mat)};
}

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (!(a.spec == b.spec) || a.n != b.n) raise(errc::dimension_mismatch, "matrices of different shapes or fields");
    return {a.spec, a.n, detail::mat_mul(*a.spec, a.mat, a.n, a.n, b.mat, a.n)};
}

inline GroupElement inverse(const GroupElement& g) {
    const std::size_t n = g.n, w = 2 * n;
    std::vector<elem_t> aug(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = g.mat[i * n + j];
        aug[i * w + n + i] = 1;
    }
    auto piv = detail::rref(*g.spec, aug, n, w);
    if (piv.size() < n || piv[n - 1] >= n) raise(errc::not_invertible, "matrix is singular");
    std::vector<elem_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = aug[i * w + n + j];
    return {g.spec, n, std::move(out)};
}

inline GroupElement power(GroupElement g, std::uint64_t e) {
    GroupElement r = identity_element(g.spec, g.n);
    while (e > 0) {
        if (e & 1) r = r * g;
        g = g * g;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t element_order(const GroupElement& g, std::uint64_t cap = caps::group) {
    const GroupElement id = identity_element(g.spec, g.n);
    GroupElement cur = g;
    std::uint64_t e = 1;
    const std::uint64_t limit = effective_cap(cap);
    while (!(cur == id)) {
        cur = cur * g;
        if (++e > limit) raise(errc::cap_exceeded, "element order exceeds cap");
    }
    return e;
}

/// Parses "a b;c d" (rows ';'-separated, entries space-separated).
inline GroupElement parse_matrix(FieldSpec spec, std::string_view text) {
    std::vector<elem_t> flat;
    std::size_t rows = 0, cols = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(pos, end - pos);
        std::size_t count = 0, i = 0;
        while (i < row.size()) {
            while (i < row.size() && (row[i] == ' ' || row[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < row.size() && row[j] != ' ' && row[j] != '\t') ++j;
            if (j > i) {
                flat.push_back(spec->parse(row.substr(i, j - i)));
                ++count;
            }
            i = j;
        }
        if (rows == 0) cols = count;
        if (count != cols || count == 0) raise(errc::bad_parameters, "ragged or empty matrix row in '" + std::string(text) + "'");
        ++rows;
        pos = end + 1;
    }
    if (rows != cols) raise(errc::dimension_mismatch, "matrix is not square");
    return make_group_element(spec, rows, std::move(flat));
}

struct MatrixGroup {
    FieldSpec spec;
    std::size_t n = 0;
    std::vector<GroupElement> generators;
    std::optional<std::vector<GroupElement>> elements;

    bool closed() const noexcept { return elements.has_value(); }
    std::size_t order() const {
        if (!elements) raise(errc::group_not_closed, "group elements have not been enumerated");
        return elements->size();
    }
};

inline MatrixGroup make_group(std::vector<GroupElement> generators) {
    if (generators.empty()) raise(errc::bad_parameters, "a group needs at least one generator");
    MatrixGroup g{generators.front().spec, generators.front().n, std::move(generators), std::nullopt};
    for (const auto& x : g.generators) {
        if (!(x.spec == g.spec) || x.n != g.n) raise(errc::dimension_mismatch, "generators of different shapes");
        if (!is_invertible(x.spec, x.n, x.mat)) raise(errc::not_invertible, "generator is singular");
    }
    return g;
}

/// Breadth-first closure from the identity under right multiplication by the
/// generators. Elements come out sorted by their row-major encoding.
inline MatrixGroup group_closure(std::vector<GroupElement> generators, std::uint64_t cap = caps::group) {
    MatrixGroup g = make_group(std::move(generators));
    const std::uint64_t limit = effective_cap(cap);
    std::unordered_set<std::vector<elem_t>, detail::matrix_hash> seen;
    std::vector<GroupElement> all{identity_element(g.spec, g.n)};
    seen.insert(all.front().mat);
    for (std::size_t head = 0; head < all.size(); ++head)
        for (const auto& s : g.generators) {
            GroupElement next = all[head] * s;
            if (seen.insert(next.mat).second) {
                all.push_back(std::move(next));
                if (all.size() > limit) raise(errc::cap_exceeded, "group order exceeds cap " + std::to_string(limit));
            }
        }
    std::sort(all.begin(), all.end());
    g.elements = std::move(all);
    return g;
}

/// Multiplication by a root alpha of the canonical degree-ext_n irreducible
/// over GF(p^base_m), in the basis 1, alpha, ..., alpha^{ext_n-1}: row i is the
/// image of alpha^i.
inline GroupElement singer_matrix(std::uint64_t p, std::uint64_t base_m, std::uint64_t ext_n) {
    if (ext_n < 1) raise(errc::bad_parameters, "extension degree must be positive");
    FieldSpec base = field_create(p, base_m);
    field_create(p, base_m * ext_n);
    Poly f = canonical_irreducible(base, static_cast<int>(ext_n));
    const std::size_t n = ext_n;
    std::vector<elem_t> mat(n * n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) mat[i * n + i + 1] = 1;
    for (std::size_t j = 0; j < n; ++j) mat[(n - 1) * n + j] = base->neg(f.coeff(j));
    return make_group_element(base, n, std::move(mat));
}

/// Matrix S with nu(u g) = nu(u) S for the degree-deg Veronese map
/// nu(u0, u1) = (u0^deg, u0^{deg-1} u1, ..., u1^deg). Multiplicative in g.
inline GroupElement sym_power_rep(const GroupElement& g, std::size_t deg) {
    if (g.n != 2) raise(errc::wrong_dimension, "sym_power_rep needs a 2x2 matrix");
    if (deg < 1) raise(errc::bad_parameters, "degree must be positive");
    const Field& f = *g.spec;
    // Binary forms as coefficient vectors indexed by the power of u1.
    auto times = [&](const std::vector<elem_t>& a, elem_t c0, elem_t c1) {
        std::vector<elem_t> out(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = f.add(out[i], f.mul(a[i], c0));
            out[i + 1] = f.add(out[i + 1], f.mul(a[i], c1));
        }
        return out;
    };
    const std::size_t d = deg + 1;
    std::vector<elem_t> s(d * d, 0);
    for (std::size_t e = 0; e < d; ++e) {
        // (u0 g00 + u1 g10)^{deg-e} (u0 g01 + u1 g11)^e
        std::vector<elem_t> form{1};
        for (std::size_t i = 0; i < deg - e; ++i) form = times(form, g.at(0, 0), g.at(1, 0));
        for (std::size_t i = 0; i < e; ++i) form = times(form, g.at(0, 1), g.at(1, 1));
        for (std::size_t a = 0; a < d; ++a) s[a * d + e] = form[a];
    }
    return make_group_element(g.spec, d, std::move(s));
}

/// Canonical row space of U * g.
inline Subspace act(const Subspace& u, const GroupElement& g) {
    if (!(u.spec == g.spec) || u.n != g.n) raise(errc::dimension_mismatch, "subspace and matrix do not match");
    return subspace_from_matrix(u.spec, u.n, detail::mat_mul(*u.spec, u.basis, u.k, u.n, g.mat, u.n));
}

inline std::vector<Subspace> orbit(const Subspace& u, const MatrixGroup& g) {
    if (!g.closed()) raise(errc::group_not_closed, "orbit needs an enumerated group");
    std::set<Subspace> out;
    for (const auto& x : *g.elements) out.insert(act(u, x));
    return {out.begin(), out.end()};
}

/// Every k-subspace fixed (setwise) by each generator, in enumeration order
/// sorted canonically.
inline std::vector<Subspace> invariant_subspaces(const MatrixGroup& g, std::size_t k) {
    std::vector<Subspace> out;
    auto it = enumerate_subspaces(g.spec, g.n, k);
    while (auto u = it.next()) {
        bool fixed = true;
        for (const auto& x : g.generators)
            if (!(act(*u, x) == *u)) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(std::move(*u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct TrianglePresentation {
    std::uint64_t r = 1, m = 1, w = 1;
    GroupElement x, y, z;
};

/// x^r = y^m = z^w = xyz = identity.
inline bool check_triangle_relations(const TrianglePresentation& t) {
    if (!(t.x.spec == t.y.spec && t.y.spec == t.z.spec) || t.x.n != t.y.n || t.y.n != t.z.n)
        raise(errc::dimension_mismatch, "triangle generators of different shapes");
    const GroupElement id = identity_element(t.x.spec, t.x.n);
    return power(t.x, t.r) == id && power(t.y, t.m) == id && power(t.z, t.w) == id && t.x * t.y * t.z == id;
}

/// Rotation and reflection generating a dihedral group of order 2m in
/// GL(2, q); see the README for which (q, m) are supported.
inline std::vector<GroupElement> dihedral_generators(std::uint64_t q, std::uint64_t m) {
    FieldSpec f = field_of_order(q);
    const elem_t one = 1, minus_one = f->neg(1);
    const GroupElement swap = make_group_element(f, 2, {0, 1, 1, 0});
    auto companion = [&](elem_t a) { return make_group_element(f, 2, {0, 1, minus_one, a}); };
    if (m < 2) raise(errc::bad_parameters, "dihedral groups need m >= 2");
    if (m == 2) {
        if (f->p() == 2) raise(errc::bad_parameters, "GL(2, 2^k) has no dihedral subgroup of order 4 of this form");
        return {make_group_element(f, 2, {one, 0, 0, minus_one}), make_group_element(f, 2, {minus_one, 0, 0, one})};
    }
    if (m == f->p()) return {companion(f->add(1, 1)), swap};
    if ((q - 1) % m == 0) {
        elem_t zeta = f->pow(f->primitive(), (q - 1) / m);
        return {make_group_element(f, 2, {zeta, 0, 0, f->inv(zeta)}), swap};
    }
    if ((q + 1) % m == 0) {
        FieldSpec big = field_create(f->p(), 2 * std::uint64_t{f->m()});
        elem_t zeta = big->pow(big->primitive(), (big->q() - 1) / m);
        elem_t trace = big->add(zeta, big->inv(zeta));
        auto embed = subfield_embedding(f, big);
        auto it = std::find(embed.begin(), embed.end(), trace);
        if (it == embed.end()) raise(errc::internal, "trace outside the base field");
        return {companion(static_cast<elem_t>(it - embed.begin())), swap};
    }
    raise(errc::bad_parameters, "no dihedral group of order " + std::to_string(2 * m) + " in GL(2," +
                                    std::to_string(q) + ") from this construction");
}

}  // namespace qdk
