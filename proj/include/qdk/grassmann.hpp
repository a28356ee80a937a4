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
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "polyring.hpp"

namespace qdk {

namespace detail {

/// In-place reduced row echelon form of a row-major rows x cols matrix.
/// Returns the pivot columns; the first pivots.size() rows span the row space
/// and the remaining rows are zero.
inline std::vector<std::size_t> rref(const Field& f, std::vector<elem_t>& a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && a[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(sel * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((sel + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(r * cols));
        elem_t inv = f.inv(a[r * cols + col]);
        for (std::size_t j = col; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            elem_t factor = a[i * cols + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const Field& f, std::vector<elem_t> a, std::size_t rows, std::size_t cols) {
    return rref(f, a, rows, cols).size();
}

}  // namespace detail

/// A k-dimensional subspace of F_q^n, stored as its k x n RREF basis.
struct Subspace {
    FieldSpec spec;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<elem_t> basis;

    std::span<const elem_t> row(std::size_t i) const { return {basis.data() + i * n, n}; }

    /// Rows separated by ';', element tokens within a row by a single space.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < k; ++i) {
            if (i) out += ';';
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ' ';
                out += spec->render(basis[i * n + j]);
            }
        }
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
        return a.spec == b.spec && a.n == b.n && a.k == b.k && a.basis == b.basis;
    }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.k <=> b.k; c != 0) return c;
        return std::lexicographical_compare_three_way(a.basis.begin(), a.basis.end(), b.basis.begin(),
                                                      b.basis.end());
    }
};

/// Canonical row space of a rows x n row-major matrix.
inline Subspace subspace_from_matrix(FieldSpec spec, std::size_t n, std::vector<elem_t> rows) {
    if (n == 0 && !rows.empty()) raise(errc::bad_parameters, "rows given for a zero-dimensional ambient space");
    if (n != 0 && rows.size() % n != 0) raise(errc::dimension_mismatch, "row length does not match ambient dimension");
    for (elem_t v : rows)
        if (v >= spec->q()) raise(errc::bad_parameters, "entry outside GF(q)");
    const std::size_t r = n == 0 ? 0 : rows.size() / n;
    const std::size_t k = detail::rref(*spec, rows, r, n).size();
    rows.resize(k * n);
    return {spec, n, k, std::move(rows)};
}

inline Subspace subspace_from_generators(FieldSpec spec, std::size_t n, const std::vector<std::vector<elem_t>>& rows) {
    std::vector<elem_t> flat;
    flat.reserve(rows.size() * n);
    for (const auto& r : rows) {
        if (r.size() != n) raise(errc::dimension_mismatch, "generator length does not match ambient dimension");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return subspace_from_matrix(spec, n, std::move(flat));
}

inline Subspace zero_subspace(FieldSpec spec, std::size_t n) { return {spec, n, 0, {}}; }

inline Subspace full_space(FieldSpec spec, std::size_t n) {
    std::vector<elem_t> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    return {spec, n, n, std::move(id)};
}

inline Subspace parse_subspace(FieldSpec spec, std::size_t n, std::string_view text) {
    std::vector<elem_t> flat;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(pos, end - pos);
        std::size_t count = 0, i = 0;
        while (i < row.size()) {
            while (i < row.size() && row[i] == ' ') ++i;
            std::size_t j = i;
            while (j < row.size() && row[j] != ' ') ++j;
            if (j > i) {
                flat.push_back(spec->parse(row.substr(i, j - i)));
                ++count;
            }
            i = j;
        }
        if (count != n)
            raise(errc::dimension_mismatch, "row '" + std::string(row) + "' does not have " + std::to_string(n) +
                                                " entries");
        pos = end + 1;
    }
    return subspace_from_matrix(spec, n, std::move(flat));
}

/// Number of k-dimensional subspaces of F_q^n; 0 outside 0 <= k <= n.
inline bigint gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
    if (k < 0 || n < 0 || k > n) return 0;
    bigint num = 1, den = 1, qq = q;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(qq, static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(qq, static_cast<unsigned>(k - i)) - 1;
    }
    return num / den;
}

inline std::uint64_t gaussian_binomial_u64(std::int64_t n, std::int64_t k, std::int64_t q,
                                           std::uint64_t default_cap = caps::grassmannian) {
    bigint v = gaussian_binomial(n, k, q);
    if (v > effective_cap(default_cap))
        raise(errc::cap_exceeded, "[" + std::to_string(n) + "," + std::to_string(k) + "]_" + std::to_string(q) + " = " +
                                      v.str() + " exceeds enumeration cap");
    return static_cast<std::uint64_t>(v);
}

/// Streams every k-subspace of F_q^n once, in RREF: pivot-column sets in
/// colexicographic order, then free entries as an odometer (last fastest).
class GrassmannianIter {
public:
    GrassmannianIter(FieldSpec spec, std::size_t n, std::size_t k) : spec_(spec), n_(n), k_(k) {
        if (k > n) {
            done_ = true;
            return;
        }
        pivots_.resize(k);
        for (std::size_t i = 0; i < k; ++i) pivots_[i] = i;
        load_free_positions();
    }

    std::optional<Subspace> next() {
        if (done_) return std::nullopt;
        Subspace s{spec_, n_, k_, std::vector<elem_t>(k_ * n_, 0)};
        for (std::size_t i = 0; i < k_; ++i) s.basis[i * n_ + pivots_[i]] = 1;
        for (std::size_t f = 0; f < free_.size(); ++f) s.basis[free_[f]] = digits_[f];
        advance();
        return s;
    }

private:
    void load_free_positions() {
        free_.clear();
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = pivots_[i] + 1; j < n_; ++j)
                if (!std::binary_search(pivots_.begin(), pivots_.end(), j)) free_.push_back(i * n_ + j);
        digits_.assign(free_.size(), 0);
    }

    void advance() {
        std::size_t f = free_.size();
        while (f-- > 0) {
            if (++digits_[f] < spec_->q()) return;
            digits_[f] = 0;
        }
        // Next pivot set in colex order.
        std::size_t i = 0;
        while (i < k_) {
            std::size_t limit = i + 1 < k_ ? pivots_[i + 1] : n_;
            if (pivots_[i] + 1 < limit) break;
            ++i;
        }
        if (i == k_) {
            done_ = true;
            return;
        }
        ++pivots_[i];
        for (std::size_t j = 0; j < i; ++j) pivots_[j] = j;
        load_free_positions();
    }

    FieldSpec spec_;
    std::size_t n_, k_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_;
    std::vector<elem_t> digits_;
    bool done_ = false;
};

inline GrassmannianIter enumerate_subspaces(FieldSpec spec, std::size_t n, std::size_t k) {
    gaussian_binomial_u64(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), spec->q());
    return GrassmannianIter(spec, n, k);
}

inline std::vector<Subspace> all_subspaces(FieldSpec spec, std::size_t n, std::size_t k) {
    auto it = enumerate_subspaces(spec, n, k);
    std::vector<Subspace> out;
    while (auto s = it.next()) out.push_back(std::move(*s));
    return out;
}

namespace detail {

inline void same_ambient(const Subspace& u, const Subspace& v) {
    if (!(u.spec == v.spec) || u.n != v.n) raise(errc::ambient_mismatch, "subspaces live in different ambient spaces");
}

}  // namespace detail

inline Subspace span_sum(const Subspace& u, const Subspace& v) {
    detail::same_ambient(u, v);
    std::vector<elem_t> rows = u.basis;
    rows.insert(rows.end(), v.basis.begin(), v.basis.end());
    return subspace_from_matrix(u.spec, u.n, std::move(rows));
}

/// Zassenhaus: reduce [[U | U], [V | 0]]; rows with a zero left half span U ∩ V.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
    detail::same_ambient(u, v);
    const std::size_t n = u.n, w = 2 * n, rows = u.k + v.k;
    std::vector<elem_t> m(rows * w, 0);
    for (std::size_t i = 0; i < u.k; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * w + j] = m[i * w + n + j] = u.basis[i * n + j];
    for (std::size_t i = 0; i < v.k; ++i)
        for (std::size_t j = 0; j < n; ++j) m[(u.k + i) * w + j] = v.basis[i * n + j];
    auto pivots = detail::rref(*u.spec, m, rows, w);
    std::vector<elem_t> out;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= n) out.insert(out.end(), m.begin() + static_cast<std::ptrdiff_t>(r * w + n),
                                       m.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
    return subspace_from_matrix(u.spec, n, std::move(out));
}

/// True iff v lies in the row space of u.
inline bool contains_vector(const Subspace& u, std::span<const elem_t> v) {
    std::vector<elem_t> rows = u.basis;
    rows.insert(rows.end(), v.begin(), v.end());
    return detail::rank(*u.spec, std::move(rows), u.k + 1, u.n) == u.k;
}

/// True iff v ⊆ u.
inline bool contains(const Subspace& u, const Subspace& v) {
    detail::same_ambient(u, v);
    if (v.k > u.k) return false;
    std::vector<elem_t> rows = u.basis;
    rows.insert(rows.end(), v.basis.begin(), v.basis.end());
    return detail::rank(*u.spec, std::move(rows), u.k + v.k, u.n) == u.k;
}

inline std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    return u.k + v.k - 2 * intersect(u, v).k;
}

}  // namespace qdk
