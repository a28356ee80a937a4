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
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "grassmann.hpp"
#include "groupact.hpp"

namespace qdk {

/// A sorted, duplicate-free set of k-subspaces of F_q^n.
struct DesignCandidate {
    FieldSpec spec;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Subspace> blocks;
};

inline DesignCandidate make_candidate(FieldSpec spec, std::size_t n, std::size_t k, std::vector<Subspace> blocks) {
    for (const auto& b : blocks)
        if (!(b.spec == spec) || b.n != n || b.k != k)
            raise(errc::dimension_mismatch, "block '" + b.str() + "' is not a " + std::to_string(k) + "-subspace of F_q^" +
                                                std::to_string(n));
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return {spec, n, k, std::move(blocks)};
}

struct DesignReport {
    std::size_t t = 0;
    std::uint64_t lambda_min = 0;
    std::uint64_t lambda_max = 0;
    std::optional<std::uint64_t> lambda;
    bool is_design = false;
    std::uint64_t num_t_subspaces = 0;
    /// containment count -> number of t-subspaces with that count
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::uint64_t num_blocks = 0;

    friend bool operator==(const DesignReport&, const DesignReport&) = default;
};

/// Counts, for every t-subspace T of F_q^n, the blocks containing T.
inline DesignReport verify_design(const DesignCandidate& cand, std::size_t t) {
    if (cand.n == 0) raise(errc::empty_ambient, "ambient space has dimension 0");
    if (t > cand.k) raise(errc::bad_parameters, "strength t exceeds block dimension");
    const auto q = static_cast<std::int64_t>(cand.spec->q());
    const std::uint64_t total = gaussian_binomial_u64(static_cast<std::int64_t>(cand.n), static_cast<std::int64_t>(t), q);
    const std::vector<Subspace> ts = all_subspaces(cand.spec, cand.n, t);

    const std::size_t chunks = std::min<std::size_t>(64, std::max<std::size_t>(1, ts.size()));
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(chunks);
    detail::parallel_chunks(ts.size(), chunks, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t count = 0;
            for (const auto& b : cand.blocks)
                if (contains(b, ts[i])) ++count;
            ++partial[c][count];
        }
    });

    DesignReport rep;
    rep.t = t;
    rep.num_t_subspaces = total;
    rep.num_blocks = cand.blocks.size();
    for (const auto& h : partial)
        for (auto [count, freq] : h) rep.histogram[count] += freq;
    rep.lambda_min = rep.histogram.begin()->first;
    rep.lambda_max = rep.histogram.rbegin()->first;
    rep.is_design = rep.lambda_min == rep.lambda_max;
    if (rep.is_design) rep.lambda = rep.lambda_min;

    // Double counting: each block holds [k,t]_q t-subspaces.
    bigint incidences = 0;
    for (auto [count, freq] : rep.histogram) incidences += bigint(count) * freq;
    if (incidences != bigint(cand.blocks.size()) * gaussian_binomial(static_cast<std::int64_t>(cand.k),
                                                                      static_cast<std::int64_t>(t), q))
        raise(errc::internal, "double-counting identity violated");
    return rep;
}

inline std::vector<DesignReport> lambda_profile(const DesignCandidate& cand) {
    std::vector<DesignReport> out;
    for (std::size_t t = 0; t <= cand.k; ++t) out.push_back(verify_design(cand, t));
    return out;
}

/// |GL(r, q)| = prod_{i<r} (q^r - q^i).
inline bigint gl_order(std::uint64_t r, std::uint64_t q) {
    bigint out = 1, qr = boost::multiprecision::pow(bigint(q), static_cast<unsigned>(r));
    for (std::uint64_t i = 0; i < r; ++i) out *= qr - boost::multiprecision::pow(bigint(q), static_cast<unsigned>(i));
    return out;
}

struct SplittingWitness {
    Subspace w;
    std::vector<Subspace> translates;  // T^0(W), ..., T^{s-1}(W)
    bool direct_sum_ok = false;
};

/// The splitting problem: n = r s, operator T on F_q^n acting on row vectors.
struct SplittingSetup {
    FieldSpec spec;
    std::size_t r = 0, s = 0, n = 0;
    std::vector<GroupElement> powers;  // T^0, ..., T^{s-1}

    /// Rank of the stacked translates of the rows of `basis` (r rows).
    std::size_t translate_rank(std::span<const elem_t> basis) const {
        std::vector<elem_t> stacked;
        stacked.reserve(s * r * n);
        for (const auto& tp : powers) {
            auto img = detail::mat_mul(*spec, basis, r, n, tp.mat, n);
            stacked.insert(stacked.end(), img.begin(), img.end());
        }
        return detail::rank(*spec, std::move(stacked), s * r, n);
    }
};

/// T = multiplication by the canonical root alpha of the canonical degree-n
/// irreducible over GF(p^base_m), raised to `alpha_power` (1 for alpha itself,
/// q for its first Galois conjugate).
inline SplittingSetup splitting_setup(std::uint64_t p, std::uint64_t base_m, std::uint64_t r, std::uint64_t s,
                                      std::uint64_t alpha_power = 1) {
    if (r < 1 || s < 1) raise(errc::bad_factorization, "r and s must be positive");
    const std::uint64_t n = r * s;
    GroupElement t = power(singer_matrix(p, base_m, n), alpha_power);
    SplittingSetup setup{t.spec, r, s, n, {}};
    GroupElement cur = identity_element(t.spec, n);
    for (std::uint64_t i = 0; i < s; ++i) {
        setup.powers.push_back(cur);
        cur = cur * t;
    }
    return setup;
}

inline std::vector<SplittingWitness> splitting_subspaces(const SplittingSetup& setup) {
    std::vector<SplittingWitness> out;
    auto it = enumerate_subspaces(setup.spec, setup.n, setup.r);
    while (auto w = it.next()) {
        if (setup.translate_rank(w->basis) != setup.n) continue;
        SplittingWitness wit{*w, {}, true};
        for (const auto& tp : setup.powers) wit.translates.push_back(act(*w, tp));
        out.push_back(std::move(wit));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.w < b.w; });
    return out;
}

inline std::vector<SplittingWitness> splitting_subspaces(std::uint64_t p, std::uint64_t base_m, std::uint64_t r,
                                                         std::uint64_t s) {
    return splitting_subspaces(splitting_setup(p, base_m, r, s));
}

struct SplittingCount {
    std::uint64_t S = 0;
    std::uint64_t N = 0;
    bigint gl_order;
    bool quotient_check = false;
};

/// S by subspace enumeration; N by brute force over ordered r-tuples of
/// vectors, independently of the subspace enumeration.
inline SplittingCount count_splitting(const SplittingSetup& setup) {
    SplittingCount out;
    out.S = splitting_subspaces(setup).size();
    const std::uint64_t q = setup.spec->q();
    const std::uint64_t coords = setup.r * setup.n;
    std::uint64_t tuples = 1;
    for (std::uint64_t i = 0; i < coords; ++i) {
        tuples *= q;
        require_within_cap(tuples, caps::tuples, "ordered-basis enumeration");
    }
    const std::size_t chunks = 64;
    std::vector<std::uint64_t> partial(chunks, 0);
    detail::parallel_chunks(tuples, chunks, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        std::vector<elem_t> basis(coords);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t v = idx;
            for (auto& x : basis) {
                x = static_cast<elem_t>(v % q);
                v /= q;
            }
            if (detail::rank(*setup.spec, basis, setup.r, setup.n) != setup.r) continue;
            if (setup.translate_rank(basis) == setup.n) ++partial[c];
        }
    });
    for (auto x : partial) out.N += x;
    out.gl_order = gl_order(setup.r, q);
    out.quotient_check = bigint(out.N) == bigint(out.S) * out.gl_order;
    return out;
}

inline SplittingCount count_splitting(std::uint64_t p, std::uint64_t base_m, std::uint64_t r, std::uint64_t s) {
    return count_splitting(splitting_setup(p, base_m, r, s));
}

inline DesignCandidate splitting_candidate(const SplittingSetup& setup) {
    std::vector<Subspace> blocks;
    for (auto& w : splitting_subspaces(setup)) blocks.push_back(std::move(w.w));
    return make_candidate(setup.spec, setup.n, setup.r, std::move(blocks));
}

inline DesignReport splitting_design_report(std::uint64_t p, std::uint64_t base_m, std::uint64_t r, std::uint64_t s,
                                            std::size_t t) {
    return verify_design(splitting_candidate(splitting_setup(p, base_m, r, s)), t);
}

/// Points and lines of PG(m-1, 2) as a classical design.
struct PgLinesReport {
    std::uint64_t v = 0;
    std::uint64_t b = 0;
    std::uint64_t pair_min = 0;
    std::uint64_t pair_max = 0;
    bool is_steiner = false;
    std::vector<std::array<std::size_t, 3>> blocks;  // point indices, sorted
};

inline PgLinesReport pg_lines_design(std::size_t m) {
    if (m < 2) raise(errc::bad_parameters, "pg_lines_design needs m >= 2");
    if (m > 6) raise(errc::cap_exceeded, "pg_lines_design supports m <= 6");
    FieldSpec f2 = field_create(2, 1);
    const auto points = all_subspaces(f2, m, 1);
    std::map<std::vector<elem_t>, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index[points[i].basis] = i;

    PgLinesReport rep;
    rep.v = points.size();
    auto it = enumerate_subspaces(f2, m, 2);
    while (auto line = it.next()) {
        std::vector<elem_t> a(line->row(0).begin(), line->row(0).end()), b(line->row(1).begin(), line->row(1).end()),
            c(m);
        for (std::size_t j = 0; j < m; ++j) c[j] = a[j] ^ b[j];
        std::array<std::size_t, 3> blk{index.at(a), index.at(b), index.at(c)};
        std::sort(blk.begin(), blk.end());
        rep.blocks.push_back(blk);
    }
    rep.b = rep.blocks.size();
    std::vector<std::uint64_t> cover(rep.v * rep.v, 0);
    for (const auto& blk : rep.blocks)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) ++cover[blk[i] * rep.v + blk[j]];
    rep.pair_min = ~std::uint64_t{0};
    for (std::size_t i = 0; i < rep.v; ++i)
        for (std::size_t j = i + 1; j < rep.v; ++j) {
            rep.pair_min = std::min(rep.pair_min, cover[i * rep.v + j]);
            rep.pair_max = std::max(rep.pair_max, cover[i * rep.v + j]);
        }
    bool triples = std::all_of(rep.blocks.begin(), rep.blocks.end(),
                               [](const auto& blk) { return blk[0] < blk[1] && blk[1] < blk[2]; });
    rep.is_steiner = triples && rep.pair_min == 1 && rep.pair_max == 1;
    return rep;
}

/// Design test on the G-invariant k-subspaces. The strength is the caller's
/// choice; nothing about the number of generators is assumed.
inline DesignReport triangle_invariant_design(const MatrixGroup& g, std::size_t k, std::size_t t) {
    if (!g.closed()) raise(errc::group_not_closed, "triangle_invariant_design needs an enumerated group");
    return verify_design(make_candidate(g.spec, g.n, k, invariant_subspaces(g, k)), t);
}

}  // namespace qdk
