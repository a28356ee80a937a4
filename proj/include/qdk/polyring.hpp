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
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "config.hpp"
#include "error.hpp"
#include "gf.hpp"

namespace qdk {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, ascending powers, no trailing zeros.
struct Poly {
    static constexpr int zero_degree = std::numeric_limits<int>::min();

    FieldSpec spec;
    std::vector<elem_t> c;

    Poly() = default;
    Poly(FieldSpec s, std::vector<elem_t> coeffs) : spec(s), c(std::move(coeffs)) { normalize(); }

    static Poly zero(FieldSpec s) { return Poly(s, {}); }
    static Poly constant(FieldSpec s, elem_t v) { return Poly(s, {v}); }
    static Poly x(FieldSpec s) { return Poly(s, {0, 1}); }
    /// x^n - 1.
    static Poly xn_minus_1(FieldSpec s, std::size_t n) {
        std::vector<elem_t> v(n + 1, 0);
        v[0] = s->neg(1);
        v[n] = s->add(v[n], 1);
        return Poly(s, std::move(v));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const noexcept { return c.empty(); }
    int degree() const noexcept { return c.empty() ? zero_degree : static_cast<int>(c.size()) - 1; }
    elem_t lead() const noexcept { return c.empty() ? 0 : c.back(); }
    elem_t coeff(std::size_t i) const noexcept { return i < c.size() ? c[i] : 0; }

    elem_t eval(elem_t x0) const noexcept {
        elem_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = spec->add(spec->mul(acc, x0), c[i]);
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        elem_t li = spec->inv(lead());
        std::vector<elem_t> out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out[i] = spec->mul(c[i], li);
        return Poly(spec, std::move(out));
    }

    /// Descending powers, e.g. "x^3+x+1" or "2x^2+1"; "0" for the zero
    /// polynomial. Coefficients outside the prime field render as "[c0,...]".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += '+';
            bool prime = c[i] < spec->p();
            std::string coef = prime ? std::to_string(c[i]) : "[" + spec->render(c[i]) + "]";
            if (i == 0)
                out += coef;
            else {
                if (c[i] != 1) out += coef;
                out += 'x';
                if (i > 1) out += '^' + std::to_string(i);
            }
        }
        return out;
    }

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.spec == b.spec && a.c == b.c; }
};

namespace detail {

inline void same_spec(const Poly& a, const Poly& b) {
    if (!(a.spec == b.spec)) raise(errc::spec_mismatch, "polynomials over different fields");
}

}  // namespace detail

inline Poly operator+(const Poly& a, const Poly& b) {
    detail::same_spec(a, b);
    std::vector<elem_t> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.spec->add(a.coeff(i), b.coeff(i));
    return Poly(a.spec, std::move(out));
}

inline Poly operator-(const Poly& a, const Poly& b) {
    detail::same_spec(a, b);
    std::vector<elem_t> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.spec->sub(a.coeff(i), b.coeff(i));
    return Poly(a.spec, std::move(out));
}

inline Poly operator*(const Poly& a, const Poly& b) {
    detail::same_spec(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.spec);
    const Field& f = *a.spec;
    std::vector<elem_t> out(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c[i], b.c[j]));
    }
    return Poly(a.spec, std::move(out));
}

/// (quotient, remainder) with deg(remainder) < deg(b).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    detail::same_spec(a, b);
    if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    const Field& f = *a.spec;
    std::vector<elem_t> r = a.c;
    const std::size_t db = b.c.size() - 1;
    if (r.size() <= db) return {Poly::zero(a.spec), a};
    std::vector<elem_t> quot(r.size() - db, 0);
    elem_t li = f.inv(b.lead());
    for (std::size_t i = r.size(); i-- > db;) {
        elem_t coef = f.mul(r[i], li);
        quot[i - db] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, b.c[j]));
    }
    r.resize(db);
    return {Poly(a.spec, std::move(quot)), Poly(a.spec, std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

enum class poly_op { add, sub, mul };

inline Poly poly_arith(const Poly& a, const Poly& b, poly_op kind) {
    switch (kind) {
        case poly_op::add: return a + b;
        case poly_op::sub: return a - b;
        case poly_op::mul: return a * b;
    }
    raise(errc::internal, "unknown polynomial operation");
}

/// Monic gcd.
inline Poly poly_gcd(Poly a, Poly b) {
    detail::same_spec(a, b);
    if (a.is_zero() && b.is_zero()) raise(errc::both_zero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(base.spec, 1) % mod;
    base = base % mod;
    while (e > 0) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

/// Rabin's test over GF(q) for a polynomial of degree >= 1.
inline bool is_irreducible(const Poly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly g = f.monic();
    const std::uint64_t q = g.spec->q();
    auto x_power = [&](int k) {
        Poly h = Poly::x(g.spec) % g;
        for (int i = 0; i < k; ++i) h = powmod(h, q, g);
        return h;
    };
    if (!(x_power(d) - Poly::x(g.spec)).is_zero()) return false;
    for (std::uint64_t r : detail::prime_factors(static_cast<std::uint64_t>(d)))
        if (poly_gcd(g, x_power(d / static_cast<int>(r)) - Poly::x(g.spec)).degree() != 0) return false;
    return true;
}

/// Monic irreducible of the given degree over `base` whose coefficient tuple
/// (c_0, ..., c_{d-1}) is lexicographically least, elements compared by
/// Field::lex_key, with nonzero constant term so that its roots are units.
/// For degree >= 2 over a prime field this is that field's canonical modulus.
inline Poly canonical_irreducible(FieldSpec base, int degree) {
    if (degree < 1) raise(errc::bad_parameters, "degree must be positive");
    std::vector<elem_t> order(base->q());
    std::iota(order.begin(), order.end(), elem_t{0});
    std::sort(order.begin(), order.end(), [&](elem_t a, elem_t b) { return base->lex_key(a) < base->lex_key(b); });
    std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
    idx[0] = 1;  // order[0] is zero
    for (;;) {
        std::vector<elem_t> c(idx.size() + 1);
        for (std::size_t i = 0; i < idx.size(); ++i) c[i] = order[idx[i]];
        c.back() = 1;
        Poly f(base, c);
        if (is_irreducible(f)) return f;
        std::size_t i = idx.size();
        while (i-- > 0) {
            if (++idx[i] < order.size()) break;
            idx[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) raise(errc::internal, "no irreducible polynomial found");
    }
}

/// Monic polynomial of least degree over GF(p^subfield_degree) vanishing at
/// a: the product over its Frobenius orbit. The result is expressed over
/// a.spec, with coefficients in the subfield.
inline Poly minimal_polynomial(const FieldElement& a, std::uint32_t subfield_degree) {
    const Field& f = *a.spec;
    if (subfield_degree == 0 || f.m() % subfield_degree != 0)
        raise(errc::not_a_subfield, "GF(p^" + std::to_string(subfield_degree) + ") is not a subfield of GF(" +
                                        std::to_string(f.q()) + ")");
    Poly result = Poly::constant(a.spec, 1);
    elem_t conj = a.code;
    do {
        result = result * Poly(a.spec, {f.neg(conj), 1});
        conj = f.frobenius(conj, subfield_degree);
    } while (conj != a.code);
    return result;
}

struct CosetPartition {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::vector<std::vector<std::uint64_t>> cosets;
};

inline CosetPartition cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
    if (n == 0) raise(errc::bad_parameters, "n must be positive");
    if (std::gcd(n, q) != 1) raise(errc::not_coprime, "gcd(n, q) != 1");
    CosetPartition out{n, q, {}};
    std::vector<bool> seen(n, false);
    for (std::uint64_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t j = start;
        do {
            seen[j] = true;
            coset.push_back(j);
            j = j * (q % n) % n;
        } while (j != start);
        std::sort(coset.begin(), coset.end());
        out.cosets.push_back(std::move(coset));
    }
    return out;
}

/// Least l >= 1 with q^l = 1 mod n.
inline std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (std::gcd(n, q) != 1) raise(errc::not_coprime, "gcd(n, q) != 1");
    if (n == 1) return 1;
    std::uint64_t l = 1, acc = q % n;
    while (acc != 1) {
        acc = acc * (q % n) % n;
        ++l;
    }
    return l;
}

/// Splitting data for x^n - 1 over `spec`: the field GF(q^l), the embedding of
/// GF(q) into it, and beta = alpha^((q^l - 1)/n) for its primitive alpha.
struct SplittingField {
    FieldSpec big;
    std::vector<elem_t> embed;
    elem_t beta = 1;

    /// Maps a coefficient of the big field back to GF(q); throws if it is not
    /// in the image of the embedding.
    elem_t pull_back(elem_t v) const {
        auto it = std::find(embed.begin(), embed.end(), v);
        if (it == embed.end()) raise(errc::internal, "coefficient outside the base field");
        return static_cast<elem_t>(it - embed.begin());
    }
};

inline SplittingField splitting_field(std::uint64_t n, FieldSpec spec) {
    const std::uint64_t l = multiplicative_order(spec->q(), n);
    SplittingField s;
    s.big = field_create(spec->p(), std::uint64_t{spec->m()} * l);
    s.embed = subfield_embedding(spec, s.big);
    s.beta = s.big->pow(s.big->primitive(), (s.big->q() - 1) / n);
    return s;
}

/// prod_{j in exponents} (x - beta^j), pulled back to GF(q).
inline Poly root_product(const SplittingField& sf, FieldSpec spec, const std::vector<std::uint64_t>& exponents) {
    const Field& B = *sf.big;
    Poly acc = Poly::constant(sf.big, 1);
    for (auto j : exponents) acc = acc * Poly(sf.big, {B.neg(B.pow(sf.beta, j)), 1});
    std::vector<elem_t> c(acc.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = sf.pull_back(acc.c[i]);
    return Poly(spec, std::move(c));
}

/// Irreducible factors of x^n - 1 over spec, one per cyclotomic coset, sorted
/// by their rendering.
namespace detail {

// Splitting field too large for tables: work in GF(q)[y]/(h) with h the
// canonical irreducible of degree l, and take beta = z^((q^l-1)/n) for the
// lex-least z that gives an element of order exactly n.
inline std::vector<Poly> factor_xn_minus_1_untabled(std::uint64_t n, FieldSpec spec, const CosetPartition& part) {
    const std::uint64_t q = spec->q();
    const std::uint64_t l = multiplicative_order(q, n);
    const bigint big_q = boost::multiprecision::pow(bigint(q), static_cast<unsigned>(l));
    if (big_q > bigint(std::numeric_limits<std::uint64_t>::max()))
        raise(errc::cap_exceeded, "splitting field GF(" + std::to_string(q) + "^" + std::to_string(l) + ") is too large");
    const std::uint64_t e = static_cast<std::uint64_t>((big_q - 1) / n);
    const Poly h = canonical_irreducible(spec, static_cast<int>(l));
    const Poly one = Poly::constant(spec, 1);
    const auto primes = prime_factors(n);

    // Lex order on (c0..c_{l-1}) with c0 most significant, over GF(q) codes
    // ordered by lex_key.
    std::vector<elem_t> by_key(q);
    for (elem_t a = 0; a < q; ++a) by_key[spec->lex_key(a)] = a;
    std::vector<std::uint64_t> digits(l, 0);
    Poly beta = one;
    for (;;) {
        std::size_t i = l;
        while (i-- > 0) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
        std::vector<elem_t> c(l);
        for (std::size_t j = 0; j < l; ++j) c[j] = by_key[digits[j]];
        Poly z(spec, std::move(c));
        if (z.is_zero()) raise(errc::internal, "no element of order n found");
        Poly b = powmod(z, e, h);
        bool ok = !(b == one) || n == 1;
        for (auto r : primes)
            if (ok && powmod(b, n / r, h) == one) ok = false;
        if (ok) {
            beta = b;
            break;
        }
    }

    std::vector<Poly> out;
    for (const auto& coset : part.cosets) {
        // Coefficients of prod (x - beta^j) as elements of GF(q)[y]/(h).
        std::vector<Poly> acc{one};
        for (auto j : coset) {
            Poly root = powmod(beta, j, h);
            std::vector<Poly> next(acc.size() + 1, Poly::zero(spec));
            for (std::size_t k = 0; k < acc.size(); ++k) {
                next[k + 1] = next[k + 1] + acc[k];
                next[k] = (next[k] - acc[k] * root) % h;
            }
            acc = std::move(next);
        }
        std::vector<elem_t> c(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (acc[k].degree() > 0) raise(errc::internal, "coefficient outside the base field");
            c[k] = acc[k].is_zero() ? 0 : acc[k].c[0];
        }
        out.emplace_back(spec, std::move(c));
    }
    return out;
}

}  // namespace detail

inline std::vector<Poly> factor_xn_minus_1(std::uint64_t n, FieldSpec spec) {
    auto part = cyclotomic_cosets(n, spec->q());
    const std::uint64_t l = multiplicative_order(spec->q(), n);
    bool tabled = true;
    {
        std::uint64_t big = 1;
        for (std::uint64_t i = 0; i < std::uint64_t{spec->m()} * l && tabled; ++i)
            if ((big *= spec->p()) > field_cap) tabled = false;
    }
    std::vector<Poly> out;
    if (tabled) {
        auto sf = splitting_field(n, spec);
        for (const auto& coset : part.cosets) out.push_back(root_product(sf, spec, coset));
    } else {
        out = detail::factor_xn_minus_1_untabled(n, spec, part);
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    return out;
}

inline bigint falling_factorial(std::int64_t q, std::uint64_t k) {
    bigint r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= bigint(q) - bigint(i);
    return r;
}

inline bigint binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    bigint r = 1;
    for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Signed Stirling number of the first kind: sum_k s(n,k) q^k = (q)_n.
inline bigint stirling_first(std::uint64_t n, std::uint64_t k) {
    if (k > n) raise(errc::index_out_of_range, "stirling_first requires k <= n");
    std::vector<bigint> row{1};
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<bigint> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j + 1] += row[j];
            next[j] -= bigint(i) * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

/// (sum_{k=1}^{n} (q)_k) / (q^2 - q), exact and unrounded.
inline rational count_split_polys_formula(std::uint64_t n, std::int64_t q) {
    if (q < 2) raise(errc::bad_parameters, "q must be at least 2");
    bigint sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) sum += falling_factorial(q, k);
    return rational(sum, bigint(q) * q - q);
}

enum class split_mode { monic_distinct_roots, affine_orbits };

namespace detail {

/// Monic degree-n polynomial with lower coefficients given by the base-q
/// digits of idx.
inline Poly monic_from_index(FieldSpec f, std::uint64_t idx, std::uint64_t n) {
    std::vector<elem_t> c(n + 1);
    for (std::uint64_t i = 0; i < n; ++i) {
        c[i] = static_cast<elem_t>(idx % f->q());
        idx /= f->q();
    }
    c[n] = 1;
    return Poly(f, std::move(c));
}

inline std::uint64_t index_of_monic(const Poly& g, std::uint64_t n) {
    std::uint64_t idx = 0;
    for (std::uint64_t i = n; i-- > 0;) idx = idx * g.spec->q() + g.coeff(i);
    return idx;
}

inline bool splits_distinct(const Poly& g, std::uint64_t n) {
    std::uint64_t roots = 0;
    for (elem_t x0 = 0; x0 < g.spec->q(); ++x0)
        if (g.eval(x0) == 0) ++roots;
    return roots == n;
}

/// g(a x + b), by Horner.
inline Poly substitute_affine(const Poly& g, elem_t a, elem_t b) {
    Poly lin(g.spec, {b, a});
    Poly acc = Poly::zero(g.spec);
    for (std::size_t i = g.c.size(); i-- > 0;) acc = acc * lin + Poly::constant(g.spec, g.c[i]);
    return acc;
}

}  // namespace detail

/// Exhaustive count over monic degree-n polynomials in GF(q)[x] that have n
/// distinct roots in GF(q); with affine_orbits, the number of orbits of that
/// set under x -> a x + b followed by rescaling to monic.
inline bigint brute_count_split_polys(std::uint64_t n, std::uint64_t q, split_mode mode) {
    FieldSpec f = field_of_order(q);
    if (n == 0) raise(errc::bad_parameters, "degree must be positive");
    std::uint64_t candidates = 1, work = 1;
    for (std::uint64_t i = 0; i <= n; ++i) {
        work *= q;
        if (i < n) candidates *= q;
        require_within_cap(work, caps::brute_polys, "split-polynomial enumeration");
    }
    const std::size_t chunks = 64;
    std::vector<std::vector<std::uint64_t>> found(chunks);
    detail::parallel_chunks(candidates, chunks, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx)
            if (detail::splits_distinct(detail::monic_from_index(f, idx, n), n)) found[c].push_back(idx);
    });
    std::vector<std::uint64_t> split;
    for (auto& v : found) split.insert(split.end(), v.begin(), v.end());
    if (mode == split_mode::monic_distinct_roots) return bigint(split.size());

    std::set<std::uint64_t> unvisited(split.begin(), split.end());
    std::uint64_t orbits = 0;
    while (!unvisited.empty()) {
        std::uint64_t seed = *unvisited.begin();
        Poly g = detail::monic_from_index(f, seed, n);
        ++orbits;
        for (elem_t a = 1; a < q; ++a)
            for (elem_t b = 0; b < q; ++b)
                unvisited.erase(detail::index_of_monic(detail::substitute_affine(g, a, b).monic(), n));
    }
    return bigint(orbits);
}

}  // namespace qdk
