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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "config.hpp"
#include "error.hpp"

namespace qdk {

/// Field elements are stored as the integer sum c_i p^i of their coordinates
/// in the power basis 1, x, ..., x^{m-1}. Zero is 0 and one is 1.
using elem_t = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Dense polynomials over GF(p) with coefficients in [0, p), ascending
/// powers. Only used to pick and validate moduli before a Field exists.
namespace fp {

using poly = std::vector<std::int64_t>;

inline void trim(poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

inline poly rem(poly a, const poly& f, std::int64_t p) {
    trim(a);
    std::int64_t lead_inv = inv_mod(f.back(), p);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::int64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

inline poly mulmod(const poly& a, const poly& b, const poly& f, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return rem(std::move(r), f, p);
}

inline poly powmod(poly base, std::uint64_t e, const poly& f, std::int64_t p) {
    poly r{1};
    base = rem(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline poly gcd(poly a, poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// x^(p^k) mod f.
inline poly frobenius_x(std::uint64_t k, const poly& f, std::int64_t p) {
    poly h{0, 1};
    h = rem(h, f, p);
    for (std::uint64_t i = 0; i < k; ++i) h = powmod(h, static_cast<std::uint64_t>(p), f, p);
    return h;
}

/// Rabin's irreducibility test for a monic f of degree m >= 1.
inline bool is_irreducible(const poly& f, std::int64_t p) {
    const std::uint64_t m = f.size() - 1;
    if (m == 1) return true;
    auto minus_x = [&](poly h) {
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] - 1 + p) % p;
        trim(h);
        return h;
    };
    if (!minus_x(frobenius_x(m, f, p)).empty()) return false;
    for (std::uint64_t r : prime_factors(m)) {
        poly g = gcd(f, minus_x(frobenius_x(m / r, f, p)), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace fp
}  // namespace detail

/// GF(p^m) in the polynomial basis modulo the canonical modulus: the monic
/// irreducible of degree m whose tuple (c_0, ..., c_{m-1}) is lexicographically
/// least. Instances are immutable and shared; obtain them via field_create.
class Field {
public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Ascending coefficients, length m+1, monic. For m = 1 this is "x".
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::vector<std::uint32_t> coeffs(elem_t a) const {
        std::vector<std::uint32_t> out(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }

    elem_t from_coeffs(std::span<const std::uint32_t> c) const {
        elem_t a = 0;
        for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i] % p_;
        return a;
    }

    elem_t add(elem_t a, elem_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return digitwise(a, b, [this](std::uint32_t x, std::uint32_t y) { return (x + y) % p_; });
    }

    elem_t neg(elem_t a) const noexcept {
        if (p_ == 2) return a;
        return digitwise(a, 0, [this](std::uint32_t x, std::uint32_t) { return (p_ - x) % p_; });
    }

    elem_t sub(elem_t a, elem_t b) const noexcept { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    elem_t inv(elem_t a) const {
        if (a == 0) raise(errc::division_by_zero, "inverse of zero");
        return log_[a] == 0 ? 1 : exp_[(q_ - 1) - log_[a]];
    }

    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

    elem_t pow(elem_t a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
    }

    /// Discrete log to the base primitive(); a must be nonzero.
    std::uint32_t log(elem_t a) const noexcept { return log_[a]; }
    elem_t exp(std::uint64_t i) const noexcept { return exp_[i % (q_ - 1)]; }

    elem_t primitive() const noexcept { return primitive_; }

    /// The class of x in GF(p)[x]/(modulus); for m = 1 this is 0.
    elem_t generator() const noexcept { return m_ == 1 ? 0 : p_; }

    std::uint64_t order(elem_t a) const {
        if (a == 0) raise(errc::division_by_zero, "order of zero");
        std::uint64_t n = q_ - 1;
        return n / std::gcd<std::uint64_t>(log_[a], n);
    }

    /// a^(p^k).
    elem_t frobenius(elem_t a, std::uint64_t k) const noexcept {
        std::uint64_t e = 1;
        for (std::uint64_t i = 0; i < k % m_; ++i) e *= p_;
        return pow(a, e);
    }

    bool in_subfield(elem_t a, std::uint32_t d) const noexcept { return frobenius(a, d) == a; }

    /// Elements fixed by the d-th power Frobenius, in code order.
    std::vector<elem_t> subfield_elements(std::uint32_t d) const {
        std::vector<elem_t> out;
        for (elem_t a = 0; a < q_; ++a)
            if (in_subfield(a, d)) out.push_back(a);
        return out;
    }

    /// Key under which codes compare lexicographically on (c_0, ..., c_{m-1}).
    std::uint64_t lex_key(elem_t a) const noexcept {
        std::uint64_t key = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            key = key * p_ + a % p_;
            a /= p_;
        }
        return key;
    }

    /// "c0,c1,...,c{m-1}".
    std::string render(elem_t a) const {
        std::string out;
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (i) out += ',';
            out += std::to_string(a % p_);
            a /= p_;
        }
        return out;
    }

    elem_t parse(std::string_view token) const {
        std::vector<std::uint32_t> c;
        std::size_t pos = 0;
        while (pos <= token.size()) {
            std::size_t end = token.find(',', pos);
            if (end == std::string_view::npos) end = token.size();
            std::string_view part = token.substr(pos, end - pos);
            if (part.empty()) raise(errc::bad_parameters, "malformed field element '" + std::string(token) + "'");
            std::uint64_t v = 0;
            for (char ch : part) {
                if (ch < '0' || ch > '9')
                    raise(errc::bad_parameters, "malformed field element '" + std::string(token) + "'");
                v = v * 10 + static_cast<std::uint64_t>(ch - '0');
                if (v >= p_) raise(errc::bad_parameters, "coordinate out of range in '" + std::string(token) + "'");
            }
            c.push_back(static_cast<std::uint32_t>(v));
            pos = end + 1;
        }
        if (c.size() != m_)
            raise(errc::bad_parameters, "field element '" + std::string(token) + "' needs " + std::to_string(m_) +
                                            " coordinates");
        return from_coeffs(c);
    }

    /// Schoolbook product reduced modulo the modulus; independent of the log
    /// tables and used to build them.
    elem_t mul_slow(elem_t a, elem_t b) const {
        if (m_ == 1) return static_cast<elem_t>(std::uint64_t{a} * b % p_);
        // m <= 20 because q <= 2^20.
        std::uint64_t x[20], y[20], r[40] = {};
        for (std::uint32_t i = 0; i < m_; ++i) {
            x[i] = a % p_;
            a /= p_;
            y[i] = b % p_;
            b /= p_;
        }
        for (std::uint32_t i = 0; i < m_; ++i)
            for (std::uint32_t j = 0; j < m_; ++j) r[i + j] += x[i] * y[j];
        for (std::uint32_t i = 2 * m_ - 1; i-- > m_;) {
            std::uint64_t c = r[i] % p_;
            for (std::uint32_t j = 0; j < m_; ++j) r[i - m_ + j] += c * (p_ - modulus_[j]);
        }
        elem_t out = 0;
        for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + static_cast<elem_t>(r[i] % p_);
        return out;
    }

    Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) q *= p;
        q_ = static_cast<std::uint32_t>(q);
        choose_modulus();
        build_tables();
    }

private:
    template <class Op>
    elem_t digitwise(elem_t a, elem_t b, Op op) const noexcept {
        elem_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += op(a % p_, b % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    void choose_modulus() {
        if (m_ == 1) {
            modulus_ = {0, 1};
            return;
        }
        // Odometer over (c_0, ..., c_{m-1}) with c_{m-1} fastest: lex order.
        std::vector<std::uint32_t> c(m_, 0);
        for (;;) {
            detail::fp::poly f(c.begin(), c.end());
            f.push_back(1);
            if (c[0] != 0 && detail::fp::is_irreducible(f, p_)) {
                modulus_.assign(c.begin(), c.end());
                modulus_.push_back(1);
                return;
            }
            std::size_t i = m_;
            while (i-- > 0) {
                if (++c[i] < p_) break;
                c[i] = 0;
            }
        }
    }

    void build_tables() {
        const std::uint64_t n = q_ - 1;
        const auto factors = detail::prime_factors(n);
        auto pow_slow = [&](elem_t a, std::uint64_t e) {
            elem_t r = 1;
            while (e > 0) {
                if (e & 1) r = mul_slow(r, a);
                a = mul_slow(a, a);
                e >>= 1;
            }
            return r;
        };
        // Least element of order q-1 in lex order of coordinates.
        primitive_ = 1;
        if (n > 1) {
            std::vector<std::uint32_t> c(m_, 0);
            for (;;) {
                std::size_t i = m_;
                while (i-- > 0) {
                    if (++c[i] < p_) break;
                    c[i] = 0;
                }
                elem_t g = from_coeffs(c);
                bool ok = g != 0;
                for (std::uint64_t r : factors)
                    if (ok && pow_slow(g, n / r) == 1) ok = false;
                if (ok) {
                    primitive_ = g;
                    break;
                }
            }
        }
        exp_.assign(2 * n + 1, 0);
        log_.assign(q_, 0);
        elem_t cur = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            exp_[i] = cur;
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_slow(cur, primitive_);
        }
        for (std::uint64_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];
        if (p_ != 2 && q_ <= 256) {
            add_table_.resize(std::size_t{q_} * q_);
            for (elem_t a = 0; a < q_; ++a)
                for (elem_t b = 0; b < q_; ++b)
                    add_table_[a * q_ + b] =
                        digitwise(a, b, [this](std::uint32_t x, std::uint32_t y) { return (x + y) % p_; });
        }
    }

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    elem_t primitive_ = 1;
    std::vector<elem_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<elem_t> add_table_;
};

/// Handle to a cached, immutable Field. Equal (p, m) always yields the same
/// handle, so equality is identity.
class FieldSpec {
public:
    FieldSpec() = default;
    explicit FieldSpec(const Field* f) noexcept : f_(f) {}

    const Field& operator*() const noexcept { return *f_; }
    const Field* operator->() const noexcept { return f_; }
    explicit operator bool() const noexcept { return f_ != nullptr; }

    friend bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.f_ == b.f_; }

private:
    const Field* f_ = nullptr;
};

inline FieldSpec field_create(std::uint64_t p, std::uint64_t m) {
    if (!detail::is_prime(p)) raise(errc::not_prime, std::to_string(p) + " is not prime");
    if (m < 1) raise(errc::bad_parameters, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        q *= p;
        if (q > field_cap)
            raise(errc::cap_exceeded, "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<Field>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, m}];
    if (!slot) slot = std::make_unique<Field>(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    return FieldSpec(slot.get());
}

/// Splits a prime power q into (p, m); throws BadParameters otherwise.
inline std::pair<std::uint64_t, std::uint64_t> prime_power(std::uint64_t q) {
    if (q < 2) raise(errc::bad_parameters, std::to_string(q) + " is not a prime power");
    auto f = detail::prime_factors(q);
    if (f.size() != 1) raise(errc::bad_parameters, std::to_string(q) + " is not a prime power");
    std::uint64_t m = 0;
    for (std::uint64_t r = q; r > 1; r /= f[0]) ++m;
    return {f[0], m};
}

inline FieldSpec field_of_order(std::uint64_t q) {
    auto [p, m] = prime_power(q);
    return field_create(p, m);
}

/// A field element bound to its field.
struct FieldElement {
    FieldSpec spec;
    elem_t code = 0;

    std::vector<std::uint32_t> coeffs() const { return spec->coeffs(code); }
    bool is_zero() const noexcept { return code == 0; }
    std::string str() const { return spec->render(code); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.spec == b.spec && a.code == b.code;
    }
};

inline FieldElement make_element(FieldSpec spec, std::span<const std::uint32_t> coeffs) {
    if (coeffs.size() != spec->m()) raise(errc::bad_parameters, "coordinate count does not match extension degree");
    for (auto c : coeffs)
        if (c >= spec->p()) raise(errc::bad_parameters, "coordinate not reduced mod p");
    return {spec, spec->from_coeffs(coeffs)};
}

enum class arith { add, sub, mul };

inline FieldElement fe_arith(const FieldElement& a, const FieldElement& b, arith kind) {
    if (!(a.spec == b.spec)) raise(errc::spec_mismatch, "operands live in different fields");
    const Field& f = *a.spec;
    switch (kind) {
        case arith::add: return {a.spec, f.add(a.code, b.code)};
        case arith::sub: return {a.spec, f.sub(a.code, b.code)};
        case arith::mul: return {a.spec, f.mul(a.code, b.code)};
    }
    raise(errc::internal, "unknown arithmetic kind");
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return fe_arith(a, b, arith::add); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return fe_arith(a, b, arith::sub); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return fe_arith(a, b, arith::mul); }

inline FieldElement fe_inv(const FieldElement& a) { return {a.spec, a.spec->inv(a.code)}; }

inline std::uint64_t element_order(const FieldElement& a) { return a.spec->order(a.code); }

inline FieldElement primitive_element(FieldSpec spec) { return {spec, spec->primitive()}; }

inline FieldElement frobenius(const FieldElement& a, std::uint64_t base_power) {
    return {a.spec, a.spec->frobenius(a.code, base_power)};
}

/// Images of the elements of `small` inside `big` (indexed by small's codes)
/// under the embedding that sends small's generator x to the least-coded root
/// of small's modulus in big. Requires small.m() | big.m() and equal p.
inline std::vector<elem_t> subfield_embedding(FieldSpec small, FieldSpec big) {
    if (small->p() != big->p() || big->m() % small->m() != 0)
        raise(errc::not_a_subfield, "GF(" + std::to_string(small->q()) + ") does not embed in GF(" +
                                        std::to_string(big->q()) + ")");
    const Field& B = *big;
    const auto& mod = small->modulus();
    elem_t root = 0;
    if (small->m() > 1) {
        bool found = false;
        for (elem_t z = 0; z < B.q() && !found; ++z) {
            elem_t acc = 0;
            for (std::size_t i = mod.size(); i-- > 0;) acc = B.add(B.mul(acc, z), mod[i]);
            if (acc == 0) {
                root = z;
                found = true;
            }
        }
        if (!found) raise(errc::internal, "modulus has no root in the extension");
    }
    std::vector<elem_t> image(small->q());
    for (elem_t a = 0; a < small->q(); ++a) {
        auto c = small->coeffs(a);
        elem_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = B.add(B.mul(acc, root), c[i]);
        image[a] = small->m() > 1 ? acc : a;
    }
    return image;
}

}  // namespace qdk
