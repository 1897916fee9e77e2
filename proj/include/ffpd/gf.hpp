#pragma once

// Exact arithmetic in F_{p^k} together with the positivity machinery built on
// top of it: positive elements (nonzero squares), square roots, positive
// square roots, and the closed-form classification of definite fields.
//
// Elements of F_{p^k} are polynomials over F_p reduced modulo a monic
// irreducible of degree k. Internally an element is encoded as the integer
// sum c_i * p^i of its coefficient vector (`Value`); that encoding is also the
// deterministic scan order used wherever the library enumerates a field.

#include "error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ffpd {

using Value = std::uint64_t;

/// Supported bounds: p < 2^31, 1 <= k <= 16 and p^k < 2^62.
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;
inline constexpr unsigned kMaxDegree = 16;
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// Distinct prime factors of n (trial division), ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// If n = p^k for a prime p, returns {p, k}.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto factors = prime_factors(n);
    if (factors.size() != 1) return std::nullopt;
    unsigned k = 0;
    for (auto m = n; m > 1; m /= factors[0]) ++k;
    return std::pair{factors[0], k};
}

namespace detail {

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, base, p);
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t reduce_signed(std::int64_t a, std::uint64_t p) {
    auto r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

// Dense polynomials over F_p, coefficients low-degree-first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const auto dm = m.size() - 1;
    const auto lead_inv = mod_pow(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const auto shift = a.size() - 1 - dm;
        const auto c = mod_mul(a.back(), lead_inv, p);
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - mod_mul(c, m[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mod_mul(a[i], b[j], p)) % p;
        }
    }
    return poly_mod(std::move(r), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or: a monic f of degree k is irreducible over F_p iff
/// gcd(f, x^{p^i} - x) = 1 for every 1 <= i <= k/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const auto k = f.size() - 1;
    if (k == 1) return true;
    Poly h{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly d = h;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (d.empty()) return false;
        if (poly_gcd(f, d, p).size() > 1) return false;
    }
    return true;
}

struct FieldData {
    std::uint64_t p = 2;
    unsigned k = 1;
    std::uint64_t q = 2;
    Poly modulus;                        // length k+1, monic
    std::vector<std::uint32_t> exp_table; // extension fields with q <= kTableLimit
    std::vector<std::uint32_t> log_table;
};

inline constexpr std::uint64_t kTableLimit = 1u << 16;

} // namespace detail

class Elem;

/// A finite field F_q, q = p^k, with a fixed polynomial basis.
///
/// Cheap to copy (shared immutable state). Two Field handles compare equal iff
/// they have the same p, k and defining modulus.
class Field {
public:
    /// Builds and validates F_{p^k}. Without a modulus, k > 1 selects the
    /// lexicographically smallest monic irreducible, comparing coefficients
    /// low-degree-first.
    static Field make(std::uint64_t p, unsigned k = 1,
                      std::optional<std::vector<std::int64_t>> modulus = std::nullopt);

    std::uint64_t p() const noexcept { return d_->p; }
    unsigned k() const noexcept { return d_->k; }
    std::uint64_t q() const noexcept { return d_->q; }
    std::uint64_t characteristic() const noexcept { return d_->p; }
    /// Coefficients low-degree-first, length k+1, leading coefficient 1.
    const std::vector<std::uint64_t>& modulus() const noexcept { return d_->modulus; }

    // Raw arithmetic on encoded values. No range checks: callers pass values < q.
    Value add(Value a, Value b) const noexcept;
    Value sub(Value a, Value b) const noexcept;
    Value neg(Value a) const noexcept;
    Value mul(Value a, Value b) const noexcept;
    Value inv(Value a) const; // DivisionByZero
    Value div(Value a, Value b) const { return mul(a, inv(b)); }
    Value pow(Value a, std::uint64_t e) const noexcept;
    Value pow_signed(Value a, std::int64_t e) const;

    Elem zero() const;
    Elem one() const;
    /// Element with encoded value v (IndexOutOfRange if v >= q).
    Elem at(Value v) const;
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(std::int64_t n) const;
    /// Element with the given coefficients (low-degree-first, length <= k).
    Elem from_coeffs(std::span<const std::int64_t> coeffs) const;

    std::vector<std::uint64_t> coeffs(Value v) const;
    Value encode(std::span<const std::uint64_t> coeffs) const noexcept;

    /// "GF(p)" or "GF(p^k);modulus=c0,...,ck".
    std::string literal() const;
    std::string format(Value v) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->k == b.d_->k && a.d_->modulus == b.d_->modulus);
    }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    Value mul_slow(Value a, Value b) const noexcept;

    std::shared_ptr<const detail::FieldData> d_;
};

/// One element of a Field. Arithmetic across different fields throws FieldMismatch.
class Elem {
public:
    Elem(Field field, Value v) : field_(std::move(field)), v_(v) {}

    const Field& field() const noexcept { return field_; }
    Value value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    std::vector<std::uint64_t> coeffs() const { return field_.coeffs(v_); }

    Elem operator+(const Elem& o) const { check(o); return {field_, field_.add(v_, o.v_)}; }
    Elem operator-(const Elem& o) const { check(o); return {field_, field_.sub(v_, o.v_)}; }
    Elem operator*(const Elem& o) const { check(o); return {field_, field_.mul(v_, o.v_)}; }
    Elem operator/(const Elem& o) const { check(o); return {field_, field_.div(v_, o.v_)}; }
    Elem operator-() const { return {field_, field_.neg(v_)}; }
    Elem inv() const { return {field_, field_.inv(v_)}; }
    Elem pow(std::int64_t e) const { return {field_, field_.pow_signed(v_, e)}; }

    std::string to_string() const { return field_.format(v_); }

    friend bool operator==(const Elem& a, const Elem& b) noexcept {
        return a.v_ == b.v_ && a.field_ == b.field_;
    }
    /// Orders by encoded value (the field scan order); fields must match.
    friend bool operator<(const Elem& a, const Elem& b) noexcept { return a.v_ < b.v_; }

private:
    void check(const Elem& o) const {
        if (!(field_ == o.field_)) {
            throw Error(ErrorKind::FieldMismatch, "elements of " + field_.literal() + " and " + o.field_.literal());
        }
    }

    Field field_;
    Value v_;
};

// ---------------------------------------------------------------------------
// Field implementation
// ---------------------------------------------------------------------------

inline Field Field::make(std::uint64_t p, unsigned k, std::optional<std::vector<std::int64_t>> modulus) {
    if (k == 0) throw Error(ErrorKind::DegreeMismatch, "extension degree must be at least 1");
    if (p >= kMaxPrime) throw Error(ErrorKind::UnsupportedField, "characteristic must be below 2^31");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (k > kMaxDegree) throw Error(ErrorKind::UnsupportedField, "extension degree must be at most 16");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > kMaxOrder / p) throw Error(ErrorKind::UnsupportedField, "field order must be below 2^62");
        q *= p;
    }

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->k = k;
    d->q = q;

    if (modulus) {
        if (modulus->size() != k + 1) {
            throw Error(ErrorKind::DegreeMismatch,
                        "modulus has " + std::to_string(modulus->size()) + " coefficients, expected " +
                            std::to_string(k + 1));
        }
        detail::Poly m;
        for (auto c : *modulus) m.push_back(detail::reduce_signed(c, p));
        if (m.back() != 1) throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree " + std::to_string(k));
        if (!detail::is_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
        d->modulus = std::move(m);
    } else if (k == 1) {
        d->modulus = {0, 1};
    } else {
        // Enumerate (c0, ..., c_{k-1}) with c0 most significant.
        detail::Poly m(k + 1, 0);
        m[k] = 1;
        for (;;) {
            if (m[0] != 0 && detail::is_irreducible(m, p)) break;
            std::size_t i = k;
            while (i-- > 0) {
                if (++m[i] < p) break;
                m[i] = 0;
            }
        }
        d->modulus = std::move(m);
    }

    if (k > 1 && q <= detail::kTableLimit) {
        Field slow(d);
        const auto factors = prime_factors(q - 1);
        Value g = 1;
        for (Value cand = 1; cand < q; ++cand) {
            bool ok = true;
            for (auto r : factors) {
                Value acc = 1, base = cand;
                for (auto e = (q - 1) / r; e; e >>= 1) {
                    if (e & 1) acc = slow.mul_slow(acc, base);
                    base = slow.mul_slow(base, base);
                }
                if (acc == 1) { ok = false; break; }
            }
            if (ok) { g = cand; break; }
        }
        d->exp_table.resize(2 * (q - 1));
        d->log_table.assign(q, 0);
        Value x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            d->exp_table[i] = d->exp_table[i + q - 1] = static_cast<std::uint32_t>(x);
            d->log_table[x] = static_cast<std::uint32_t>(i);
            x = slow.mul_slow(x, g);
        }
    }
    return Field(std::move(d));
}

inline Value Field::add(Value a, Value b) const noexcept {
    const auto& d = *d_;
    if (d.k == 1) {
        auto s = a + b;
        return s >= d.p ? s - d.p : s;
    }
    if (d.p == 2) return a ^ b;
    Value r = 0, scale = 1;
    for (unsigned i = 0; i < d.k; ++i) {
        auto s = a % d.p + b % d.p;
        if (s >= d.p) s -= d.p;
        r += s * scale;
        scale *= d.p;
        a /= d.p;
        b /= d.p;
    }
    return r;
}

inline Value Field::neg(Value a) const noexcept {
    const auto& d = *d_;
    if (d.k == 1) return a == 0 ? 0 : d.p - a;
    if (d.p == 2) return a;
    Value r = 0, scale = 1;
    for (unsigned i = 0; i < d.k; ++i) {
        auto c = a % d.p;
        r += (c == 0 ? 0 : d.p - c) * scale;
        scale *= d.p;
        a /= d.p;
    }
    return r;
}

inline Value Field::sub(Value a, Value b) const noexcept {
    if (d_->k == 1) return a >= b ? a - b : a + d_->p - b;
    return add(a, neg(b));
}

inline Value Field::mul(Value a, Value b) const noexcept {
    const auto& d = *d_;
    if (d.k == 1) return a * b % d.p; // p < 2^31, so a*b < 2^62
    if (a == 0 || b == 0) return 0;
    if (!d.exp_table.empty()) return d.exp_table[d.log_table[a] + d.log_table[b]];
    return mul_slow(a, b);
}

inline Value Field::mul_slow(Value a, Value b) const noexcept {
    const auto& d = *d_;
    const auto p = d.p;
    const auto k = d.k;
    std::array<std::uint64_t, 2 * kMaxDegree> x{}, y{}, prod{};
    for (unsigned i = 0; i < k; ++i) {
        x[i] = a % p; a /= p;
        y[i] = b % p; b /= p;
    }
    for (unsigned i = 0; i < k; ++i) {
        if (!x[i]) continue;
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j] % p) % p;
    }
    for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
        const auto c = prod[deg];
        if (!c) continue;
        for (unsigned i = 0; i <= k; ++i) {
            auto& slot = prod[deg - k + i];
            slot = (slot + p - c * d.modulus[i] % p) % p;
        }
    }
    return encode(std::span<const std::uint64_t>(prod.data(), k));
}

inline Value Field::pow(Value a, std::uint64_t e) const noexcept {
    Value r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline Value Field::inv(Value a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + literal());
    const auto& d = *d_;
    if (!d.exp_table.empty()) return d.exp_table[(d.q - 1 - d.log_table[a]) % (d.q - 1)];
    return pow(a, d.q - 2);
}

inline Value Field::pow_signed(Value a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    // |e| may be 2^63; reduce modulo the group order first.
    const auto m = static_cast<std::uint64_t>(-(e + 1)) + 1;
    return pow(inv(a), m % (q() - 1));
}

inline std::vector<std::uint64_t> Field::coeffs(Value v) const {
    std::vector<std::uint64_t> c(k());
    for (auto& x : c) {
        x = v % p();
        v /= p();
    }
    return c;
}

inline Value Field::encode(std::span<const std::uint64_t> coeffs) const noexcept {
    Value r = 0;
    for (auto i = coeffs.size(); i-- > 0;) r = r * p() + coeffs[i];
    return r;
}

inline std::string Field::literal() const {
    std::string s = "GF(" + std::to_string(p());
    if (k() == 1) return s + ")";
    s += "^" + std::to_string(k()) + ");modulus=";
    for (std::size_t i = 0; i < modulus().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus()[i]);
    }
    return s;
}

inline std::string Field::format(Value v) const {
    if (k() == 1) return std::to_string(v);
    std::string s = "[";
    auto c = coeffs(v);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

inline Elem Field::zero() const { return {*this, 0}; }
inline Elem Field::one() const { return {*this, 1}; }

inline Elem Field::at(Value v) const {
    if (v >= q()) throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(v) + " not below q");
    return {*this, v};
}

inline Elem Field::from_int(std::int64_t n) const { return {*this, detail::reduce_signed(n, p())}; }

inline Elem Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > k()) {
        throw Error(ErrorKind::DegreeMismatch, "element has " + std::to_string(coeffs.size()) +
                                                   " coefficients, field degree is " + std::to_string(k()));
    }
    std::vector<std::uint64_t> c(k(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = detail::reduce_signed(coeffs[i], p());
    return {*this, encode(c)};
}

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_int(std::string_view s, std::string_view what) {
    s = strip(s);
    Int v{};
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::ParseError, "bad " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

inline std::vector<std::int64_t> parse_int_list(std::string_view s, std::string_view what) {
    std::vector<std::int64_t> out;
    s = strip(s);
    if (s.empty()) return out;
    for (;;) {
        auto comma = s.find(',');
        out.push_back(parse_int<std::int64_t>(s.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace detail

/// Parses "GF(p)", "GF(p^k)", "GF(q)" for a prime power q, or a bare "p",
/// "p^k" or "q", each optionally followed by ";modulus=c0,c1,...,ck".
inline Field parse_field(std::string_view text) {
    auto s = detail::strip(text);
    std::optional<std::vector<std::int64_t>> modulus;
    if (auto semi = s.find(';'); semi != std::string_view::npos) {
        auto rest = detail::strip(s.substr(semi + 1));
        s = detail::strip(s.substr(0, semi));
        constexpr std::string_view key = "modulus=";
        if (rest.substr(0, key.size()) != key) {
            throw Error(ErrorKind::ParseError, "expected ';modulus=...' in field literal '" + std::string(text) + "'");
        }
        modulus = detail::parse_int_list(rest.substr(key.size()), "modulus coefficient");
    }
    if (s.size() >= 3 && (s.substr(0, 3) == "GF(" || s.substr(0, 3) == "gf(")) {
        if (s.back() != ')') throw Error(ErrorKind::ParseError, "unbalanced field literal '" + std::string(text) + "'");
        s = s.substr(3, s.size() - 4);
    }
    std::uint64_t p = 0;
    unsigned k = 1;
    if (auto caret = s.find('^'); caret != std::string_view::npos) {
        p = detail::parse_int<std::uint64_t>(s.substr(0, caret), "characteristic");
        k = detail::parse_int<unsigned>(s.substr(caret + 1), "extension degree");
    } else {
        auto q = detail::parse_int<std::uint64_t>(s, "field order");
        if (is_prime(q) || q < 2 || q >= kMaxPrime) {
            p = q;
        } else if (auto pk = prime_power(q)) {
            p = pk->first;
            k = pk->second;
        } else {
            throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
        }
    }
    return Field::make(p, k, std::move(modulus));
}

/// Parses an element literal: an integer (mapped through Z -> F_p) or
/// "[c0,...,c_{k-1}]".
inline Elem parse_elem(const Field& field, std::string_view text) {
    auto s = detail::strip(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw Error(ErrorKind::ParseError, "unbalanced element literal '" + std::string(text) + "'");
        auto c = detail::parse_int_list(s.substr(1, s.size() - 2), "element coefficient");
        return field.from_coeffs(c);
    }
    return field.from_int(detail::parse_int<std::int64_t>(s, "element"));
}

// ---------------------------------------------------------------------------
// Positivity
// ---------------------------------------------------------------------------

/// x is positive iff it is a nonzero square.
inline bool is_positive(const Field& f, Value x) noexcept {
    if (x == 0) return false;
    if (f.p() == 2) return true;
    return f.pow(x, (f.q() - 1) / 2) == 1;
}

inline bool is_positive(const Elem& x) noexcept { return is_positive(x.field(), x.value()); }

/// All positive elements in scan order: (q-1)/2 of them for odd q, q-1 in characteristic 2.
inline std::vector<Elem> positives(const Field& f) {
    std::vector<Elem> out;
    for (Value v = 1; v < f.q(); ++v) {
        if (is_positive(f, v)) out.emplace_back(f, v);
    }
    return out;
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw Error(ErrorKind::EvenOrCompositeModulus, std::to_string(p) + " is not an odd prime");
    }
    const auto up = static_cast<std::uint64_t>(p);
    const auto r = detail::reduce_signed(a, up);
    if (r == 0) return 0;
    return detail::mod_pow(r, (up - 1) / 2, up) == 1 ? 1 : -1;
}

/// Every square root of x, ascending by encoded value. Empty when x is a
/// non-square.
///
/// Characteristic 2 uses the inverse Frobenius x^(2^(k-1)); q = 3 (mod 4)
/// uses x^((q+1)/4); the remaining odd fields are scanned exhaustively.
inline std::vector<Elem> sqrt(const Elem& x) {
    const auto& f = x.field();
    if (x.is_zero()) return {f.zero()};
    if (f.p() == 2) return {Elem(f, f.pow(x.value(), f.q() / 2))};
    std::vector<Elem> roots;
    if (f.q() % 4 == 3) {
        const auto c = f.pow(x.value(), (f.q() + 1) / 4);
        if (f.mul(c, c) == x.value()) {
            roots.emplace_back(f, c);
            roots.emplace_back(f, f.neg(c));
        }
    } else {
        for (Value v = 1; v < f.q() && roots.size() < 2; ++v) {
            if (f.mul(v, v) == x.value()) roots.emplace_back(f, v);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// The smallest positive square root of x, if any. Unique in a definite field.
inline std::optional<Elem> positive_sqrt(const Elem& x) {
    for (auto& r : sqrt(x)) {
        if (is_positive(r)) return r;
    }
    return std::nullopt;
}

/// Definite iff characteristic 2, or q = p^k with p = 3 (mod 4) and k odd.
inline bool is_definite(const Field& f) noexcept {
    return f.p() == 2 || (f.p() % 4 == 3 && f.k() % 2 == 1);
}

/// First element, in scan order, whose multiplicative order is q-1.
inline Elem generator(const Field& f) {
    const auto order = f.q() - 1;
    const auto factors = prime_factors(order);
    for (Value v = 1; v < f.q(); ++v) {
        bool ok = true;
        for (auto r : factors) {
            if (f.pow(v, order / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return {f, v};
    }
    return f.one(); // unreachable: F_q^* is cyclic
}

} // namespace ffpd
