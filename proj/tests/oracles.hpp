#pragma once

// Brute-force reference computations used by the test suites. Each takes a
// different route from the library code it checks, e.g. squaring tables
// instead of Euler's criterion, cofactor expansion instead of elimination.

#include <ffpd/gf.hpp>
#include <ffpd/linalg.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using ffpd::Field;
using ffpd::Mat;
using ffpd::Value;

/// Positive elements found by squaring every nonzero element.
inline std::set<Value> squares(const Field& f) {
    std::set<Value> out;
    for (Value v = 1; v < f.q(); ++v) out.insert(f.mul(v, v));
    return out;
}

/// Every positive element has a positive square root (checked by table).
inline bool definite_by_enumeration(const Field& f) {
    const auto pos = squares(f);
    std::set<Value> squares_of_positives;
    for (auto r : pos) squares_of_positives.insert(f.mul(r, r));
    return squares_of_positives == pos;
}

/// All prime powers in [2, limit].
inline std::vector<std::pair<std::uint64_t, unsigned>> prime_powers_upto(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 2; q <= limit; ++q)
        if (auto pk = ffpd::prime_power(q)) out.push_back(*pk);
    return out;
}

/// Cofactor-expansion determinant (exponential; n <= 6).
inline Value cofactor_det(const Field& f, const std::vector<std::vector<Value>>& a) {
    const auto n = a.size();
    if (n == 1) return a[0][0];
    Value total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!a[0][j]) continue;
        std::vector<std::vector<Value>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Value> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        auto term = f.mul(a[0][j], cofactor_det(f, minor));
        total = (j % 2 == 0) ? f.add(total, term) : f.sub(total, term);
    }
    return total;
}

inline Value cofactor_det(const Mat& m) { return cofactor_det(m.field(), m.to_values()); }

// Polynomials low-degree-first over f.
using Poly = std::vector<Value>;

inline Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(r[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    return r;
}

inline Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return r;
}

/// det(xI - A) by cofactor expansion over F_q[x].
inline Poly char_poly_cofactor(const Mat& a) {
    const auto& f = a.field();
    const auto n = a.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Poly{f.neg(a.raw(i, j)), 1} : Poly{f.neg(a.raw(i, j))};
    std::function<Poly(const std::vector<std::vector<Poly>>&)> rec = [&](const auto& mm) -> Poly {
        const auto k = mm.size();
        if (k == 1) return mm[0][0];
        Poly total{0};
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<std::vector<Poly>> minor;
            for (std::size_t i = 1; i < k; ++i) {
                std::vector<Poly> row;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(mm[i][c]);
                minor.push_back(std::move(row));
            }
            auto term = poly_mul(f, mm[0][j], rec(minor));
            if (j % 2 == 1)
                for (auto& c : term) c = f.neg(c);
            total = poly_add(f, total, term);
        }
        return total;
    };
    auto p = rec(m);
    while (p.size() > n + 1) p.pop_back();
    p.resize(n + 1, 0);
    return p;
}

/// Calls fn on every n x n symmetric matrix over f.
template <typename Fn>
void for_each_symmetric(const Field& f, std::size_t n, Fn&& fn) {
    const auto slots = n * (n + 1) / 2;
    std::vector<Value> digits(slots, 0);
    for (;;) {
        Mat m(f, n, n);
        std::size_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.raw(i, j) = m.raw(j, i) = digits[s++];
        fn(m);
        std::size_t i = 0;
        for (; i < slots; ++i) {
            if (++digits[i] < f.q()) break;
            digits[i] = 0;
        }
        if (i == slots) return;
    }
}

/// Calls fn on every n x n matrix over f.
template <typename Fn>
void for_each_matrix(const Field& f, std::size_t n, Fn&& fn) {
    std::vector<Value> digits(n * n, 0);
    for (;;) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n * n; ++i) m.raw(i / n, i % n) = digits[i];
        fn(m);
        std::size_t i = 0;
        for (; i < n * n; ++i) {
            if (++digits[i] < f.q()) break;
            digits[i] = 0;
        }
        if (i == n * n) return;
    }
}

inline Mat random_symmetric(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Value> dist(0, f.q() - 1);
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.raw(i, j) = m.raw(j, i) = dist(rng);
    return m;
}

/// Random PD matrix by rejection against the leading-minor test computed with
/// cofactor determinants.
inline Mat random_pd(const Field& f, std::size_t n, std::mt19937_64& rng) {
    const auto pos = squares(f);
    for (;;) {
        auto m = random_symmetric(f, n, rng);
        bool ok = true;
        for (std::size_t k = 1; k <= n && ok; ++k) ok = pos.contains(cofactor_det(ffpd::leading_submatrix(m, k)));
        if (ok) return m;
    }
}

} // namespace oracle
