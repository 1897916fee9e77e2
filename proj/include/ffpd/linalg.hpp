#pragma once

// Dense exact matrices over a single finite field and the decompositions and
// tests of positive-definiteness built on them.
//
// Indices are 0-based throughout this header; user-facing layers print them
// 1-based.

#include "gf.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffpd {

class Mat {
public:
    /// Zero matrix. Both dimensions must be positive.
    Mat(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        if (rows == 0 || cols == 0) throw Error(ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    }

    static Mat identity(const Field& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
        return m;
    }

    /// Ones on the anti-diagonal (entry (i,j) is 1 iff i + j = n - 1).
    static Mat exchange(const Field& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.raw(i, n - 1 - i) = 1;
        return m;
    }

    /// Entries are integers mapped through Z -> F_p.
    static Mat from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
        if (rows.empty() || rows.front().empty()) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
        Mat m(f, rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.raw(i, j) = f.from_int(rows[i][j]).value();
        }
        return m;
    }

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Value raw(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Value& raw(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    std::span<const Value> data() const noexcept { return data_; }

    Elem at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return {field_, raw(i, j)};
    }

    void set(std::size_t i, std::size_t j, const Elem& e) {
        check_index(i, j);
        if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "entry from " + e.field().literal());
        raw(i, j) = e.value();
    }

    bool is_symmetric() const noexcept {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (raw(i, j) != raw(j, i)) return false;
        return true;
    }

    bool is_zero() const noexcept {
        for (auto v : data_)
            if (v) return false;
        return true;
    }

    bool is_lower_triangular() const noexcept {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (raw(i, j)) return false;
        return true;
    }

    bool is_upper_triangular() const noexcept {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < i && j < cols_; ++j)
                if (raw(i, j)) return false;
        return true;
    }

    std::vector<Elem> diagonal() const {
        std::vector<Elem> d;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.emplace_back(field_, raw(i, i));
        return d;
    }

    /// Rows of encoded values; handy for tests and printing.
    std::vector<std::vector<Value>> to_values() const {
        std::vector<std::vector<Value>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) {
            throw Error(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                        ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Value> data_;
};

struct LduResult {
    Mat L; // unit lower triangular
    Mat D; // diagonal of pivots
    Mat U; // unit upper triangular

    std::vector<Elem> pivots() const { return D.diagonal(); }
};

struct CholResult {
    Mat L;            // lower triangular, L * L^T equals the input
    std::size_t rank; // number of positive diagonal entries; columns >= rank are zero
};

namespace detail {

inline void require_same_field(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorKind::FieldMismatch, "matrices over " + a.field().literal() + " and " + b.field().literal());
    }
}

inline void require_square(const Mat& a) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
    }
}

inline void require_symmetric_definite(const Mat& a) {
    require_square(a);
    if (!a.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
    if (!is_definite(a.field())) throw Error(ErrorKind::NonDefiniteField, a.field().literal() + " is not a definite field");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Elementary operations
// ---------------------------------------------------------------------------

inline Mat operator*(const Mat& a, const Mat& b) {
    detail::require_same_field(a, b);
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                      "x" + std::to_string(b.cols()));
    }
    const auto& f = a.field();
    Mat c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const auto x = a.raw(i, l);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.raw(i, j) = f.add(c.raw(i, j), f.mul(x, b.raw(l, j)));
        }
    }
    return c;
}

namespace detail {
template <typename Op>
Mat entrywise(const Mat& a, const Mat& b, Op op) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "shapes differ");
    Mat c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.raw(i, j) = op(a.raw(i, j), b.raw(i, j));
    return c;
}
} // namespace detail

inline Mat operator+(const Mat& a, const Mat& b) {
    const auto& f = a.field();
    return detail::entrywise(a, b, [&](Value x, Value y) { return f.add(x, y); });
}

inline Mat operator-(const Mat& a, const Mat& b) {
    const auto& f = a.field();
    return detail::entrywise(a, b, [&](Value x, Value y) { return f.sub(x, y); });
}

inline Mat transpose(const Mat& a) {
    Mat t(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t.raw(j, i) = a.raw(i, j);
    return t;
}

inline Mat scalar_mul(const Elem& r, const Mat& a) {
    if (!(r.field() == a.field())) throw Error(ErrorKind::FieldMismatch, "scalar from " + r.field().literal());
    Mat c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.raw(i, j) = a.field().mul(r.value(), a.raw(i, j));
    return c;
}

/// Block Kronecker product: block (i,j) is a_ij * B.
inline Mat kronecker(const Mat& a, const Mat& b) {
    detail::require_same_field(a, b);
    const auto& f = a.field();
    Mat c(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    c.raw(i * b.rows() + r, j * b.cols() + s) = f.mul(a.raw(i, j), b.raw(r, s));
    return c;
}

inline Mat hadamard(const Mat& a, const Mat& b) {
    const auto& f = a.field();
    return detail::entrywise(a, b, [&](Value x, Value y) { return f.mul(x, y); });
}

/// Sum over i,j of a_ij * b_ij.
inline Elem frobenius_inner(const Mat& a, const Mat& b) {
    const auto h = hadamard(a, b);
    Value s = 0;
    for (auto v : h.data()) s = a.field().add(s, v);
    return {a.field(), s};
}

/// Removes the listed rows and the same columns, keeping the order of the rest.
inline Mat principal_submatrix(const Mat& a, std::span<const std::size_t> drop) {
    detail::require_square(a);
    std::vector<bool> dropped(a.rows(), false);
    for (auto i : drop) {
        if (i >= a.rows()) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i + 1) + " out of range");
        dropped[i] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!dropped[i]) keep.push_back(i);
    if (keep.empty()) throw Error(ErrorKind::DimensionMismatch, "cannot drop every row");
    Mat s(a.field(), keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) s.raw(i, j) = a.raw(keep[i], keep[j]);
    return s;
}

/// Top-left k x k block.
inline Mat leading_submatrix(const Mat& a, std::size_t k) {
    if (k == 0 || k > a.rows() || k > a.cols()) throw Error(ErrorKind::IndexOutOfRange, "leading block size " + std::to_string(k));
    Mat s(a.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s.raw(i, j) = a.raw(i, j);
    return s;
}

/// P A P^T for the permutation listing the new row order: result(i,j) = a(order[i], order[j]).
inline Mat permute_symmetric(const Mat& a, std::span<const std::size_t> order) {
    detail::require_square(a);
    std::vector<bool> seen(a.rows(), false);
    if (order.size() != a.rows()) throw Error(ErrorKind::NotPermutation, "order has wrong length");
    for (auto v : order) {
        if (v >= a.rows() || seen[v]) throw Error(ErrorKind::NotPermutation, "order is not a permutation");
        seen[v] = true;
    }
    Mat p(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) p.raw(i, j) = a.raw(order[i], order[j]);
    return p;
}

// ---------------------------------------------------------------------------
// Determinants and inverses (row swaps allowed)
// ---------------------------------------------------------------------------

inline Elem det(const Mat& a) {
    detail::require_square(a);
    const auto& f = a.field();
    const auto n = a.rows();
    Mat w = a;
    Value d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w.raw(piv, c) == 0) ++piv;
        if (piv == n) return f.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.raw(piv, j), w.raw(c, j));
            d = f.neg(d);
        }
        const auto pv = w.raw(c, c);
        d = f.mul(d, pv);
        const auto pinv = f.inv(pv);
        for (std::size_t i = c + 1; i < n; ++i) {
            const auto m = f.mul(w.raw(i, c), pinv);
            if (!m) continue;
            for (std::size_t j = c; j < n; ++j) w.raw(i, j) = f.sub(w.raw(i, j), f.mul(m, w.raw(c, j)));
        }
    }
    return {f, d};
}

/// [det(A_1), ..., det(A_n)] for the leading k x k blocks A_k.
inline std::vector<Elem> leading_minors(const Mat& a) {
    detail::require_square(a);
    std::vector<Elem> out;
    for (std::size_t k = 1; k <= a.rows(); ++k) out.push_back(det(leading_submatrix(a, k)));
    return out;
}

/// Gauss-Jordan inverse; throws Singular.
inline Mat inverse(const Mat& a) {
    detail::require_square(a);
    const auto& f = a.field();
    const auto n = a.rows();
    Mat w = a;
    Mat inv = Mat::identity(f, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w.raw(piv, c) == 0) ++piv;
        if (piv == n) throw Error(ErrorKind::Singular, "matrix is singular");
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.raw(piv, j), w.raw(c, j));
                std::swap(inv.raw(piv, j), inv.raw(c, j));
            }
        }
        const auto pinv = f.inv(w.raw(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            w.raw(c, j) = f.mul(w.raw(c, j), pinv);
            inv.raw(c, j) = f.mul(inv.raw(c, j), pinv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const auto m = w.raw(i, c);
            if (!m) continue;
            for (std::size_t j = 0; j < n; ++j) {
                w.raw(i, j) = f.sub(w.raw(i, j), f.mul(m, w.raw(c, j)));
                inv.raw(i, j) = f.sub(inv.raw(i, j), f.mul(m, inv.raw(c, j)));
            }
        }
    }
    return inv;
}

/// Exchange-conjugated inverse, J A^{-1} J.
inline Mat anti_inverse(const Mat& a) {
    const auto inv = inverse(a);
    const auto j = Mat::exchange(a.field(), a.rows());
    return j * inv * j;
}

// ---------------------------------------------------------------------------
// Swap-free factorizations
// ---------------------------------------------------------------------------

/// Doolittle elimination without row swaps. Throws ZeroPivot(k) when the k-th
/// pivot, det(A_k)/det(A_{k-1}), vanishes.
inline LduResult ldu(const Mat& a) {
    detail::require_square(a);
    const auto& f = a.field();
    const auto n = a.rows();
    Mat w = a;
    Mat l = Mat::identity(f, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto pv = w.raw(k, k);
        if (!pv) throw Error(ErrorKind::ZeroPivot, "pivot " + std::to_string(k + 1) + " is zero", k);
        const auto pinv = f.inv(pv);
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto m = f.mul(w.raw(i, k), pinv);
            l.raw(i, k) = m;
            if (!m) continue;
            for (std::size_t j = k; j < n; ++j) w.raw(i, j) = f.sub(w.raw(i, j), f.mul(m, w.raw(k, j)));
        }
    }
    Mat d(f, n, n);
    Mat u(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d.raw(i, i) = w.raw(i, i);
        const auto pinv = f.inv(w.raw(i, i));
        for (std::size_t j = i; j < n; ++j) u.raw(i, j) = f.mul(w.raw(i, j), pinv);
    }
    return {std::move(l), std::move(d), std::move(u)};
}

/// Strict Cholesky factor: L * L^T = A with every L_ii positive.
///
/// Runs ldu, requires each pivot to be positive, and returns L * sqrt(D) with
/// the positive square root of every pivot. Throws NotPositiveDefinite(k) at
/// the first zero or non-positive pivot.
inline CholResult cholesky(const Mat& a) {
    detail::require_symmetric_definite(a);
    const auto& f = a.field();
    const auto n = a.rows();
    LduResult fact = [&] {
        try {
            return ldu(a);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ZeroPivot) throw;
            throw Error(ErrorKind::NotPositiveDefinite, "pivot " + std::to_string(*e.index() + 1) + " is zero", e.index());
        }
    }();
    if (!(fact.U == transpose(fact.L))) {
        throw std::logic_error("ldu of a symmetric matrix produced U != L^T");
    }
    Mat root(f, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Elem pv(f, fact.D.raw(k, k));
        auto r = is_positive(pv) ? positive_sqrt(pv) : std::nullopt;
        if (!r) {
            throw Error(ErrorKind::NotPositiveDefinite,
                        "pivot " + std::to_string(k + 1) + " = " + pv.to_string() + " is not positive", k);
        }
        root.raw(k, k) = r->value();
    }
    return {fact.L * root, n};
}

/// Relaxed Cholesky: like `cholesky`, except that elimination may stop early
/// once the remaining Schur complement is entirely zero. The columns of L from
/// that point on are zero, so L * L^T = A still holds and `rank` reports how
/// many positive pivots were used.
inline CholResult cholesky_psd(const Mat& a) {
    detail::require_symmetric_definite(a);
    const auto& f = a.field();
    const auto n = a.rows();
    Mat s = a;
    Mat l(f, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto pv = s.raw(k, k);
        if (!is_positive(f, pv)) {
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (s.raw(i, j)) {
                        throw Error(ErrorKind::NotPositiveDefinite,
                                    "pivot " + std::to_string(k + 1) + " = " + f.format(pv) + " is not positive", k);
                    }
            return {std::move(l), k};
        }
        const auto root = positive_sqrt(Elem(f, pv))->value();
        const auto root_inv = f.inv(root);
        const auto pinv = f.inv(pv);
        l.raw(k, k) = root;
        for (std::size_t i = k + 1; i < n; ++i) l.raw(i, k) = f.mul(s.raw(i, k), root_inv);
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto m = f.mul(s.raw(i, k), pinv);
            if (!m) continue;
            for (std::size_t j = k + 1; j < n; ++j) s.raw(i, j) = f.sub(s.raw(i, j), f.mul(m, s.raw(k, j)));
        }
    }
    return {std::move(l), n};
}

/// Leading-minor test: A is positive definite iff every leading principal
/// minor is positive.
inline bool is_positive_definite(const Mat& a) {
    detail::require_symmetric_definite(a);
    for (const auto& m : leading_minors(a))
        if (!is_positive(m)) return false;
    return true;
}

/// First leading minor (0-based index) that is not positive, if any.
inline std::optional<std::size_t> first_nonpositive_minor(const Mat& a) {
    const auto minors = leading_minors(a);
    for (std::size_t k = 0; k < minors.size(); ++k)
        if (!is_positive(minors[k])) return k;
    return std::nullopt;
}

/// Swap-free symmetric elimination that works over any finite field. Returns
/// the number of positive pivots consumed before the remaining block became
/// zero, or nothing if a non-positive pivot is met with a nonzero remainder.
inline std::optional<std::size_t> relaxed_pivot_rank(const Mat& a) {
    detail::require_square(a);
    const auto& f = a.field();
    const auto n = a.rows();
    Mat s = a;
    for (std::size_t k = 0; k < n; ++k) {
        bool rest_zero = true;
        for (std::size_t i = k; i < n && rest_zero; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (s.raw(i, j)) { rest_zero = false; break; }
        if (rest_zero) return k;
        const auto pv = s.raw(k, k);
        if (!is_positive(f, pv)) return std::nullopt;
        const auto pinv = f.inv(pv);
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto m = f.mul(s.raw(i, k), pinv);
            if (!m) continue;
            for (std::size_t j = k; j < n; ++j) s.raw(i, j) = f.sub(s.raw(i, j), f.mul(m, s.raw(k, j)));
        }
    }
    return n;
}

/// Positive definite, or positive definite up to a trailing all-zero Schur
/// complement (the relaxed Cholesky mode).
inline bool is_positive_definite_relaxed(const Mat& a) {
    detail::require_symmetric_definite(a);
    return relaxed_pivot_rank(a).has_value();
}

// ---------------------------------------------------------------------------
// Gram matrices and isotropy
// ---------------------------------------------------------------------------

/// B^T B for a nonsingular square B.
inline Mat gram_from(const Mat& b) {
    detail::require_square(b);
    if (det(b).is_zero()) throw Error(ErrorKind::Singular, "Gram factor has dependent columns");
    return transpose(b) * b;
}

/// Gram-matrix test, decided by the leading-minor criterion.
/// Note the true set {B^T B : det B != 0} is strictly larger than the PD set
/// (over GF(2), [[0,1],[1,1]] = B^T B for B = [[1,1],[1,0]]), so this answers
/// "PD" and not literal membership.
inline bool is_gram(const Mat& a) { return is_positive_definite(a); }

/// v^T A v.
inline Elem quadratic_form(const Mat& a, std::span<const Value> v) {
    detail::require_square(a);
    if (v.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from matrix size");
    const auto& f = a.field();
    Value s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        Value row = 0;
        for (std::size_t j = 0; j < v.size(); ++j) row = f.add(row, f.mul(a.raw(i, j), v[j]));
        s = f.add(s, f.mul(v[i], row));
    }
    return {f, s};
}

inline constexpr std::uint64_t kDefaultIsotropicBound = 10'000'000;

/// First nonzero v with v^T A v = 0, scanning F_q^n as a base-q counter whose
/// first coordinate is the least significant digit. Always found for n >= 3.
inline std::optional<std::vector<Elem>> isotropic_vector(const Mat& a, std::uint64_t bound = kDefaultIsotropicBound) {
    detail::require_square(a);
    const auto& f = a.field();
    const auto n = a.rows();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > bound / f.q()) {
            throw Error(ErrorKind::SearchSpaceTooLarge, "q^n exceeds the isotropic search bound " + std::to_string(bound));
        }
        space *= f.q();
    }
    std::vector<Value> v(n, 0);
    for (std::uint64_t idx = 1; idx < space; ++idx) {
        for (std::size_t i = 0; i < n; ++i) {
            if (++v[i] < f.q()) break;
            v[i] = 0;
        }
        if (quadratic_form(a, v).is_zero()) {
            std::vector<Elem> out;
            for (auto x : v) out.emplace_back(f, x);
            return out;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and eigenvalues
// ---------------------------------------------------------------------------

/// det(xI - A), coefficients low-degree-first (the last one is 1).
///
/// Berkowitz's recurrence: division-free, so valid in every characteristic.
/// With A_r the leading r x r block split as [[M, c], [r^T, a]], the
/// polynomial of A_{r+1} is T * p_r where T is the lower-triangular Toeplitz
/// matrix with first column (1, -a, -r^T c, -r^T M c, -r^T M^2 c, ...).
inline std::vector<Elem> char_poly(const Mat& a) {
    detail::require_square(a);
    const auto& f = a.field();
    const auto n = a.rows();
    // High-degree-first while building.
    std::vector<Value> poly{1, f.neg(a.raw(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Value> col(r + 2, 0);
        col[0] = 1;
        col[1] = f.neg(a.raw(r, r));
        std::vector<Value> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a.raw(i, r);
        for (std::size_t t = 2; t < r + 2; ++t) {
            Value dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot = f.add(dot, f.mul(a.raw(r, i), v[i]));
            col[t] = f.neg(dot);
            std::vector<Value> next(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] = f.add(next[i], f.mul(a.raw(i, j), v[j]));
            v = std::move(next);
        }
        std::vector<Value> out(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] = f.add(out[i], f.mul(col[i - j], poly[j]));
        poly = std::move(out);
    }
    std::vector<Elem> low;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) low.emplace_back(f, *it);
    return low;
}

/// Evaluates a low-degree-first polynomial at x (Horner).
inline Value eval_poly(const Field& f, std::span<const Elem> coeffs, Value x) {
    Value acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), it->value());
    return acc;
}

/// Roots of the characteristic polynomial lying in the base field, ascending,
/// repeated according to multiplicity.
inline std::vector<Elem> eigenvalues_in_field(const Mat& a) {
    const auto& f = a.field();
    auto poly = char_poly(a);
    std::vector<Elem> roots;
    for (Value x = 0; x < f.q(); ++x) {
        while (poly.size() > 1 && eval_poly(f, poly, x) == 0) {
            roots.emplace_back(f, x);
            // Synthetic division by (t - x).
            std::vector<Elem> quot(poly.size() - 1, f.zero());
            Value carry = 0;
            for (std::size_t i = poly.size() - 1; i-- > 0;) {
                carry = f.add(poly[i + 1].value(), f.mul(carry, x));
                quot[i] = Elem(f, carry);
            }
            poly = std::move(quot);
        }
    }
    return roots;
}

} // namespace ffpd
