#pragma once

// Verification battery: the concrete counterexamples (run with their exact
// matrices) plus exhaustive and seeded-random checks of the positive results
// on small cases. Failures are reported, never thrown.

#include "json_io.hpp"
#include "pressing.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ffpd {

enum class CheckStatus { Pass, Fail };

struct CheckReport {
    std::string name;
    std::string anchor; // the claim being checked, in words
    CheckStatus status = CheckStatus::Fail;
    std::string details;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// FFPD_SEED if set and numeric, otherwise the fixed default.
inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("FFPD_SEED")) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec == std::errc{} && *ptr == '\0') return v;
    }
    return kDefaultSeed;
}

struct TheoremLimits {
    std::uint64_t q_max = 729; // definite-field classification, at most 4096
    std::size_t n_max = 3;     // exhaustive matrix suites over F_2 and F_3, at most 3
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_pairs = 200;       // per field, for the product battery
    std::size_t component_samples = 10000; // random 7-vertex graphs for the component rule
};

namespace bench {

inline std::string show(const Mat& m) { return mat_rows_to_json(m).dump(); }

inline std::string show(const std::vector<Elem>& es) {
    std::string s = "{";
    for (std::size_t i = 0; i < es.size(); ++i) s += (i ? "," : "") + es[i].to_string();
    return s + "}";
}

inline std::vector<Value> vals(const std::vector<Elem>& es) {
    std::vector<Value> out;
    for (const auto& e : es) out.push_back(e.value());
    return out;
}

inline CheckReport report(std::string name, std::string anchor, bool ok, std::string details) {
    return {std::move(name), std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)};
}

/// Calls fn on every n x n symmetric matrix over f.
template <typename Fn>
void each_symmetric(const Field& f, std::size_t n, Fn&& fn) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
    Mat m(f, n, n);
    for (;;) {
        fn(m);
        std::size_t s = 0;
        for (; s < slots.size(); ++s) {
            auto [i, j] = slots[s];
            auto next = m.raw(i, j) + 1;
            if (next == f.q()) next = 0;
            m.raw(i, j) = m.raw(j, i) = next;
            if (next) break;
        }
        if (s == slots.size()) return;
    }
}

/// Calls fn on every matrix over f whose entries may be nonzero only at the
/// given positions.
template <typename Fn>
void each_pattern(const Field& f, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& slots, Fn&& fn) {
    Mat m(f, n, n);
    for (;;) {
        fn(m);
        std::size_t s = 0;
        for (; s < slots.size(); ++s) {
            auto& x = m.raw(slots[s].first, slots[s].second);
            if (++x < f.q()) break;
            x = 0;
        }
        if (s == slots.size()) return;
    }
}

inline std::vector<std::pair<std::size_t, std::size_t>> all_slots(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.emplace_back(i, j);
    return s;
}

inline Mat random_pd(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Value> d(0, f.q() - 1);
    for (;;) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.raw(i, j) = m.raw(j, i) = d(rng);
        if (is_positive_definite(m)) return m;
    }
}

inline bool strict_cholesky_ok(const Mat& a) {
    try {
        cholesky(a);
        return true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotPositiveDefinite) throw;
        return false;
    }
}

// --- individual theorem checks ---------------------------------------------

inline CheckReport check_classification(std::uint64_t q_max) {
    std::size_t fields = 0;
    std::string bad;
    for (std::uint64_t q = 2; q <= q_max; ++q) {
        auto pk = prime_power(q);
        if (!pk) continue;
        ++fields;
        const auto f = Field::make(pk->first, pk->second);
        std::vector<char> is_square(q, 0);
        for (Value x = 1; x < q; ++x) is_square[f.mul(x, x)] = 1;
        std::vector<char> has_positive_root(q, 0);
        for (Value r = 1; r < q; ++r)
            if (is_square[r]) has_positive_root[f.mul(r, r)] = 1;
        bool brute = true;
        for (Value y = 1; y < q && brute; ++y)
            if (is_square[y] && !has_positive_root[y]) brute = false;
        if (brute != is_definite(f)) bad += (bad.empty() ? "" : ",") + std::to_string(q);
    }
    return report("definite-field-classification", "finite definite fields are char 2 or p = 3 mod 4 with odd k",
                  bad.empty(),
                  std::to_string(fields) + " prime powers q <= " + std::to_string(q_max) +
                      (bad.empty() ? " agree" : "; disagreement at q = " + bad));
}

inline CheckReport check_minors_vs_cholesky(std::size_t n_max) {
    std::size_t seen = 0, mismatches = 0;
    std::string example;
    auto run = [&](const Field& f, std::size_t n) {
        each_symmetric(f, n, [&](const Mat& a) {
            ++seen;
            const bool minors = is_positive_definite(a);
            bool nonsingular = true;
            for (const auto& m : leading_minors(a)) nonsingular = nonsingular && !m.is_zero();
            bool ok = true;
            if (nonsingular && minors != strict_cholesky_ok(a)) ok = false;
            if (minors) {
                auto c = cholesky(a);
                ok = ok && c.L * transpose(c.L) == a;
            }
            if (!ok && mismatches++ == 0) example = f.literal() + " " + show(a);
        });
    };
    for (std::size_t n = 1; n <= n_max; ++n) {
        run(Field::make(2), n);
        run(Field::make(3), n);
    }
    for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 2); ++n) run(Field::make(7), n);
    return report("minors-vs-cholesky", "positive leading minors iff a Cholesky factor exists", mismatches == 0,
                  std::to_string(seen) + " symmetric matrices" +
                      (mismatches ? ", " + std::to_string(mismatches) + " mismatches, first " + example : ", all agree"));
}

inline CheckReport check_gram(std::size_t n_max) {
    std::ostringstream d;
    bool ok = true;
    for (auto p : {2u, 3u}) {
        const auto f = Field::make(p);
        for (std::size_t n = 1; n <= n_max; ++n) {
            std::map<std::vector<Value>, Mat> grams;
            each_pattern(f, n, all_slots(n), [&](const Mat& b) {
                if (det(b).is_zero()) return;
                auto g = transpose(b) * b;
                grams.emplace(std::vector<Value>(g.data().begin(), g.data().end()), b);
            });
            std::size_t pd = 0, pd_missing = 0;
            each_symmetric(f, n, [&](const Mat& a) {
                if (!is_positive_definite(a)) return;
                ++pd;
                if (!grams.contains(std::vector<Value>(a.data().begin(), a.data().end()))) ++pd_missing;
            });
            const bool same = pd_missing == 0 && grams.size() == pd;
            if (d.tellp() > 0) d << "; ";
            d << f.literal() << " n=" << n << ": " << grams.size() << " Gram vs " << pd << " positive definite";
            if (!same) {
                ok = false;
                for (const auto& [key, b] : grams) {
                    Mat g(f, n, n);
                    for (std::size_t i = 0; i < key.size(); ++i) g.raw(i / n, i % n) = key[i];
                    if (!is_positive_definite(g)) {
                        d << " (e.g. " << show(g) << " = B^T B for B = " << show(b) << ")";
                        break;
                    }
                }
            }
        }
    }
    return report("gram-equals-pd", "a symmetric matrix is a Gram matrix iff it is positive definite", ok, d.str());
}

inline CheckReport check_gram_hereditary(std::size_t n_max) {
    std::size_t seen = 0, bad = 0;
    for (auto p : {2u, 3u}) {
        const auto f = Field::make(p);
        const std::size_t n = n_max;
        each_pattern(f, n, all_slots(n), [&](const Mat& b) {
            if (det(b).is_zero()) return;
            ++seen;
            const auto g = gram_from(b);
            for (std::size_t k = 1; k <= n; ++k) {
                Mat bk(f, n, k);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < k; ++j) bk.raw(i, j) = b.raw(i, j);
                if (!(leading_submatrix(g, k) == transpose(bk) * bk)) ++bad;
            }
        });
    }
    return report("gram-hereditary", "leading blocks of a Gram matrix are Gram matrices of the leading columns", bad == 0,
                  std::to_string(seen) + " nonsingular factors, " + std::to_string(bad) + " mismatches");
}

inline CheckReport check_cholesky_unique(std::size_t n_max) {
    std::size_t factors = 0, collisions = 0;
    auto run = [&](const Field& f, std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) slots.emplace_back(i, j);
        std::set<std::vector<Value>> products;
        each_pattern(f, n, slots, [&](const Mat& l) {
            for (std::size_t i = 0; i < n; ++i)
                if (!is_positive(f, l.raw(i, i))) return;
            ++factors;
            auto p = l * transpose(l);
            if (!products.emplace(p.data().begin(), p.data().end()).second) ++collisions;
        });
    };
    for (std::size_t n = 1; n <= n_max; ++n) {
        run(Field::make(2), n);
        run(Field::make(3), n);
    }
    for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 2); ++n) run(Field::make(7), n);
    return report("cholesky-unique", "L -> L L^T is injective on lower-triangular L with positive diagonal",
                  collisions == 0, std::to_string(factors) + " factors, " + std::to_string(collisions) + " collisions");
}

inline std::vector<CheckReport> check_products(std::size_t n_max, std::size_t pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t kron_bad = 0, anti_bad = 0, scalar_bad = 0, pivot_bad = 0, total = 0;
    std::uniform_int_distribution<std::size_t> dim(1, n_max);
    for (auto p : {2u, 3u, 7u}) {
        const auto f = Field::make(p);
        const auto pos = positives(f);
        for (std::size_t t = 0; t < pairs; ++t) {
            ++total;
            const auto a = random_pd(f, dim(rng), rng);
            const auto b = random_pd(f, dim(rng), rng);
            const auto k = kronecker(a, b);
            const auto lm = kronecker(cholesky(a).L, cholesky(b).L);
            if (!is_positive_definite(k) || !(lm * transpose(lm) == k)) ++kron_bad;
            if (!is_positive_definite(anti_inverse(a))) ++anti_bad;
            for (const auto& r : pos)
                if (!is_positive_definite(scalar_mul(r, a))) { ++scalar_bad; break; }
            for (const auto* m : {&a, &b}) {
                const auto fact = ldu(*m);
                const auto minors = leading_minors(*m);
                Value prod = 1;
                for (std::size_t i = 0; i < m->rows(); ++i) {
                    prod = f.mul(prod, fact.D.raw(i, i));
                    if (prod != minors[i].value()) { ++pivot_bad; break; }
                }
            }
        }
    }
    const auto tail = " over " + std::to_string(total) + " random pairs (GF(2), GF(3), GF(7); seed " + std::to_string(seed) + ")";
    return {
        report("kronecker-pd", "the Kronecker product of PD matrices is PD with factor L (x) M", kron_bad == 0,
               std::to_string(kron_bad) + " failures" + tail),
        report("anti-inverse-pd", "the anti-inverse of a PD matrix is PD", anti_bad == 0, std::to_string(anti_bad) + " failures" + tail),
        report("scalar-pd", "a positive multiple of a PD matrix is PD", scalar_bad == 0, std::to_string(scalar_bad) + " failures" + tail),
        report("pivot-law", "the k-th leading minor is the product of the first k pivots", pivot_bad == 0,
               std::to_string(pivot_bad) + " failures" + tail),
    };
}

inline CheckReport check_pressing_theorem() {
    const auto f2 = Field::make(2);
    std::size_t runs = 0, bad = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        each_symmetric(f2, n, [&](const Mat& a) {
            Pseudograph g(a);
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                ++runs;
                if ((run_sequence(g, perm).status == PressStatus::Success) != order_is_successful(g, perm)) ++bad;
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    }
    return report("pressing-theorem", "a vertex order presses successfully iff the reordered matrix is PD", bad == 0,
                  std::to_string(runs) + " (graph, order) pairs over GF(2), n <= 4, " + std::to_string(bad) + " mismatches");
}

inline CheckReport check_f3_triangle() {
    Pseudograph g(Mat::from_ints(Field::make(3), {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}}));
    std::vector<std::size_t> perm{0, 1, 2};
    std::size_t successes = 0;
    do {
        successes += run_sequence(g, perm).status == PressStatus::Success;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const bool none = !find_order(g).has_value() && successes == 0;
    return report("f3-triangle", "the GF(3) triangle with loops 1 and edges 2 is not pressable in any order", none,
                  none ? "no order among 6 permutations succeeds; search finds none" : "a successful order exists");
}

/// Bicolored graph from a colour mask and an edge mask.
inline Pseudograph bicolored_from_masks(std::size_t n, std::uint64_t colours, std::uint64_t edges) {
    Mat w(Field::make(2), n, n);
    for (std::size_t i = 0; i < n; ++i) w.raw(i, i) = colours >> i & 1;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k)
            if (edges >> k & 1) w.raw(i, j) = w.raw(j, i) = 1;
    return Pseudograph(std::move(w));
}

/// The GF(2) component rule against exhaustive search. Every graph with at
/// most `exhaustive_n` vertices, then `samples` random graphs on `sample_n`.
inline CheckReport check_component_rule(std::size_t exhaustive_n, std::size_t sample_n, std::size_t samples, std::uint64_t seed) {
    std::size_t graphs = 0, bad = 0;
    std::string example;
    FindOrderOptions opts;
    opts.max_vertices = std::max(exhaustive_n, sample_n);
    auto check = [&](const Pseudograph& g) {
        ++graphs;
        if (find_order(g, opts).has_value() != every_component_has_positive_vertex(g) && bad++ == 0) {
            example = graph_to_json(g).dump();
        }
    };
    for (std::size_t n = 1; n <= exhaustive_n; ++n) {
        const std::uint64_t edge_masks = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c)
            for (std::uint64_t e = 0; e < edge_masks; ++e) check(bicolored_from_masks(n, c, e));
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < samples; ++t) {
        const auto bits = sample_n * (sample_n - 1) / 2;
        check(bicolored_from_masks(sample_n, rng() & ((std::uint64_t{1} << sample_n) - 1), rng() & ((std::uint64_t{1} << bits) - 1)));
    }
    return report("component-rule", "over GF(2) a graph is pressable iff every component has a blue vertex", bad == 0,
                  std::to_string(graphs) + " graphs (all with n <= " + std::to_string(exhaustive_n) + ", " +
                      std::to_string(samples) + " random with n = " + std::to_string(sample_n) + ", seed " +
                      std::to_string(seed) + "), " + std::to_string(bad) + " mismatches" + (bad ? ", first " + example : ""));
}

} // namespace bench

/// The concrete counterexamples, each with its exact matrices.
inline std::vector<CheckReport> verify_counterexamples() {
    using bench::report;
    using bench::show;
    using bench::vals;
    const auto f2 = Field::make(2), f3 = Field::make(3), f7 = Field::make(7);
    auto M = [](const Field& f, std::vector<std::vector<std::int64_t>> rows) { return Mat::from_ints(f, rows); };
    auto none_positive = [](const std::vector<Elem>& es) {
        return std::none_of(es.begin(), es.end(), [](const Elem& e) { return is_positive(e); });
    };
    std::vector<CheckReport> out;

    {
        auto a = M(f7, {{2, 4}, {4, 2}});
        auto ev = eigenvalues_in_field(a);
        out.push_back(report("eigenvalues-f7-pd", "PD matrix over GF(7) with eigenvalues 6 and 5, neither positive",
                             is_positive_definite(a) && vals(ev) == std::vector<Value>{5, 6} && none_positive(ev),
                             show(a) + ": minors " + show(leading_minors(a)) + ", eigenvalues " + show(ev)));
    }
    {
        auto a = M(f3, {{1, 0, 2}, {0, 1, 1}, {2, 1, 0}});
        auto ev = eigenvalues_in_field(a);
        out.push_back(report("eigenvalues-f3", "GF(3) matrix with eigenvalues 1, 2, 2", vals(ev) == std::vector<Value>{1, 2, 2},
                             show(a) + ": eigenvalues " + show(ev)));
    }
    {
        auto a = M(f7, {{6, 6}, {6, 4}});
        auto ev = eigenvalues_in_field(a);
        const bool all_pos = std::all_of(ev.begin(), ev.end(), [](const Elem& e) { return is_positive(e); });
        out.push_back(report("eigenvalues-f7-not-pd", "positive eigenvalues 1 and 2 yet not PD over GF(7)",
                             vals(ev) == std::vector<Value>{1, 2} && all_pos && !is_positive_definite(a),
                             show(a) + ": eigenvalues " + show(ev) + ", minors " + show(leading_minors(a))));
    }
    {
        auto a = M(f3, {{1, 2, 0}, {2, 2, 0}, {0, 0, 1}});
        auto v = isotropic_vector(a);
        bool ok = is_positive_definite(a) && v.has_value();
        std::string d = show(a);
        if (v) {
            std::vector<Value> raw = vals(*v);
            ok = ok && quadratic_form(a, raw).is_zero();
            d += ": v = " + show(*v) + " has v^T A v = 0";
        }
        out.push_back(report("isotropic", "the quadratic form of a PD matrix vanishes on some nonzero vector", ok, d));
    }
    {
        auto a = M(f3, {{1, 2, 0}, {2, 2, 0}, {0, 0, 1}});
        auto s = principal_submatrix(a, std::vector<std::size_t>{0});
        auto b = M(f2, {{1, 1, 0}, {1, 0, 0}, {0, 0, 1}});
        auto t = principal_submatrix(b, std::vector<std::size_t>{0});
        out.push_back(report("submatrix", "PD matrices with principal submatrices that are not PD",
                             is_positive_definite(a) && s == M(f3, {{2, 0}, {0, 1}}) && !is_positive_definite(s) &&
                                 is_positive_definite(b) && t == M(f2, {{0, 0}, {0, 1}}) && !is_positive_definite(t),
                             "GF(3) " + show(a) + " -> " + show(s) + "; GF(2) " + show(b) + " -> " + show(t)));
    }
    {
        auto a = M(f3, {{1, 2, 0}, {2, 2, 0}, {0, 0, 1}});
        auto ai = inverse(a);
        auto b = M(f2, {{1, 1, 1}, {1, 0, 0}, {1, 0, 1}});
        auto bi = inverse(b);
        out.push_back(report("inverse", "PD matrices whose inverses are not PD",
                             is_positive_definite(a) && ai == M(f3, {{2, 1, 0}, {1, 1, 0}, {0, 0, 1}}) &&
                                 !is_positive_definite(ai) && is_positive_definite(b) &&
                                 bi == M(f2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 1}}) && !is_positive_definite(bi),
                             "GF(3) inverse " + show(ai) + "; GF(2) inverse " + show(bi)));
    }
    {
        auto i3 = Mat::identity(f2, 3);
        auto s = i3 + i3;
        out.push_back(report("sum", "I + I over GF(2) is the zero matrix, not PD",
                             is_positive_definite(i3) && s.is_zero() && !is_positive_definite(s), "I + I = " + show(s)));
    }
    {
        auto a = M(f7, {{2, 1}, {1, 5}}), b = M(f7, {{4, 3}, {3, 6}});
        auto aba = a * b * a;
        auto c = M(f2, {{1, 0, 1}, {0, 1, 0}, {1, 0, 0}}), d = M(f2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
        auto cdc = c * d * c;
        out.push_back(report("aba", "PD A and B with ABA not PD",
                             is_positive_definite(a) && is_positive_definite(b) && aba == M(f7, {{6, 1}, {1, 2}}) &&
                                 !is_positive_definite(aba) && is_positive_definite(c) && is_positive_definite(d) &&
                                 cdc == M(f2, {{0, 1, 0}, {1, 1, 0}, {0, 0, 1}}) && !is_positive_definite(cdc),
                             "GF(7) ABA = " + show(aba) + "; GF(2) ABA = " + show(cdc)));
    }
    {
        auto a = M(f7, {{1, 4}, {4, 3}}), b = M(f7, {{2, 2}, {2, 3}});
        auto h = hadamard(a, b);
        auto hd = det(h);
        auto fr = frobenius_inner(a, b);
        out.push_back(report("hadamard-frobenius-f7", "PD pair over GF(7): Hadamard product has det 3, Frobenius product 6",
                             is_positive_definite(a) && is_positive_definite(b) && h == M(f7, {{2, 1}, {1, 2}}) &&
                                 hd.value() == 3 && !is_positive(hd) && !is_positive_definite(h) && fr.value() == 6 &&
                                 !is_positive(fr),
                             "A o B = " + show(h) + ", det " + hd.to_string() + ", A : B = " + fr.to_string()));
    }
    {
        auto a = M(f2, {{1, 1, 0}, {1, 0, 1}, {0, 1, 0}}), b = M(f2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
        auto h = hadamard(a, b);
        out.push_back(report("hadamard-f2", "PD pair over GF(2) whose Hadamard product is not PD",
                             is_positive_definite(a) && is_positive_definite(b) && h == M(f2, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}) &&
                                 !is_positive_definite(h),
                             "H = " + show(h) + ", minors " + show(leading_minors(h))));
    }
    {
        auto a = M(f2, {{1, 0, 0}, {0, 1, 1}, {0, 1, 0}}), b = M(f2, {{1, 0, 1}, {0, 1, 0}, {1, 0, 0}});
        auto fr = frobenius_inner(a, b);
        out.push_back(report("frobenius-f2", "PD pair over GF(2) with Frobenius product 0",
                             is_positive_definite(a) && is_positive_definite(b) && fr.is_zero(), "A : B = " + fr.to_string()));
    }
    return out;
}

/// Exhaustive and randomized checks of the positive results. Checks run in
/// parallel; the report order is fixed.
inline std::vector<CheckReport> verify_theorems(const TheoremLimits& limits = {}) {
    if (limits.q_max < 2 || limits.q_max > 4096) throw Error(ErrorKind::LimitExceeded, "q_max must lie in [2, 4096]");
    if (limits.n_max < 1 || limits.n_max > 3) throw Error(ErrorKind::LimitExceeded, "n_max must lie in [1, 3]");
    if (limits.random_pairs > 100000) throw Error(ErrorKind::LimitExceeded, "at most 100000 random pairs");
    if (limits.component_samples > 1000000) throw Error(ErrorKind::LimitExceeded, "at most 10^6 component samples");

    using Batch = std::vector<CheckReport>;
    auto one = [](CheckReport r) { return Batch{std::move(r)}; };
    std::vector<std::future<Batch>> jobs;
    auto spawn = [&](auto fn) { jobs.push_back(std::async(std::launch::async, fn)); };
    spawn([&] { return one(bench::check_classification(limits.q_max)); });
    spawn([&] { return one(bench::check_minors_vs_cholesky(limits.n_max)); });
    spawn([&] { return one(bench::check_gram(limits.n_max)); });
    spawn([&] { return one(bench::check_gram_hereditary(limits.n_max)); });
    spawn([&] { return one(bench::check_cholesky_unique(limits.n_max)); });
    spawn([&] { return bench::check_products(limits.n_max, limits.random_pairs, limits.seed); });
    spawn([&] { return one(bench::check_pressing_theorem()); });
    spawn([&] { return one(bench::check_f3_triangle()); });
    spawn([&] { return one(bench::check_component_rule(6, 7, limits.component_samples, limits.seed)); });

    Batch out;
    for (auto& j : jobs)
        for (auto& r : j.get()) out.push_back(std::move(r));
    return out;
}

inline const char* status_name(CheckStatus s) { return s == CheckStatus::Pass ? "PASS" : "FAIL"; }

inline bool all_pass(const std::vector<CheckReport>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckReport& r) { return r.status == CheckStatus::Pass; });
}

inline ordered_json reports_to_json(const std::vector<CheckReport>& rs, std::uint64_t seed) {
    ordered_json j;
    j["seed"] = seed;
    j["all_pass"] = all_pass(rs);
    j["checks"] = ordered_json::array();
    for (const auto& r : rs) {
        ordered_json c;
        c["name"] = r.name;
        c["anchor"] = r.anchor;
        c["status"] = status_name(r.status);
        c["details"] = r.details;
        j["checks"].push_back(std::move(c));
    }
    return j;
}

/// One row per check: status, name, claim, evidence.
inline std::string reports_to_text(const std::vector<CheckReport>& rs) {
    std::size_t w = 4;
    for (const auto& r : rs) w = std::max(w, r.name.size());
    std::ostringstream out;
    for (const auto& r : rs) {
        out << status_name(r.status) << "  " << r.name << std::string(w - r.name.size(), ' ') << "  " << r.anchor << "\n"
            << "      " << std::string(w, ' ') << "  " << r.details << "\n";
    }
    return out.str();
}

} // namespace ffpd
