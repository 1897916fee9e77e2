#pragma once

// Pressing on F_q-pseudographs.
//
// A pseudograph is a symmetric weight function on V x V, stored as its
// weighted adjacency matrix. Pressing a vertex v whose loop weight is
// positive replaces every weight f(x,y) by
//
//     f(x,y) - f(x,v) f(y,v) / f(v,v)
//
// which is one step of swap-free symmetric Gaussian elimination with the
// pivot row eliminated as well. A pressing sequence succeeds when it reaches
// the all-zero pseudograph; over a definite field that happens exactly when
// the adjacency matrix, rows ordered by the sequence, has a (relaxed)
// Cholesky factorization.
//
// Vertices are 0-based here.

#include "linalg.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ffpd {

class Pseudograph {
public:
    explicit Pseudograph(Mat weights) : w_(std::move(weights)) {
        detail::require_square(w_);
        if (!w_.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "pseudograph weights must be symmetric");
    }

    /// n isolated vertices of weight zero.
    static Pseudograph empty(const Field& f, std::size_t n) { return Pseudograph(Mat(f, n, n)); }

    const Mat& weights() const noexcept { return w_; }
    const Field& field() const noexcept { return w_.field(); }
    std::size_t n() const noexcept { return w_.rows(); }
    Elem weight(std::size_t x, std::size_t y) const { return w_.at(x, y); }

    bool is_pressable(std::size_t v) const noexcept { return v < n() && is_positive(field(), w_.raw(v, v)); }

    std::vector<std::size_t> pressable() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n(); ++v)
            if (is_pressable(v)) out.push_back(v);
        return out;
    }

    /// All weights zero: the empty, edgeless, colorless state.
    bool is_cleared() const noexcept { return w_.is_zero(); }

    friend bool operator==(const Pseudograph& a, const Pseudograph& b) noexcept { return a.w_ == b.w_; }

private:
    Mat w_;
};

/// GF(2) pseudograph of a bicolored graph: loop 1 on blue vertices, edge
/// weight 1 on each listed edge.
inline Pseudograph from_bicolored(std::size_t n, std::span<const std::size_t> blue,
                                  std::span<const std::pair<std::size_t, std::size_t>> edges) {
    const auto f = Field::make(2);
    Mat w(f, n, n);
    for (auto v : blue) {
        if (v >= n) throw Error(ErrorKind::IndexOutOfRange, "blue vertex " + std::to_string(v + 1) + " out of range", v);
        w.raw(v, v) = 1;
    }
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw Error(ErrorKind::IndexOutOfRange, "edge endpoint out of range", a >= n ? a : b);
        }
        if (a == b) throw Error(ErrorKind::SelfLoopEdge, "edge from vertex " + std::to_string(a + 1) + " to itself", a);
        w.raw(a, b) = w.raw(b, a) = 1;
    }
    return Pseudograph(std::move(w));
}

inline Pseudograph press(const Pseudograph& g, std::size_t v) {
    if (v >= g.n()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v + 1) + " out of range", v);
    const auto& f = g.field();
    const auto& a = g.weights();
    const auto loop = a.raw(v, v);
    if (!is_positive(f, loop)) {
        throw Error(ErrorKind::NonPositiveLoop,
                    "vertex " + std::to_string(v + 1) + " has loop weight " + f.format(loop) + ", which is not positive", v);
    }
    const auto loop_inv = f.inv(loop);
    Mat out = a;
    for (std::size_t x = 0; x < g.n(); ++x) {
        const auto xv = a.raw(x, v);
        if (!xv) continue;
        const auto scaled = f.mul(xv, loop_inv);
        for (std::size_t y = 0; y < g.n(); ++y) {
            const auto yv = a.raw(y, v);
            if (yv) out.raw(x, y) = f.sub(a.raw(x, y), f.mul(scaled, yv));
        }
    }
    return Pseudograph(std::move(out));
}

enum class PressStatus { Success, Stuck };

struct PressOutcome {
    PressStatus status;
    std::vector<std::size_t> steps_applied;
    Pseudograph final_state;
    std::optional<std::size_t> stuck_vertex;
};

namespace detail {
inline void require_distinct_in_range(std::size_t n, std::span<const std::size_t> order) {
    std::vector<bool> seen(n, false);
    for (auto v : order) {
        if (v >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v + 1) + " out of range", v);
        if (seen[v]) throw Error(ErrorKind::DuplicateVertex, "vertex " + std::to_string(v + 1) + " listed twice", v);
        seen[v] = true;
    }
}
} // namespace detail

/// Presses `order` in turn. Once the pseudograph is cleared the remaining
/// entries are vacuous and the run is a Success; hitting a vertex whose loop
/// is not positive first ends it as Stuck at that vertex. Running out of
/// entries with weight left over is also Stuck, with no stuck vertex.
inline PressOutcome run_sequence(const Pseudograph& g, std::span<const std::size_t> order) {
    detail::require_distinct_in_range(g.n(), order);
    PressOutcome out{PressStatus::Stuck, {}, g, std::nullopt};
    for (auto v : order) {
        if (out.final_state.is_cleared()) break;
        if (!out.final_state.is_pressable(v)) {
            out.stuck_vertex = v;
            return out;
        }
        out.final_state = press(out.final_state, v);
        out.steps_applied.push_back(v);
    }
    if (out.final_state.is_cleared()) out.status = PressStatus::Success;
    return out;
}

/// Decides a full vertex order through the matrix side: the weights,
/// permuted into `order`, must admit a relaxed Cholesky factorization. Over a
/// non-definite field, where the factor itself need not exist, the same
/// positive-pivot elimination decides.
inline bool order_is_successful(const Pseudograph& g, std::span<const std::size_t> order) {
    const auto permuted = permute_symmetric(g.weights(), order);
    if (!is_definite(g.field())) return relaxed_pivot_rank(permuted).has_value();
    try {
        cholesky_psd(permuted);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotPositiveDefinite) return false;
        throw;
    }
}

/// Every connected component of the support graph (vertices with a nonzero
/// loop or at least one nonzero edge) contains a vertex with positive loop.
/// Over GF(2) this decides pressability in some order.
inline bool every_component_has_positive_vertex(const Pseudograph& g) {
    const auto n = g.n();
    const auto& a = g.weights();
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> stack{s}, comp;
        seen[s] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (std::size_t w = 0; w < n; ++w) {
                if (w != u && a.raw(u, w) && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        if (comp.size() == 1 && a.raw(s, s) == 0) continue;
        if (std::none_of(comp.begin(), comp.end(), [&](auto u) { return g.is_pressable(u); })) return false;
    }
    return true;
}

struct FindOrderOptions {
    std::size_t max_vertices = 10;
    /// Over GF(2), answer "none" from the component characterization instead
    /// of exhausting the search. Below `cross_check_below` vertices the search
    /// still runs and must agree.
    bool gf2_shortcut = false;
    std::size_t cross_check_below = 9;
};

namespace detail {
struct ValuesHash {
    std::size_t operator()(const std::vector<Value>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ std::hash<Value>{}(x)) * 1099511628211ull;
        return h;
    }
};

inline bool search_order(const Pseudograph& g, std::vector<std::size_t>& path,
                         std::unordered_set<std::vector<Value>, ValuesHash>& dead) {
    if (g.is_cleared()) return true;
    std::vector<Value> key(g.weights().data().begin(), g.weights().data().end());
    if (dead.contains(key)) return false;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (!g.is_pressable(v)) continue;
        path.push_back(v);
        if (search_order(press(g, v), path, dead)) return true;
        path.pop_back();
    }
    dead.insert(std::move(key));
    return false;
}
} // namespace detail

/// Depth-first search for the lexicographically first successful pressing
/// sequence (possibly shorter than n). Branches on pressable vertices in
/// ascending order and remembers dead-end weight matrices.
inline std::optional<std::vector<std::size_t>> find_order(const Pseudograph& g, const FindOrderOptions& opts = {}) {
    const bool shortcut = opts.gf2_shortcut && g.field().q() == 2;
    if (shortcut && !every_component_has_positive_vertex(g)) {
        if (g.n() < opts.cross_check_below) {
            FindOrderOptions plain = opts;
            plain.gf2_shortcut = false;
            if (find_order(g, plain)) throw std::logic_error("GF(2) component shortcut disagrees with search");
        }
        return std::nullopt;
    }
    if (g.n() > opts.max_vertices) {
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    std::to_string(g.n()) + " vertices exceeds the search bound " + std::to_string(opts.max_vertices));
    }
    std::vector<std::size_t> path;
    std::unordered_set<std::vector<Value>, detail::ValuesHash> dead;
    if (detail::search_order(g, path, dead)) return path;
    return std::nullopt;
}

/// Row supports of the upper factor L^T of the relaxed Cholesky factorization
/// of the weights permuted into `order`: entry i lists the vertices (original
/// labels) whose weights change when the i-th vertex of `order` is pressed.
inline std::vector<std::vector<std::size_t>> instructions_from_cholesky(const Pseudograph& g,
                                                                        std::span<const std::size_t> order) {
    const auto permuted = permute_symmetric(g.weights(), order);
    CholResult chol = [&] {
        try {
            return cholesky_psd(permuted);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPositiveDefinite) throw;
            throw Error(ErrorKind::NotPressable, "order is not a successful pressing sequence", e.index());
        }
    }();
    std::vector<std::vector<std::size_t>> out(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = 0; j < g.n(); ++j)
            if (chol.L.raw(j, i)) out[i].push_back(order[j]);
        std::sort(out[i].begin(), out[i].end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Interactive sessions
// ---------------------------------------------------------------------------

struct SomeOrder {
    enum class Kind { Found, None, TooLarge } kind;
    std::vector<std::size_t> order; // continuation from the current state when Found
};

struct SessionAnalysis {
    std::vector<std::size_t> pressable;
    SomeOrder some_order;
    /// The log so far, extended by greedily pressing the smallest pressable
    /// vertex, then padded with the unused vertices, passes order_is_successful.
    bool pd_in_current_order;
};

class PressSession {
public:
    PressSession(Pseudograph g, std::string id = {}) : id_(std::move(id)), history_{std::move(g)} {}

    const std::string& id() const noexcept { return id_; }
    const Pseudograph& initial() const noexcept { return history_.front(); }
    const Pseudograph& current() const noexcept { return history_.back(); }
    const std::vector<std::size_t>& log() const noexcept { return log_; }
    const std::vector<Pseudograph>& history() const noexcept { return history_; }
    std::vector<std::size_t> pressable() const { return current().pressable(); }
    bool finished() const noexcept { return current().is_cleared(); }

    void press(std::size_t v) {
        auto next = ffpd::press(current(), v);
        history_.push_back(std::move(next));
        log_.push_back(v);
    }

    void undo() {
        if (log_.empty()) throw Error(ErrorKind::NothingToUndo, "no press to undo");
        history_.pop_back();
        log_.pop_back();
    }

    SessionAnalysis analyze(const FindOrderOptions& opts = {}) const {
        SessionAnalysis a{pressable(), {SomeOrder::Kind::None, {}}, false};
        if (current().n() > opts.max_vertices) {
            a.some_order.kind = SomeOrder::Kind::TooLarge;
        } else if (auto found = find_order(current(), opts)) {
            a.some_order = {SomeOrder::Kind::Found, std::move(*found)};
        }

        std::vector<std::size_t> order = log_;
        auto g = current();
        while (!g.is_cleared()) {
            auto options = g.pressable();
            if (options.empty()) break;
            g = ffpd::press(g, options.front());
            order.push_back(options.front());
        }
        std::vector<bool> used(g.n(), false);
        for (auto v : order) used[v] = true;
        for (std::size_t v = 0; v < g.n(); ++v)
            if (!used[v]) order.push_back(v);
        a.pd_in_current_order = order_is_successful(initial(), order);
        return a;
    }

private:
    std::string id_;
    std::vector<Pseudograph> history_;
    std::vector<std::size_t> log_;
};

} // namespace ffpd
