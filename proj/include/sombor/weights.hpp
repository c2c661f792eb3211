#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "qsqrt2.hpp"

namespace sombor {

enum class WeightKind { exact_rational, exact_sqrt2_multiple, irrational_float };

// sqrt(d_i^2 + d_j^2) for one edge. The squared integer is always kept; the
// value is exact in Q(sqrt2) when the square is k^2 or 2k^2, float otherwise.
struct SomborWeight {
    WeightKind kind;
    std::int64_t squared; // d_i^2 + d_j^2, exact
    QSqrt2 exact;         // meaningful unless kind == irrational_float
    double value;         // float view, always usable
};

namespace detail {
inline std::int64_t isqrt64(std::int64_t s) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(s)));
    while (r > 0 && r * r > s) --r;
    while ((r + 1) * (r + 1) <= s) ++r;
    return r;
}
} // namespace detail

inline SomborWeight sombor_weight(int di, int dj) {
    if (di < 1 || dj < 1)
        throw std::invalid_argument("sombor_weight: degrees must be >= 1 on an edge");
    std::int64_t s = static_cast<std::int64_t>(di) * di + static_cast<std::int64_t>(dj) * dj;
    std::int64_t r = detail::isqrt64(s);
    if (r * r == s) {
        QSqrt2 v(static_cast<long>(r));
        return {WeightKind::exact_rational, s, v, static_cast<double>(r)};
    }
    if (s % 2 == 0) {
        std::int64_t h = s / 2;
        std::int64_t k = detail::isqrt64(h);
        if (k * k == h) {
            QSqrt2 v = QSqrt2::sqrt2(static_cast<long>(k));
            return {WeightKind::exact_sqrt2_multiple, s, v, v.to_double()};
        }
    }
    return {WeightKind::irrational_float, s, QSqrt2(), std::sqrt(static_cast<double>(s))};
}

// Symmetric n x n Sombor matrix with zero diagonal. Entries are stored once
// per edge; (i,j) lookups go through an index table. all_exact is true iff
// every edge weight lives in Q(sqrt2).
class SomborMatrix {
public:
    explicit SomborMatrix(const Graph& g) : n_(g.n()), idx_(static_cast<std::size_t>(n_) * n_, -1) {
        all_exact_ = true;
        for (auto [u, v] : g.edges()) {
            SomborWeight w = sombor_weight(g.degree(u), g.degree(v));
            if (w.kind == WeightKind::irrational_float) all_exact_ = false;
            int id = static_cast<int>(weights_.size());
            weights_.push_back(w);
            idx_[static_cast<std::size_t>(u) * n_ + v] = id;
            idx_[static_cast<std::size_t>(v) * n_ + u] = id;
        }
    }

    int n() const { return n_; }
    bool all_exact() const { return all_exact_; }
    int edge_count() const { return static_cast<int>(weights_.size()); }

    const SomborWeight* entry(int i, int j) const {
        check(i);
        check(j);
        int id = idx_[static_cast<std::size_t>(i) * n_ + j];
        return id < 0 ? nullptr : &weights_[id];
    }

    QSqrt2 exact_entry(int i, int j) const {
        const SomborWeight* w = entry(i, j);
        if (!w) return QSqrt2();
        if (w->kind == WeightKind::irrational_float)
            throw std::logic_error("SomborMatrix: exact view of an irrational entry");
        return w->exact;
    }

    double float_entry(int i, int j) const {
        const SomborWeight* w = entry(i, j);
        return w ? w->value : 0.0;
    }

    std::vector<double> dense_float() const {
        std::vector<double> a(static_cast<std::size_t>(n_) * n_, 0.0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const SomborWeight* w = entry(i, j);
                if (w) a[static_cast<std::size_t>(i) * n_ + j] = w->value;
            }
        return a;
    }

    const std::vector<SomborWeight>& edge_weights() const { return weights_; }

private:
    void check(int i) const {
        if (i < 0 || i >= n_)
            throw std::out_of_range("SomborMatrix: index " + std::to_string(i) + " out of range");
    }

    int n_;
    bool all_exact_;
    std::vector<int> idx_;
    std::vector<SomborWeight> weights_;
};

inline SomborMatrix sombor_matrix(const Graph& g) { return SomborMatrix(g); }

struct SomborIndex {
    double value;
    std::optional<QSqrt2> exact; // present when every edge weight is exact
};

inline SomborIndex sombor_index(const Graph& g) {
    SomborMatrix m(g);
    double v = 0;
    QSqrt2 ex;
    for (const auto& w : m.edge_weights()) {
        v += w.value;
        if (m.all_exact()) ex += w.exact;
    }
    SomborIndex out{v, std::nullopt};
    if (m.all_exact()) {
        out.exact = ex;
        out.value = ex.to_double(); // tighter than the running float sum
    }
    return out;
}

// F(G) = sum of d_v^3; also equal to the edge sum of d_u^2 + d_v^2.
// Both forms are computed and cross-checked.
inline std::int64_t forgotten_index(const Graph& g) {
    std::int64_t by_vertex = 0;
    for (int v = 0; v < g.n(); ++v) {
        std::int64_t d = g.degree(v);
        by_vertex += d * d * d;
    }
    std::int64_t by_edge = 0;
    for (auto [u, v] : g.edges()) {
        std::int64_t du = g.degree(u), dv = g.degree(v);
        by_edge += du * du + dv * dv;
    }
    if (by_vertex != by_edge)
        throw std::logic_error("forgotten_index: vertex and edge forms disagree");
    return by_vertex;
}

} // namespace sombor
