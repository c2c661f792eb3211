#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charpoly.hpp"
#include "jacobi.hpp"
#include "weights.hpp"

namespace sombor {

struct SpectrumReport {
    std::vector<double> eigenvalues; // descending
    double energy = 0;
    double mcclelland_bound = 0;
    double koolen_moulton_bound = 0;
    bool koolen_moulton_clamped = false; // radicand went negative and was clamped
    double residual = 0;
    std::optional<QSqrt2> exact_energy; // regular graphs with fully rational adjacency spectrum
};

inline double mcclelland_bound(const Graph& g) {
    if (g.n() < 1) return 0;
    return std::sqrt(2.0 * g.n() * static_cast<double>(forgotten_index(g)));
}

inline double koolen_moulton_bound(const Graph& g, bool* clamped = nullptr) {
    if (clamped) *clamped = false;
    if (g.n() < 1) return 0;
    double n = g.n();
    double so = sombor_index(g).value;
    double f = static_cast<double>(forgotten_index(g));
    double head = 2.0 * so / n;
    double radicand = (n - 1) * (2.0 * f - head * head);
    if (radicand < 0) {
        // only float noise can get here (Cauchy-Schwarz keeps it nonnegative)
        radicand = 0;
        if (clamped) *clamped = true;
    }
    return head + std::sqrt(radicand);
}

namespace detail {

// Plain adjacency characteristic polynomial (integer coefficients) through
// the same exact engine, with 0/1 entries lifted into Q(sqrt2).
inline ExactPoly adjacency_charpoly(const Graph& g) {
    const int n = g.n();
    std::vector<QSqrt2> a(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = QSqrt2(1);
    return faddeev_leverrier_dense(a, n);
}

// Deflate integer roots out of a monic integer polynomial, trying
// -bound..bound with multiplicity. Returns (roots, residual degree).
inline std::pair<std::vector<long>, int> integer_roots(std::vector<mpz_class> c, long bound) {
    std::vector<long> roots;
    bool changed = true;
    while (changed && c.size() > 1) {
        changed = false;
        for (long r = -bound; r <= bound && !changed; ++r) {
            mpz_class val = 0;
            for (std::size_t i = c.size(); i-- > 0;) val = val * r + c[i];
            if (val != 0) continue;
            // synthetic division by (x - r)
            std::vector<mpz_class> q(c.size() - 1);
            q.back() = c.back();
            for (std::size_t i = c.size() - 2; i-- > 0;) q[i] = c[i + 1] + r * q[i + 1];
            c = std::move(q);
            roots.push_back(r);
            changed = true;
        }
    }
    return {roots, static_cast<int>(c.size()) - 1};
}

// For a k-regular graph: if the adjacency char poly splits into integer
// linear factors, the Sombor energy is exactly k * sum|roots| * sqrt2.
inline std::optional<QSqrt2> exact_regular_energy(const Graph& g) {
    int k = 0;
    if (!g.is_regular(&k)) return std::nullopt;
    ExactPoly ap = adjacency_charpoly(g);
    std::vector<mpz_class> c;
    c.reserve(ap.coeffs().size());
    for (const auto& q : ap.coeffs()) {
        if (!q.is_rational() || q.rational_part().get_den() != 1)
            throw std::logic_error("adjacency charpoly expected integer coefficients");
        c.push_back(q.rational_part().get_num());
    }
    if (c.empty()) return QSqrt2(0); // n = 0
    auto [roots, resid] = integer_roots(std::move(c), k);
    if (resid != 0) return std::nullopt; // spectrum not fully rational
    long s = 0;
    for (long r : roots) s += std::abs(r);
    return QSqrt2::sqrt2(mpq_class(static_cast<long>(k) * s));
}

} // namespace detail

inline SpectrumReport sombor_energy(const Graph& g, double tol = 1e-13) {
    SpectrumReport rep;
    if (g.n() == 0) return rep;
    SomborMatrix m(g);
    EigenResult eig = jacobi_eigen(m.dense_float(), m.n(), tol);
    rep.eigenvalues = eig.values;
    rep.residual = eig.residual;
    for (double v : rep.eigenvalues) rep.energy += std::abs(v);
    rep.mcclelland_bound = mcclelland_bound(g);
    rep.koolen_moulton_bound = koolen_moulton_bound(g, &rep.koolen_moulton_clamped);

    int k = 0;
    if (g.is_regular(&k) && k > 0) {
        // cross-check: Sombor spectrum of a k-regular graph is k*sqrt2 times
        // the adjacency spectrum
        std::vector<double> adj(static_cast<std::size_t>(g.n()) * g.n(), 0.0);
        for (int u = 0; u < g.n(); ++u)
            for (int v : g.neighbors(u)) adj[static_cast<std::size_t>(u) * g.n() + v] = 1.0;
        EigenResult ae = jacobi_eigen(std::move(adj), g.n(), tol);
        double scale = k * std::sqrt(2.0);
        for (int i = 0; i < g.n(); ++i)
            if (std::abs(rep.eigenvalues[i] - scale * ae.values[i]) > 1e-9 * std::max(1.0, std::abs(rep.eigenvalues[i])))
                throw std::logic_error("regular-graph spectrum scaling check failed");
        rep.exact_energy = detail::exact_regular_energy(g);
        if (rep.exact_energy) rep.energy = rep.exact_energy->to_double();
    } else if (g.m() == 0) {
        rep.exact_energy = QSqrt2(0);
    }
    return rep;
}

// Closed-form energies. multiplier * sqrt(radicand) with the radicand made
// squarefree, plus the double value.
struct RadicalEnergy {
    std::int64_t multiplier;
    std::int64_t radicand;
    double value;
};

namespace detail {
inline RadicalEnergy reduce_radical(std::int64_t mult, std::int64_t rad) {
    for (std::int64_t d = 2; d * d <= rad; ++d)
        while (rad % (d * d) == 0) {
            rad /= d * d;
            mult *= d;
        }
    double v = (rad == 1) ? static_cast<double>(mult)
                          : static_cast<double>(mult) * std::sqrt(static_cast<double>(rad));
    return {mult, rad, v};
}
} // namespace detail

// En(S_n) = 2 sqrt((n-1)(n^2 - 2n + 2))
inline RadicalEnergy energy_star(int n) {
    if (n < 2) throw std::invalid_argument("energy_star: need n >= 2");
    std::int64_t q = static_cast<std::int64_t>(n - 1) *
                     (static_cast<std::int64_t>(n) * n - 2 * n + 2);
    return detail::reduce_radical(2, q);
}

// En(K_n) = 2 (n-1)^2 sqrt2
inline QSqrt2 energy_complete(int n) {
    if (n < 1) throw std::invalid_argument("energy_complete: need n >= 1");
    mpq_class m = 2 * mpq_class(n - 1) * (n - 1);
    return QSqrt2::sqrt2(m);
}

// En(K_{m,n}) = 2 sqrt(mn(m^2 + n^2))
inline RadicalEnergy energy_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("energy_complete_bipartite: need m, n >= 1");
    std::int64_t q = static_cast<std::int64_t>(m) * n *
                     (static_cast<std::int64_t>(m) * m + static_cast<std::int64_t>(n) * n);
    return detail::reduce_radical(2, q);
}

} // namespace sombor
